#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cdf/scalar.hpp"

namespace cdf {

/// Exponent vector; length equals the ring's variable count.
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);

/// Degree-reverse-lexicographic order, optionally preceded by an
/// elimination block: the first `elim` variables are compared (degrevlex)
/// before the rest.  elim == 0 is plain degrevlex.
struct MonomialOrder {
  int elim = 0;
  bool operator==(const MonomialOrder&) const = default;
};

/// -1, 0, +1 with +1 meaning a comes later in the order (a > b).
int compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// A polynomial ring context: base ring, named variables, monomial order.
/// Immutable and shared; polynomials hold a pointer to their context.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static PolyRingPtr make(Ring base, std::vector<std::string> vars, MonomialOrder ord = {});

  const Ring& base() const { return base_; }
  const std::vector<std::string>& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }
  int var_index(const std::string& name) const;  // -1 when absent

  /// Structural equality of contexts.
  bool same_as(const PolyRing& o) const { return base_ == o.base_ && vars_ == o.vars_ && order_ == o.order_; }

 private:
  PolyRing(Ring base, std::vector<std::string> vars, MonomialOrder ord)
      : base_(base), vars_(std::move(vars)), order_(ord) {}
  Ring base_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial; terms kept sorted descending in the
/// ring's monomial order, so terms().front() is the leading term.
class Poly {
 public:
  Poly() = default;
  static Poly zero(const PolyRingPtr& r);
  static Poly constant(const PolyRingPtr& r, const Scalar& c);
  static Poly constant(const PolyRingPtr& r, long c);
  static Poly variable(const PolyRingPtr& r, int var, int exp = 1);
  static Poly from_terms(const PolyRingPtr& r, std::vector<Term> terms);  // canonicalizes

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Scalar constant_coefficient() const;
  const Term& leading() const;
  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Scalar& c) const;
  /// this + c * x^m * o  (the workhorse of polynomial reduction).
  Poly add_scaled(const Poly& o, const Scalar& c, const Monomial& m) const;
  Poly pow(int e) const;
  Poly monic() const;  // divide by leading coefficient (field bases)

  /// Formal partial derivative with respect to variable `var`.
  Poly derivative(int var) const;

  /// Ring homomorphism: substitute images[i] for variable i.  All images
  /// must live in one common target ring.
  Poly substitute(const std::vector<Poly>& images) const;

  /// Translate into `target` sending variable i to variable var_map[i];
  /// collisions merge exponents, so collapsing maps evaluate variables at
  /// a common image.
  Poly reindex(const PolyRingPtr& target, const std::vector<int>& var_map) const;

  /// Apply f to every coefficient, dropping zeros.
  Poly map_scalars(const std::function<Scalar(const Scalar&)>& f) const;

  std::string to_string() const;

 private:
  void check_same(const Poly& o) const;
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

Poly operator*(const Scalar& c, const Poly& p);

std::string monomial_to_string(const PolyRing& r, const Monomial& m);

}  // namespace cdf
