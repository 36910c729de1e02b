#pragma once

#include <mutex>
#include <vector>

#include "cdf/poly.hpp"

namespace cdf {

/// Caps on ideal computations: exceeding either raises ResourceError
/// instead of hanging.
struct GroebnerLimits {
  int max_degree = 12;
  size_t max_basis = 5000;
};

/// Full normal form of p against a list of polynomials: every term of the
/// result is divisible by no leading term of the list.  Deterministic
/// (first listed reducer wins).
Poly reduce_full(const Poly& p, const std::vector<Poly>& basis, const GroebnerLimits& lim = {});

/// Reduced Groebner basis in the ring's own monomial order (Buchberger with
/// the coprime and chain criteria).  Requires a field base ring.
std::vector<Poly> reduced_groebner_basis(const PolyRingPtr& ring, const std::vector<Poly>& gens,
                                         const GroebnerLimits& lim = {});

/// An ideal in a fixed polynomial ring.  Immutable; the reduced Groebner
/// basis is computed once on first use and shared between copies, so
/// handles can be passed around and used concurrently.
class Ideal {
 public:
  Ideal() = default;
  Ideal(PolyRingPtr ring, std::vector<Poly> gens, GroebnerLimits lim = {});

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const GroebnerLimits& limits() const { return limits_; }
  const std::vector<Poly>& groebner_basis() const;

  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const;
  bool contains_ideal(const Ideal& o) const;
  bool same_ideal(const Ideal& o) const;

  Ideal sum(const Ideal& o) const;
  /// Generated by all pairwise products of generators.
  Ideal product(const Ideal& o) const;
  /// Intersection via a tag variable and an elimination order.
  Ideal intersect(const Ideal& o) const;

 private:
  void check_ring(const Ideal& o) const;
  PolyRingPtr ring_;
  std::vector<Poly> gens_;
  GroebnerLimits limits_;
  struct Cache {
    std::once_flag once;
    std::vector<Poly> gb;
    std::exception_ptr error;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace cdf
