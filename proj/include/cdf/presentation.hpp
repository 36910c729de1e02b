#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "cdf/groebner.hpp"

namespace cdf {

class AlgebraPresentation;
using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

/// A finitely presented commutative algebra over a base ring: named
/// generators, relation polynomials, and optionally declared inverse pairs
/// (g, gbar) with the relation g*gbar - 1.  Free polynomial algebras have no
/// relations; "smooth" presentations have no relations beyond inverse pairs.
class AlgebraPresentation : public std::enable_shared_from_this<AlgebraPresentation> {
 public:
  /// The inverse-pair relations are appended when missing.
  static PresentationPtr make(Ring base, std::vector<std::string> vars, std::vector<Poly> relations = {},
                              std::vector<std::pair<std::string, std::string>> inverse_pairs = {},
                              GroebnerLimits lim = {});
  static PresentationPtr free_algebra(Ring base, std::vector<std::string> vars, GroebnerLimits lim = {});

  const PolyRingPtr& ring() const { return ring_; }
  const Ring& base() const { return ring_->base(); }
  const std::vector<Poly>& relations() const { return relations_; }
  const std::vector<std::pair<int, int>>& inverse_pairs() const { return pairs_; }
  const GroebnerLimits& limits() const { return limits_; }

  bool is_free() const { return relations_.empty(); }
  /// True when the only relations are the declared inverse pairs, so the
  /// algebra is a localization of a free polynomial algebra and has a free
  /// module of differentials on the primary generators.
  bool is_smooth() const;

  /// Generators that are not the second member of an inverse pair.
  const std::vector<int>& primary_vars() const { return primary_; }
  bool is_primary(int var) const;
  /// Partner of an inverse-pair member, -1 otherwise.
  int partner_of(int var) const;

  const Ideal& relation_ideal() const { return ideal_; }
  /// Normal form modulo the relations (identity for free algebras).
  Poly reduce(const Poly& p) const;
  bool equivalent(const Poly& a, const Poly& b) const { return reduce(a - b).is_zero(); }

  /// Derivation d/d(var) for a primary generator, with the chain rule
  /// d(gbar) = -gbar^2 d(g) on inverse partners.  Requires smoothness.
  Poly derive(const Poly& p, int primary_var) const;

  /// Inverse of a unit in the quotient algebra; UnitError when not a unit.
  Poly inverse_of(const Poly& c) const;

  std::string describe() const;

 private:
  AlgebraPresentation() = default;
  PolyRingPtr ring_;
  std::vector<Poly> relations_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> primary_;
  GroebnerLimits limits_;
  Ideal ideal_;
  mutable std::mutex inv_mu_;
  mutable std::map<std::string, Poly> inv_cache_;
};

}  // namespace cdf
