#pragma once

#include <map>

#include "cdf/presentation.hpp"

namespace cdf {

/// Weak rings impose squares of all pairwise difference ideals; strong
/// rings additionally kill the mixed products d(0,r)b * d(0,s)b.  The two
/// coincide when 2 is invertible.
enum class Flavor { Weak, Strong };

/// Structured: exact normal forms on an epsilon basis (free base algebras).
/// Generic: normal forms against a Groebner basis of the defining ideal in
/// the ambient polynomial ring on slot variables (any base algebra).
enum class EngineKind { Structured, Generic };

/// A map {0..source} -> {0..target} between simplicial index sets.
/// pullback along it substitutes the slot-phi(i) universal point for the
/// slot-i one.
struct IndexMap {
  int source = 0;
  int target = 0;
  std::vector<int> images;

  static IndexMap of(std::vector<int> images, int target);
  static IndexMap identity(int n);
  /// {0..n} -> {0..n+1} hitting everything except i (Cech face term).
  static IndexMap skip(int i, int n);
  /// {0..n} -> {0..n-1} taking the value i twice (degeneracy pullback).
  static IndexMap repeat(int i, int n);
  /// Index map of the partial multiplication m_{r,s}: slot s material lands
  /// in slot r, higher slots shift down.
  static IndexMap merge(int r, int s, int n);
  /// A permutation of {0..n} acting by place swaps.
  static IndexMap permutation(const std::vector<int>& sigma);

  IndexMap then(const IndexMap& next) const;
};

/// Key of a structured-engine basis monomial: a product of generators
/// eps(slot, var) with strictly increasing slots.
struct EpsKey {
  std::vector<std::pair<int, int>> factors;
  bool operator<(const EpsKey& o) const { return factors < o.factors; }
  bool operator==(const EpsKey& o) const = default;
  bool has_repeated_var() const;
};

class SimplexRing;
class SimplexFamily;
using SimplexRingPtr = std::shared_ptr<const SimplexRing>;
using SimplexFamilyPtr = std::shared_ptr<const SimplexFamily>;

/// All simplex rings of one (base algebra, flavor, engine) across degrees.
/// Rings are memoized so Groebner caches are shared by everything that
/// pulls back into the same degree.
class SimplexFamily : public std::enable_shared_from_this<SimplexFamily> {
 public:
  static SimplexFamilyPtr make(PresentationPtr base, Flavor flavor, EngineKind engine, GroebnerLimits lim = {});

  SimplexRingPtr ring(int n) const;
  /// Family with the other engine over the same data (free bases only).
  SimplexFamilyPtr sibling() const;

  const PresentationPtr& base() const { return base_; }
  Flavor flavor() const { return flavor_; }
  EngineKind engine() const { return engine_; }
  const GroebnerLimits& limits() const { return limits_; }

 private:
  friend SimplexFamilyPtr detail_make_family(PresentationPtr, Flavor, EngineKind, GroebnerLimits, bool);
  SimplexFamily() = default;
  PresentationPtr base_;
  Flavor flavor_ = Flavor::Strong;
  EngineKind engine_ = EngineKind::Structured;
  GroebnerLimits limits_;
  bool allow_smooth_ = false;
  mutable std::mutex mu_;
  mutable std::map<int, SimplexRingPtr> rings_;
  mutable SimplexFamilyPtr sibling_;
};

/// Internal factory that also admits structured engines over smooth
/// localized presentations (used for classical-form extraction).
SimplexFamilyPtr detail_make_family(PresentationPtr base, Flavor flavor, EngineKind engine, GroebnerLimits lim,
                                    bool allow_smooth);

class SimplexElement;

/// The coordinate ring of an infinitesimal simplex scheme of a fixed
/// degree over its base algebra.
class SimplexRing : public std::enable_shared_from_this<SimplexRing> {
 public:
  int degree() const { return n_; }
  Flavor flavor() const { return family_->flavor(); }
  EngineKind engine() const { return family_->engine(); }
  const PresentationPtr& base() const { return family_->base(); }
  SimplexFamilyPtr family() const { return family_; }

  SimplexElement zero() const;
  SimplexElement one() const;
  SimplexElement from_scalar(const Scalar& c) const;
  /// b placed at slot 0 (the structure map from the base).
  SimplexElement from_base(const Poly& b) const;
  /// Evaluation of b at the slot-i universal point.
  SimplexElement universal(int i, const Poly& b) const;
  /// d(r,s)b = b at slot s minus b at slot r.
  SimplexElement dgen(int r, int s, const Poly& b) const;
  /// The generator eps(slot, var) = d(0, slot) applied to a base variable.
  SimplexElement eps(int slot, int var) const;

  /// Generic engine only: the ambient polynomial ring, the defining ideal
  /// with its cached Groebner basis, and the variable layout.
  const PolyRingPtr& ambient() const;
  const Ideal& defining_ideal() const;
  int ambient_var(int slot, int var) const;

  std::string describe() const;

 private:
  friend class SimplexFamily;
  friend class SimplexElement;
  SimplexRing() = default;
  void init_generic();
  SimplexElement wrap(std::map<EpsKey, Poly> table) const;
  SimplexElement wrap(Poly ambient_poly) const;  // reduces to normal form
  SimplexFamilyPtr family_;
  int n_ = 0;
  // generic engine state
  PolyRingPtr ambient_;
  Ideal defining_;
};

/// An element of a simplex ring, kept in normal form at all times.
class SimplexElement {
 public:
  SimplexElement() = default;

  const SimplexRingPtr& ring() const { return ring_; }
  bool is_zero() const;

  SimplexElement operator+(const SimplexElement& o) const;
  SimplexElement operator-(const SimplexElement& o) const;
  SimplexElement operator*(const SimplexElement& o) const;
  SimplexElement operator-() const;
  SimplexElement& operator+=(const SimplexElement& o) { return *this = *this + o; }
  SimplexElement& operator-=(const SimplexElement& o) { return *this = *this - o; }
  SimplexElement& operator*=(const SimplexElement& o) { return *this = *this * o; }
  bool operator==(const SimplexElement& o) const;
  bool operator!=(const SimplexElement& o) const { return !(*this == o); }

  SimplexElement scaled(const Scalar& c) const;
  SimplexElement pow(int e) const;

  /// Substitute universal points along an index map; lands in the family
  /// ring of the map's target degree.
  SimplexElement pullback(const IndexMap& phi) const;

  /// Image under the total multiplication down to the base algebra.
  Poly augmentation() const;

  /// Inverse of a unit: invertible augmentation plus nilpotent rest.
  SimplexElement invert() const;

  /// Structured representation: basis key -> base-algebra coefficient.
  const std::map<EpsKey, Poly>& table() const;
  /// Generic representation: ambient normal form.
  const Poly& rep() const;

  std::string to_string() const;

 private:
  friend class SimplexRing;
  SimplexRingPtr ring_;
  std::map<EpsKey, Poly> table_;
  Poly rep_;
};

/// Partial multiplication m_{r,s} applied to an element of degree n,
/// landing in degree n-1.
SimplexElement mult_map(int r, int s, const SimplexElement& e);
/// Splitting section: insert the unit at position r (degree n -> n+1);
/// a one-sided inverse of mult_map(0, r).
SimplexElement splitting_map(int r, const SimplexElement& e);

/// Canonical maps between the two engines over a free base.
SimplexElement lift_to_generic(const SimplexElement& e, const SimplexRingPtr& target);
SimplexElement project_to_structured(const SimplexElement& e, const SimplexRingPtr& target);

/// Round-trip agreement of the element's normal form through the sibling
/// engine.
bool engine_crosscheck(const SimplexElement& e);

/// Evaluate a polynomial with simplex-element images for its variables.
SimplexElement eval_poly(const Poly& p, const std::vector<SimplexElement>& images, const SimplexRingPtr& target);

}  // namespace cdf
