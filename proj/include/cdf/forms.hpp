#pragma once

#include "cdf/simplex.hpp"

namespace cdf {

/// Structural agreement of two base-algebra presentations (generators,
/// relations, inverse pairs) without requiring pointer identity.
bool same_presentation(const PresentationPtr& a, const PresentationPtr& b);

/// A classical n-form: element of the n-th exterior power of the module of
/// differentials, on the wedge basis dx_{v1}^...^dx_{vn} with strictly
/// ascending primary variable indices.
class ClassicalForm {
 public:
  ClassicalForm() = default;
  static ClassicalForm zero(PresentationPtr base, int degree);
  /// coeff * dx_{vars[0]} ^ ... ^ dx_{vars.back()}, canonicalized.
  static ClassicalForm term(PresentationPtr base, const Poly& coeff, std::vector<int> vars);
  static ClassicalForm make(PresentationPtr base, int degree, const std::map<std::vector<int>, Poly>& table);

  const PresentationPtr& base() const { return base_; }
  int degree() const { return n_; }
  const std::map<std::vector<int>, Poly>& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  ClassicalForm operator+(const ClassicalForm& o) const;
  ClassicalForm operator-(const ClassicalForm& o) const;
  ClassicalForm operator-() const;
  bool operator==(const ClassicalForm& o) const;
  bool operator!=(const ClassicalForm& o) const { return !(*this == o); }
  ClassicalForm scaled(const Scalar& c) const;
  ClassicalForm scaled(const Poly& b) const;

  std::string to_string() const;

 private:
  friend class WeakClassicalForm;
  PresentationPtr base_;
  int n_ = 0;
  std::map<std::vector<int>, Poly> table_;
};

/// A weak (anti-symmetric) n-form: like ClassicalForm but on the
/// anti-symmetrized tensor basis, where diagonal keys (repeated variables)
/// survive as 2-torsion generators.
class WeakClassicalForm {
 public:
  WeakClassicalForm() = default;
  static WeakClassicalForm zero(PresentationPtr base, int degree);
  static WeakClassicalForm term(PresentationPtr base, const Poly& coeff, std::vector<int> vars);
  static WeakClassicalForm make(PresentationPtr base, int degree, const std::map<std::vector<int>, Poly>& table);

  const PresentationPtr& base() const { return base_; }
  int degree() const { return n_; }
  const std::map<std::vector<int>, Poly>& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  WeakClassicalForm operator+(const WeakClassicalForm& o) const;
  WeakClassicalForm operator-(const WeakClassicalForm& o) const;
  WeakClassicalForm operator-() const;
  bool operator==(const WeakClassicalForm& o) const;
  bool operator!=(const WeakClassicalForm& o) const { return !(*this == o); }
  WeakClassicalForm scaled(const Scalar& c) const;
  WeakClassicalForm scaled(const Poly& b) const;

  /// Kill the diagonal keys; surjective with 2-torsion kernel.
  ClassicalForm projection() const;

  std::string to_string() const;

 private:
  PresentationPtr base_;
  int n_ = 0;
  std::map<std::vector<int>, Poly> table_;
};

ClassicalForm wedge(const ClassicalForm& a, const ClassicalForm& b);
WeakClassicalForm wedge(const WeakClassicalForm& a, const WeakClassicalForm& b);
ClassicalForm exterior_d(const ClassicalForm& w);
WeakClassicalForm exterior_d(const WeakClassicalForm& w);

/// A section of the n-th exterior power of the tangent module, on the
/// basis of ascending partial-derivative tuples.
class MultiDerivation {
 public:
  MultiDerivation() = default;
  static MultiDerivation zero(PresentationPtr base, int degree);
  static MultiDerivation term(PresentationPtr base, const Poly& coeff, std::vector<int> vars);

  const PresentationPtr& base() const { return base_; }
  int degree() const { return n_; }
  const std::map<std::vector<int>, Poly>& table() const { return table_; }

  MultiDerivation operator+(const MultiDerivation& o) const;
  std::string to_string() const;

 private:
  PresentationPtr base_;
  int n_ = 0;
  std::map<std::vector<int>, Poly> table_;
};

/// Full contraction of an n-form with an n-fold multiderivation.
Poly contract(const ClassicalForm& w, const MultiDerivation& d);

/// A scalar combinatorial n-form: a simplex-ring element that vanishes
/// under every degeneracy pullback (construction-checked).
class ScalarCombForm {
 public:
  ScalarCombForm() = default;
  explicit ScalarCombForm(SimplexElement e);

  const SimplexElement& element() const { return elem_; }
  const SimplexRingPtr& ring() const { return elem_.ring(); }
  int degree() const;
  bool is_zero() const { return elem_.is_zero(); }

  ScalarCombForm operator+(const ScalarCombForm& o) const;
  ScalarCombForm operator-(const ScalarCombForm& o) const;
  ScalarCombForm operator-() const;
  bool operator==(const ScalarCombForm& o) const { return elem_ == o.elem_; }
  bool operator!=(const ScalarCombForm& o) const { return !(*this == o); }
  ScalarCombForm scaled(const Scalar& c) const { return ScalarCombForm(elem_.scaled(c)); }

  std::string to_string() const { return elem_.to_string(); }

 private:
  SimplexElement elem_;
};

/// The basis re-keying isomorphism from classical to combinatorial forms:
/// b * dx_{v1}^...^dx_{vn} goes to b * prod_i d(0,i)x_{vi}.
ScalarCombForm nu(const ClassicalForm& w, const SimplexFamilyPtr& fam);
ScalarCombForm nu(const WeakClassicalForm& w, const SimplexFamilyPtr& fam);
/// Inverse re-keying; needs a free or smooth localized base to extract
/// classical coefficients from a generic-engine element.
ClassicalForm nu_inverse_strong(const ScalarCombForm& f);
WeakClassicalForm nu_inverse_weak(const ScalarCombForm& f);

/// Cup-style product overlapping at the middle vertex; corresponds to the
/// wedge under nu.
ScalarCombForm star_product(const ScalarCombForm& f, const ScalarCombForm& g);
/// Alternating Cech-style coboundary; squares to zero, graded Leibniz for
/// the star product, corresponds to the exterior differential under nu.
ScalarCombForm cech_delta(const ScalarCombForm& f);
/// Vertex permutation action; multiplies a form by the sign character.
ScalarCombForm sym_action(const std::vector<int>& sigma, const ScalarCombForm& f);
/// Multiplication by the base element b placed at any vertex; independent
/// of the chosen slot.
ScalarCombForm module_action(const Poly& b, const ScalarCombForm& f, int slot = 0);
/// Reinterpret a weak form in the strong ring of the given family
/// (diagonal keys die; bijective when 2 is invertible).
ScalarCombForm to_strong(const ScalarCombForm& f, const SimplexFamilyPtr& strong_fam);

}  // namespace cdf
