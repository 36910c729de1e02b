#pragma once

#include "cdf/hopf.hpp"

namespace cdf {

/// The classical shadow of a group-valued n-form: a linear map from the
/// co-Lie module of the group (on primary-generator classes) to classical
/// n-forms over the base algebra.
class ClassicalRep {
 public:
  ClassicalRep() = default;
  ClassicalRep(HopfPtr group, PresentationPtr base, int degree, std::map<int, ClassicalForm> images = {});

  const HopfPtr& group() const { return group_; }
  const PresentationPtr& base() const { return base_; }
  int degree() const { return n_; }
  const std::map<int, ClassicalForm>& images() const { return images_; }
  /// Image of one primary-generator class (zero form when absent).
  ClassicalForm at(int primary) const;
  /// Replace one image (returns a copy).
  ClassicalRep with(int primary, const ClassicalForm& w) const;
  /// Linear extension to an arbitrary co-Lie class.
  ClassicalForm apply(const CoLieClass& c) const;

  bool is_zero() const { return images_.empty(); }
  ClassicalRep operator+(const ClassicalRep& o) const;
  ClassicalRep operator-(const ClassicalRep& o) const;
  ClassicalRep operator-() const;
  bool operator==(const ClassicalRep& o) const;
  bool operator!=(const ClassicalRep& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  HopfPtr group_;
  PresentationPtr base_;
  int n_ = 0;
  std::map<int, ClassicalForm> images_;  // primary var -> n-form, zeros dropped
};

/// A group-scheme-valued combinatorial n-form: a point of the group with
/// coordinates in the degree-n strong simplex ring.  `make` checks the
/// group relations and vanishing under every degeneracy pullback; the
/// arithmetic combinators trust their inputs (individual pullback factors
/// of the differentials are legitimately not forms).
class GroupForm {
 public:
  GroupForm() = default;
  static GroupForm make(HopfPtr group, SimplexRingPtr target, std::vector<SimplexElement> images);
  static GroupForm identity(HopfPtr group, SimplexRingPtr target);

  const HopfPtr& group() const { return group_; }
  const SimplexRingPtr& target() const { return target_; }
  int degree() const { return target_->degree(); }
  const std::vector<SimplexElement>& images() const { return images_; }
  const SimplexElement& image(int var) const { return images_[var]; }
  /// Evaluate the underlying ring map on an arbitrary group-algebra element.
  SimplexElement apply(const Poly& z) const;
  GroupPoint<SimplexAlgebra> point() const { return {group_, {target_}, images_}; }

  bool is_identity() const;
  /// Degeneracy pullbacks that fail to be the identity point (empty for a
  /// genuine combinatorial form).
  std::vector<int> degeneracy_defects() const;

  bool operator==(const GroupForm& o) const;
  bool operator!=(const GroupForm& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  friend GroupForm wrap_point(const GroupPoint<SimplexAlgebra>& p);
  GroupForm(HopfPtr g, SimplexRingPtr t, std::vector<SimplexElement> im)
      : group_(std::move(g)), target_(std::move(t)), images_(std::move(im)) {}
  HopfPtr group_;
  SimplexRingPtr target_;
  std::vector<SimplexElement> images_;
};

/// An automorphism-valued form: a form of the acting group used through a
/// coaction on the target group.
class AutForm {
 public:
  AutForm(GroupForm form, CoactionPtr action);
  const GroupForm& form() const { return form_; }
  const CoactionPtr& action() const { return action_; }

 private:
  GroupForm form_;
  CoactionPtr action_;
};

/// phi(gen) = counit(gen) + nu(u(gen class)); inverse partners get the
/// group inverse.  RepresentationError when the data cannot satisfy the
/// group's relations.
GroupForm from_classical(const ClassicalRep& u, const SimplexFamilyPtr& fam);
/// Read the classical rep back off the translated-to-zero images.
ClassicalRep to_classical(const GroupForm& phi);

GroupForm gf_product(const GroupForm& a, const GroupForm& b);
GroupForm gf_inverse(const GroupForm& a);
/// Composition with an index pullback; a form only when the map respects
/// degeneracies (identity, permutations), which combinators exploit.
GroupForm gf_pullback(const GroupForm& a, const IndexMap& m);

/// [f, g](x_0..x_{m+n}) = [f(x_0..x_m), g(x_m..x_{m+n})]; degrees >= 1.
GroupForm bracket(const GroupForm& f, const GroupForm& g);
/// z-class |-> (f* (x) g*) applied to the cobracket, wedged.
ClassicalRep bracket_classical(const ClassicalRep& f, const ClassicalRep& g);

/// The halved self-bracket of an odd-degree form: z |-> sum of
/// f*(alpha) ^ f*(beta) over the comultiplication tail of z.
ClassicalRep square(const ClassicalRep& f);
ClassicalRep square(const GroupForm& f);

/// {chi, g}(x_0..x_{m+n}) = chi(x_0..x_m)(g(x_m..x_{m+n})) * g(..)^{-1}.
GroupForm aut_bracket(const AutForm& chi, const GroupForm& g);
/// z-class |-> (chi* (x) g*) applied to the coaction linearization, wedged.
ClassicalRep aut_bracket_classical(const CoactionPtr& rho, const ClassicalRep& chi, const ClassicalRep& g);

/// View a form of G as an automorphism form through inner conjugation.
AutForm i_star(const GroupForm& f);

/// Conjugate a form by a base point of the group placed at one vertex;
/// the result is independent of the vertex.
GroupForm adjoint(const GroupPoint<QuotAlgebra>& g, const GroupForm& phi, int slot = 0);

/// delta0(g)(x0, x1) = g(x0)^{-1} g(x1).
GroupForm delta0(const GroupPoint<QuotAlgebra>& g, const SimplexFamilyPtr& fam);
/// The Maurer-Cartan form: delta0 of the universal point over B = A.
GroupForm mc_form(const HopfPtr& G, const SimplexFamilyPtr& fam);
/// (omega * g)(x0, x1) = g(x0)^{-1} omega(x0, x1) g(x1).
GroupForm twisted_action(const GroupForm& omega, const GroupPoint<QuotAlgebra>& g);

/// delta1(w)(x0, x1, x2) = w(x0,x1) w(x1,x2) w(x2,x0).
GroupForm delta1(const GroupForm& omega);
/// delta2_chi(phi)(x,y,z,u) = chi(x,y)(phi(y,z,u)) phi(x,y,u) phi(x,u,z) phi(x,z,y).
GroupForm delta2(const AutForm& chi, const GroupForm& phi);
/// delta3_chi(W)(x,y,z,u,v) =
///   chi(x,y)(W(y,z,u,v)) W(x,y,u,v) W(x,y,z,u) W(x,z,u,v)^{-1} W(x,y,z,v)^{-1}.
GroupForm delta3(const AutForm& chi, const GroupForm& W);
/// The full differential with the auxiliary 2-form's inner conjugations;
/// agrees with delta3 on 3-forms.
GroupForm delta3_full(const AutForm& chi, const GroupForm& eta, const GroupForm& W);

/// Strong-flavor simplex family suitable for group forms over B:
/// structured engine for free or smooth localized presentations, generic
/// engine otherwise (field bases only).
SimplexFamilyPtr group_form_family(const PresentationPtr& B, GroebnerLimits lim = {});

}  // namespace cdf
