#pragma once

#include "cdf/forms.hpp"

namespace cdf {

class HopfAlgebra;
using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// The k-fold tensor power of a presented algebra, presented on block-tagged
/// variables v@0, ..., v@(k-1) with every relation lifted to each block.
PresentationPtr tensor_power(const PresentationPtr& A, int k);
/// Mixed tensor D (x) A on blocks d@0, a@1.
PresentationPtr mixed_tensor(const PresentationPtr& D, const PresentationPtr& A);
/// Inject a polynomial into one block of a tensor presentation, matching
/// variables by tagged name (v -> v@block).
Poly tensor_lift(const Poly& p, const PresentationPtr& tensor, int block);

class Coaction;
using CoactionPtr = std::shared_ptr<const Coaction>;

/// The coordinate Hopf algebra of an affine group scheme: a presentation
/// together with comultiplication, counit, and antipode on generators.
/// All axioms are verified symbolically at construction.
class HopfAlgebra : public std::enable_shared_from_this<HopfAlgebra> {
 public:
  /// comult images live in tensor_power(A, 2); antipode images in A's ring;
  /// counit images are scalars.  One image per generator.
  static HopfPtr make(PresentationPtr A, std::vector<Poly> comult, std::vector<Scalar> counit,
                      std::vector<Poly> antipode, std::string name = "");

  const PresentationPtr& presentation() const { return A_; }
  const PresentationPtr& tensor2() const { return T2_; }
  const std::string& name() const { return name_; }

  const Poly& comult(int var) const { return comult_[var]; }
  const Scalar& counit(int var) const { return counit_[var]; }
  const Poly& antipode(int var) const { return antipode_[var]; }

  /// Apply the comultiplication to an arbitrary algebra element.
  Poly comult_poly(const Poly& p) const;
  /// Evaluate an algebra element at the unit section.
  Scalar counit_value(const Poly& p) const;
  Poly antipode_poly(const Poly& p) const;

  std::string describe() const;

 private:
  friend CoactionPtr conjugation_action(const HopfPtr& G);
  HopfAlgebra() = default;
  PresentationPtr A_;
  PresentationPtr T2_;
  std::vector<Poly> comult_;
  std::vector<Scalar> counit_;
  std::vector<Poly> antipode_;
  std::string name_;
  mutable std::mutex conj_mu_;
  mutable CoactionPtr conj_cache_;
};

/// Standard groups: Ga (additive line), Gm (multiplicative), Aff1
/// (invertible affine maps of the line), Heis3 (Heisenberg).
HopfPtr builtin_group(const std::string& name, const Ring& R);

/// A class in the co-Lie module I/I^2, written in the basis of
/// primary-generator classes.
struct CoLieClass {
  PresentationPtr base;
  std::map<int, Scalar> coords;

  bool is_zero() const { return coords.empty(); }
  bool operator==(const CoLieClass& o) const;
  CoLieClass operator+(const CoLieClass& o) const;
  CoLieClass operator-() const;
  std::string to_string() const;
};

/// An element of a tensor square of co-Lie modules (rows from the first
/// group, columns from the second).
struct CoTensor {
  PresentationPtr rows;
  PresentationPtr cols;
  std::map<std::pair<int, int>, Scalar> coords;

  bool is_zero() const { return coords.empty(); }
  bool operator==(const CoTensor& o) const;
  CoTensor operator+(const CoTensor& o) const;
  CoTensor operator-() const;
  CoTensor transpose() const;
  std::string to_string() const;
};

/// Class of an augmentation-ideal element in I/I^2.
CoLieClass colie_reduce(const HopfPtr& G, const Poly& z);

/// Decompose comult(z) - z(x)1 - 1(x)z into pure tensors with both factors
/// in the augmentation ideal.  The decomposition is not unique but its
/// co-Lie reduction is.
std::vector<std::pair<Poly, Poly>> comult_tail(const HopfPtr& G, const Poly& z);

/// The antisymmetrized co-Lie reduction of the comultiplication tail;
/// the co-Lie cobracket.
CoTensor lambda_map(const HopfPtr& G, const Poly& z);

/// A coaction of the group of D on the group of A by group automorphisms:
/// an algebra map A -> D (x) A satisfying the comodule and unit axioms
/// (verified at construction).
class Coaction {
 public:
  static CoactionPtr make(HopfPtr D, HopfPtr A, std::vector<Poly> images, std::string name = "");

  const HopfPtr& actor() const { return D_; }
  const HopfPtr& acted() const { return A_; }
  const PresentationPtr& mixed() const { return M_; }
  const Poly& image(int var) const { return images_[var]; }
  const std::string& name() const { return name_; }

  /// rho applied to an arbitrary element of A.
  Poly apply(const Poly& p) const;

  std::string describe() const;

 private:
  Coaction() = default;
  HopfPtr D_;
  HopfPtr A_;
  PresentationPtr M_;
  std::vector<Poly> images_;
  std::string name_;
};

/// rho(z) - 1(x)z as pure tensors (actor factor in its augmentation ideal).
std::vector<std::pair<Poly, Poly>> coaction_tail(const Coaction& rho, const Poly& z);
/// Co-Lie reduction of the coaction tail: the derivative of the action at
/// the two unit sections.
CoTensor lambda_bar(const Coaction& rho, const Poly& z);

/// Gm scaling the additive line: rho(x) = t (x) x.
CoactionPtr gm_scales_ga(const Ring& R);
/// The inner conjugation coaction of a group on itself, derived from the
/// Hopf data and cached on the group.
CoactionPtr conjugation_action(const HopfPtr& G);

// --- points with values in a commutative algebra -------------------------------

/// Adapter giving group points values in a simplex ring.
struct SimplexAlgebra {
  SimplexRingPtr ring;
  using Elem = SimplexElement;
  Elem one() const { return ring->one(); }
  Elem from_scalar(const Scalar& c) const { return ring->from_scalar(c); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static bool equal(const Elem& a, const Elem& b) { return a == b; }
  static Elem inverse(const Elem& e) { return e.invert(); }
  static std::string render(const Elem& e) { return e.to_string(); }
};

/// Adapter giving group points values in a presented quotient algebra.
struct QuotAlgebra {
  PresentationPtr B;
  using Elem = Poly;
  Elem one() const { return Poly::constant(B->ring(), 1); }
  Elem from_scalar(const Scalar& c) const { return Poly::constant(B->ring(), c); }
  Elem add(const Elem& a, const Elem& b) const { return B->reduce(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return B->reduce(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return B->reduce(a * b); }
  bool equal(const Elem& a, const Elem& b) const { return B->reduce(a - b).is_zero(); }
  Elem inverse(const Elem& e) const { return B->inverse_of(e); }
  static std::string render(const Elem& e) { return e.to_string(); }
};

/// Element of the square-zero jet extension B (+) Omega^d.
struct JetElem {
  Poly body;
  ClassicalForm slope;
  bool operator==(const JetElem& o) const { return body == o.body && slope == o.slope; }
  std::string to_string() const { return body.to_string() + " (+) " + slope.to_string(); }
};

/// Adapter for the jet algebra D_B(Omega^d): multiplication is
/// (b, w)(b', w') = (bb', bw' + b'w); the ideal 0 (+) Omega^d squares to zero.
struct JetAlgebra {
  PresentationPtr B;
  int d = 1;
  using Elem = JetElem;
  Elem one() const { return {Poly::constant(B->ring(), 1), ClassicalForm::zero(B, d)}; }
  Elem from_scalar(const Scalar& c) const { return {Poly::constant(B->ring(), c), ClassicalForm::zero(B, d)}; }
  Elem add(const Elem& a, const Elem& b) const { return {B->reduce(a.body + b.body), a.slope + b.slope}; }
  Elem sub(const Elem& a, const Elem& b) const { return {B->reduce(a.body - b.body), a.slope - b.slope}; }
  Elem mul(const Elem& a, const Elem& b) const {
    return {B->reduce(a.body * b.body), b.slope.scaled(a.body) + a.slope.scaled(b.body)};
  }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem inverse(const Elem& e) const {
    Poly binv = B->inverse_of(e.body);
    return {binv, e.slope.scaled(-(binv * binv))};
  }
  static std::string render(const Elem& e) { return e.to_string(); }
};

/// Evaluate a polynomial in an arbitrary commutative algebra through an
/// adapter, one image per ring variable.
template <class Alg>
typename Alg::Elem eval_in(const Alg& alg, const Poly& p, const std::vector<typename Alg::Elem>& images) {
  if (images.size() != p.ring()->nvars()) throw ContextError("eval_in: one image per variable required");
  std::vector<std::vector<typename Alg::Elem>> pows(images.size());
  auto power = [&](size_t v, int e) -> const typename Alg::Elem& {
    auto& chain = pows[v];
    if (chain.empty()) chain.push_back(images[v]);
    while (static_cast<int>(chain.size()) < e) chain.push_back(alg.mul(chain.back(), images[v]));
    return chain[e - 1];
  };
  auto out = alg.from_scalar(Scalar::zero(p.ring()->base()));
  for (const auto& t : p.terms()) {
    auto term = alg.from_scalar(t.coeff);
    for (size_t v = 0; v < images.size(); ++v)
      if (t.mono[v] > 0) term = alg.mul(term, power(v, t.mono[v]));
    out = alg.add(out, term);
  }
  return out;
}

/// A point of the group scheme of G with coordinates in the adapter's
/// algebra; construction checks G's relations on the images.
template <class Alg>
struct GroupPoint {
  HopfPtr group;
  Alg alg;
  std::vector<typename Alg::Elem> images;
};

template <class Alg>
GroupPoint<Alg> make_point(const HopfPtr& G, const Alg& alg, std::vector<typename Alg::Elem> images) {
  if (!G) throw ContextError("group point: missing group");
  if (images.size() != G->presentation()->ring()->nvars())
    throw ContextError("group point: one image per generator required");
  for (const Poly& r : G->presentation()->relations()) {
    auto v = eval_in(alg, r, images);
    if (!alg.equal(v, alg.from_scalar(Scalar::zero(r.ring()->base()))))
      throw PointError("group point violates the relation " + r.to_string());
  }
  return GroupPoint<Alg>{G, alg, std::move(images)};
}

template <class Alg>
GroupPoint<Alg> point_identity(const HopfPtr& G, const Alg& alg) {
  std::vector<typename Alg::Elem> im;
  size_t nv = G->presentation()->ring()->nvars();
  im.reserve(nv);
  for (size_t v = 0; v < nv; ++v) im.push_back(alg.from_scalar(G->counit(static_cast<int>(v))));
  return GroupPoint<Alg>{G, alg, std::move(im)};
}

template <class Alg>
bool point_equal(const GroupPoint<Alg>& a, const GroupPoint<Alg>& b) {
  if (a.group != b.group) return false;
  for (size_t v = 0; v < a.images.size(); ++v)
    if (!a.alg.equal(a.images[v], b.images[v])) return false;
  return true;
}

template <class Alg>
GroupPoint<Alg> point_compose(const GroupPoint<Alg>& a, const GroupPoint<Alg>& b) {
  if (a.group != b.group) throw ContextError("point composition: different groups");
  std::vector<typename Alg::Elem> joint = a.images;
  joint.insert(joint.end(), b.images.begin(), b.images.end());
  std::vector<typename Alg::Elem> im;
  size_t nv = a.group->presentation()->ring()->nvars();
  im.reserve(nv);
  for (size_t v = 0; v < nv; ++v) im.push_back(eval_in(a.alg, a.group->comult(static_cast<int>(v)), joint));
  return GroupPoint<Alg>{a.group, a.alg, std::move(im)};
}

template <class Alg>
GroupPoint<Alg> point_inverse(const GroupPoint<Alg>& a) {
  std::vector<typename Alg::Elem> im;
  size_t nv = a.group->presentation()->ring()->nvars();
  im.reserve(nv);
  for (size_t v = 0; v < nv; ++v) im.push_back(eval_in(a.alg, a.group->antipode(static_cast<int>(v)), a.images));
  return GroupPoint<Alg>{a.group, a.alg, std::move(im)};
}

template <class Alg>
GroupPoint<Alg> point_commutator(const GroupPoint<Alg>& a, const GroupPoint<Alg>& b) {
  return point_compose(point_compose(a, b), point_compose(point_inverse(a), point_inverse(b)));
}

/// Act on g by the point gamma of the acting group through the coaction.
template <class Alg>
GroupPoint<Alg> point_act(const CoactionPtr& rho, const GroupPoint<Alg>& gamma, const GroupPoint<Alg>& g) {
  if (!rho) throw ContextError("point action: missing coaction");
  if (gamma.group != rho->actor() || g.group != rho->acted())
    throw ContextError("point action: groups do not match the coaction");
  std::vector<typename Alg::Elem> joint = gamma.images;
  joint.insert(joint.end(), g.images.begin(), g.images.end());
  std::vector<typename Alg::Elem> im;
  size_t nv = g.group->presentation()->ring()->nvars();
  im.reserve(nv);
  for (size_t v = 0; v < nv; ++v) im.push_back(eval_in(g.alg, rho->image(static_cast<int>(v)), joint));
  return GroupPoint<Alg>{g.group, g.alg, std::move(im)};
}

/// Point of the kernel of G(C) -> G(C/K) attached to a linear map
/// (primary-generator classes) -> K, for a square-zero ideal K of the
/// adapter's algebra: primary v maps to counit(v) + u(v), inverse partners
/// to the algebra inverse.
template <class Alg>
GroupPoint<Alg> kernel_point(const HopfPtr& G, const Alg& alg, const std::map<int, typename Alg::Elem>& u) {
  const auto& A = G->presentation();
  size_t nv = A->ring()->nvars();
  std::vector<typename Alg::Elem> im(nv, alg.from_scalar(Scalar::zero(A->base())));
  for (int v : A->primary_vars()) {
    auto it = u.find(v);
    auto base = alg.from_scalar(G->counit(v));
    im[v] = it == u.end() ? base : alg.add(base, it->second);
  }
  for (const auto& [g, gbar] : A->inverse_pairs()) im[gbar] = alg.inverse(im[g]);
  return make_point(G, alg, std::move(im));
}

/// Coordinates of a kernel point: primary-generator image minus its counit.
template <class Alg>
std::map<int, typename Alg::Elem> kernel_coords(const GroupPoint<Alg>& g) {
  std::map<int, typename Alg::Elem> out;
  for (int v : g.group->presentation()->primary_vars())
    out.emplace(v, g.alg.sub(g.images[v], g.alg.from_scalar(g.group->counit(v))));
  return out;
}

}  // namespace cdf
