#include "cdf/gforms.hpp"

#include <algorithm>

namespace cdf {

namespace {

using SPoint = GroupPoint<SimplexAlgebra>;

// Base point placed at one vertex of the simplex.
SPoint at_slot(const GroupPoint<QuotAlgebra>& g, const SimplexRingPtr& O, int slot) {
  if (!same_presentation(g.alg.B, O->base()))
    throw ContextError("base point algebra does not match the simplex base");
  if (slot < 0 || slot > O->degree()) throw IndexError("vertex index out of range");
  std::vector<SimplexElement> im;
  im.reserve(g.images.size());
  for (const Poly& p : g.images) im.push_back(O->universal(slot, p));
  return SPoint{g.group, {O}, std::move(im)};
}

SPoint pulled(const GroupForm& f, std::vector<int> vertices, int target) {
  return gf_pullback(f, IndexMap::of(std::move(vertices), target)).point();
}

void need_form_pair(const GroupForm& a, const GroupForm& b, const char* what) {
  if (a.group() != b.group()) throw ContextError(std::string(what) + ": different groups");
  if (a.target()->family() != b.target()->family()) throw ContextError(std::string(what) + ": different simplex families");
}

// Generator translated into the augmentation ideal.
Poly aug_gen(const HopfPtr& G, int v) {
  Poly z = Poly::variable(G->presentation()->ring(), v);
  Scalar c = G->counit(v);
  return c.is_zero() ? z : z - Poly::constant(G->presentation()->ring(), c);
}

}  // namespace

ClassicalRep::ClassicalRep(HopfPtr group, PresentationPtr base, int degree, std::map<int, ClassicalForm> images)
    : group_(std::move(group)), base_(std::move(base)), n_(degree) {
  if (!group_ || !base_) throw ContextError("classical rep: missing group or base");
  if (n_ < 0) throw ContextError("classical rep: negative degree");
  for (auto& [v, w] : images) {
    if (!group_->presentation()->is_primary(v)) throw RepresentationError("classical rep keyed by a non-primary generator");
    if (w.is_zero()) continue;
    if (w.degree() != n_ || !same_presentation(w.base(), base_))
      throw ContextError("classical rep image of the wrong degree or base");
    images_.emplace(v, w);
  }
}

ClassicalForm ClassicalRep::at(int primary) const {
  auto it = images_.find(primary);
  return it == images_.end() ? ClassicalForm::zero(base_, n_) : it->second;
}

ClassicalRep ClassicalRep::with(int primary, const ClassicalForm& w) const {
  if (!group_->presentation()->is_primary(primary)) throw RepresentationError("classical rep keyed by a non-primary generator");
  ClassicalRep out = *this;
  out.images_.erase(primary);
  if (!w.is_zero()) {
    if (w.degree() != n_ || !same_presentation(w.base(), base_))
      throw ContextError("classical rep image of the wrong degree or base");
    out.images_.emplace(primary, w);
  }
  return out;
}

ClassicalForm ClassicalRep::apply(const CoLieClass& c) const {
  ClassicalForm acc = ClassicalForm::zero(base_, n_);
  for (const auto& [v, coeff] : c.coords) acc = acc + at(v).scaled(coeff);
  return acc;
}

ClassicalRep ClassicalRep::operator+(const ClassicalRep& o) const {
  if (group_ != o.group_ || n_ != o.n_ || !same_presentation(base_, o.base_))
    throw ContextError("classical rep sum: mismatched shapes");
  ClassicalRep out = *this;
  for (const auto& [v, w] : o.images_) {
    ClassicalForm s = out.at(v) + w;
    out.images_.erase(v);
    if (!s.is_zero()) out.images_.emplace(v, s);
  }
  return out;
}

ClassicalRep ClassicalRep::operator-(const ClassicalRep& o) const { return *this + (-o); }

ClassicalRep ClassicalRep::operator-() const {
  ClassicalRep out = *this;
  for (auto& [v, w] : out.images_) w = -w;
  return out;
}

bool ClassicalRep::operator==(const ClassicalRep& o) const {
  return group_ == o.group_ && n_ == o.n_ && same_presentation(base_, o.base_) && images_ == o.images_;
}

std::string ClassicalRep::to_string() const {
  if (images_.empty()) return "0";
  std::string s;
  for (const auto& [v, w] : images_) {
    if (!s.empty()) s += "; ";
    s += "[" + group_->presentation()->ring()->vars()[v] + "] -> " + w.to_string();
  }
  return s;
}

GroupForm GroupForm::make(HopfPtr group, SimplexRingPtr target, std::vector<SimplexElement> images) {
  if (!group || !target) throw ContextError("group form: missing group or target ring");
  if (target->flavor() != Flavor::Strong) throw ContextError("group forms live in strong-flavor simplex rings");
  if (target->degree() < 1) throw ContextError("group forms need degree at least one");
  auto p = make_point(group, SimplexAlgebra{target}, std::move(images));  // relation check
  GroupForm f(std::move(group), std::move(target), std::move(p.images));
  auto bad = f.degeneracy_defects();
  if (!bad.empty())
    throw FormError("group form does not vanish under the degeneracy collapsing vertices " + std::to_string(bad[0]) +
                    " and " + std::to_string(bad[0] + 1));
  return f;
}

GroupForm GroupForm::identity(HopfPtr group, SimplexRingPtr target) {
  size_t nv = group->presentation()->ring()->nvars();
  std::vector<SimplexElement> im;
  im.reserve(nv);
  for (size_t v = 0; v < nv; ++v) im.push_back(target->from_scalar(group->counit(static_cast<int>(v))));
  return GroupForm(std::move(group), std::move(target), std::move(im));
}

SimplexElement GroupForm::apply(const Poly& z) const {
  if (z.ring() != group_->presentation()->ring() && !z.ring()->same_as(*group_->presentation()->ring()))
    throw ContextError("group form applied to an element of the wrong algebra");
  return eval_in(SimplexAlgebra{target_}, z, images_);
}

bool GroupForm::is_identity() const {
  for (size_t v = 0; v < images_.size(); ++v)
    if (!(images_[v] == target_->from_scalar(group_->counit(static_cast<int>(v))))) return false;
  return true;
}

std::vector<int> GroupForm::degeneracy_defects() const {
  std::vector<int> bad;
  int n = degree();
  SimplexRingPtr below = target_->family()->ring(n - 1);
  for (int i = 0; i < n; ++i) {
    IndexMap s = IndexMap::repeat(i, n);
    bool ok = true;
    for (size_t v = 0; v < images_.size() && ok; ++v)
      ok = images_[v].pullback(s) == below->from_scalar(group_->counit(static_cast<int>(v)));
    if (!ok) bad.push_back(i);
  }
  return bad;
}

bool GroupForm::operator==(const GroupForm& o) const {
  if (group_ != o.group_ || target_ != o.target_) return false;
  for (size_t v = 0; v < images_.size(); ++v)
    if (!(images_[v] == o.images_[v])) return false;
  return true;
}

std::string GroupForm::to_string() const {
  std::string s;
  for (size_t v = 0; v < images_.size(); ++v) {
    if (!s.empty()) s += "; ";
    s += group_->presentation()->ring()->vars()[v] + " -> " + images_[v].to_string();
  }
  return s;
}

GroupForm wrap_point(const GroupPoint<SimplexAlgebra>& p) { return GroupForm(p.group, p.alg.ring, p.images); }

AutForm::AutForm(GroupForm form, CoactionPtr action) : form_(std::move(form)), action_(std::move(action)) {
  if (!action_) throw ContextError("automorphism form: missing coaction");
  if (form_.group() != action_->actor()) throw ContextError("automorphism form: form is not valued in the acting group");
}

GroupForm from_classical(const ClassicalRep& u, const SimplexFamilyPtr& fam) {
  if (!fam || fam->flavor() != Flavor::Strong) throw ContextError("group forms need a strong-flavor family");
  if (!same_presentation(fam->base(), u.base())) throw ContextError("classical rep base does not match the family");
  if (u.degree() < 1) throw ContextError("group forms need degree at least one");
  const HopfPtr& G = u.group();
  SimplexRingPtr O = fam->ring(u.degree());
  size_t nv = G->presentation()->ring()->nvars();
  std::vector<SimplexElement> im(nv, O->zero());
  for (int v : G->presentation()->primary_vars())
    im[v] = O->from_scalar(G->counit(v)) + nu(u.at(v), fam).element();
  for (const auto& [g, gbar] : G->presentation()->inverse_pairs()) im[gbar] = im[g].invert();
  try {
    return GroupForm::make(G, O, std::move(im));
  } catch (const PointError& e) {
    throw RepresentationError(std::string("classical data does not satisfy the group relations: ") + e.what());
  }
}

ClassicalRep to_classical(const GroupForm& phi) {
  const HopfPtr& G = phi.group();
  std::map<int, ClassicalForm> images;
  for (int v : G->presentation()->primary_vars()) {
    SimplexElement e = phi.image(v) - phi.target()->from_scalar(G->counit(v));
    if (e.is_zero()) continue;
    images.emplace(v, nu_inverse_strong(ScalarCombForm(e)));
  }
  return ClassicalRep(G, phi.target()->base(), phi.degree(), std::move(images));
}

GroupForm gf_product(const GroupForm& a, const GroupForm& b) {
  need_form_pair(a, b, "group form product");
  if (a.target() != b.target()) throw ContextError("group form product: different degrees");
  return wrap_point(point_compose(a.point(), b.point()));
}

GroupForm gf_inverse(const GroupForm& a) { return wrap_point(point_inverse(a.point())); }

GroupForm gf_pullback(const GroupForm& a, const IndexMap& m) {
  if (m.source != a.degree()) throw IndexError("pullback map source does not match the form degree");
  SimplexRingPtr O = a.target()->family()->ring(m.target);
  std::vector<SimplexElement> im;
  im.reserve(a.images().size());
  for (const SimplexElement& e : a.images()) im.push_back(e.pullback(m));
  return wrap_point(SPoint{a.group(), {O}, std::move(im)});
}

GroupForm bracket(const GroupForm& f, const GroupForm& g) {
  need_form_pair(f, g, "bracket");
  int m = f.degree(), n = g.degree();
  if (m < 1 || n < 1) throw ContextError("bracket: degree-zero arguments are not supported");
  std::vector<int> lo(m + 1), hi(n + 1);
  for (int i = 0; i <= m; ++i) lo[i] = i;
  for (int i = 0; i <= n; ++i) hi[i] = m + i;
  return wrap_point(point_commutator(pulled(f, lo, m + n), pulled(g, hi, m + n)));
}

ClassicalRep bracket_classical(const ClassicalRep& f, const ClassicalRep& g) {
  if (f.group() != g.group() || !same_presentation(f.base(), g.base()))
    throw ContextError("classical bracket: mismatched reps");
  if (f.degree() < 1 || g.degree() < 1) throw ContextError("bracket: degree-zero arguments are not supported");
  const HopfPtr& G = f.group();
  std::map<int, ClassicalForm> images;
  for (int z : G->presentation()->primary_vars()) {
    CoTensor lam = lambda_map(G, aug_gen(G, z));
    ClassicalForm acc = ClassicalForm::zero(f.base(), f.degree() + g.degree());
    for (const auto& [key, c] : lam.coords) acc = acc + wedge(f.at(key.first), g.at(key.second)).scaled(c);
    if (!acc.is_zero()) images.emplace(z, acc);
  }
  return ClassicalRep(G, f.base(), f.degree() + g.degree(), std::move(images));
}

ClassicalRep square(const ClassicalRep& f) {
  if (f.degree() % 2 == 0) throw ContextError("the halved self-bracket needs an odd-degree form");
  const HopfPtr& G = f.group();
  std::map<int, ClassicalForm> images;
  for (int z : G->presentation()->primary_vars()) {
    ClassicalForm acc = ClassicalForm::zero(f.base(), 2 * f.degree());
    for (const auto& [a, b] : comult_tail(G, aug_gen(G, z)))
      acc = acc + wedge(f.apply(colie_reduce(G, a)), f.apply(colie_reduce(G, b)));
    if (!acc.is_zero()) images.emplace(z, acc);
  }
  return ClassicalRep(G, f.base(), 2 * f.degree(), std::move(images));
}

ClassicalRep square(const GroupForm& f) { return square(to_classical(f)); }

GroupForm aut_bracket(const AutForm& chi, const GroupForm& g) {
  if (chi.action()->acted() != g.group()) throw ContextError("automorphism bracket: coaction does not act on the group");
  if (chi.form().target()->family() != g.target()->family())
    throw ContextError("automorphism bracket: different simplex families");
  int m = chi.form().degree(), n = g.degree();
  if (m < 1 || n < 1) throw ContextError("bracket: degree-zero arguments are not supported");
  std::vector<int> lo(m + 1), hi(n + 1);
  for (int i = 0; i <= m; ++i) lo[i] = i;
  for (int i = 0; i <= n; ++i) hi[i] = m + i;
  SPoint ct = pulled(chi.form(), lo, m + n);
  SPoint gt = pulled(g, hi, m + n);
  return wrap_point(point_compose(point_act(chi.action(), ct, gt), point_inverse(gt)));
}

ClassicalRep aut_bracket_classical(const CoactionPtr& rho, const ClassicalRep& chi, const ClassicalRep& g) {
  if (!rho) throw ContextError("automorphism bracket: missing coaction");
  if (chi.group() != rho->actor() || g.group() != rho->acted())
    throw ContextError("automorphism bracket: reps do not match the coaction");
  if (chi.degree() < 1 || g.degree() < 1) throw ContextError("bracket: degree-zero arguments are not supported");
  if (!same_presentation(chi.base(), g.base())) throw ContextError("automorphism bracket: different bases");
  std::map<int, ClassicalForm> images;
  for (int z : rho->acted()->presentation()->primary_vars()) {
    CoTensor lb = lambda_bar(*rho, aug_gen(rho->acted(), z));
    ClassicalForm acc = ClassicalForm::zero(g.base(), chi.degree() + g.degree());
    for (const auto& [key, c] : lb.coords) acc = acc + wedge(chi.at(key.first), g.at(key.second)).scaled(c);
    if (!acc.is_zero()) images.emplace(z, acc);
  }
  return ClassicalRep(rho->acted(), g.base(), chi.degree() + g.degree(), std::move(images));
}

AutForm i_star(const GroupForm& f) { return AutForm(f, conjugation_action(f.group())); }

GroupForm adjoint(const GroupPoint<QuotAlgebra>& g, const GroupForm& phi, int slot) {
  SPoint gp = at_slot(g, phi.target(), slot);
  if (g.group != phi.group()) throw ContextError("adjoint: point and form belong to different groups");
  return wrap_point(point_compose(point_compose(gp, phi.point()), point_inverse(gp)));
}

GroupForm delta0(const GroupPoint<QuotAlgebra>& g, const SimplexFamilyPtr& fam) {
  if (!fam || fam->flavor() != Flavor::Strong) throw ContextError("group forms need a strong-flavor family");
  SimplexRingPtr O = fam->ring(1);
  return wrap_point(point_compose(point_inverse(at_slot(g, O, 0)), at_slot(g, O, 1)));
}

GroupForm mc_form(const HopfPtr& G, const SimplexFamilyPtr& fam) {
  if (!same_presentation(fam->base(), G->presentation()))
    throw ContextError("the Maurer-Cartan form lives over the group's own coordinate ring");
  QuotAlgebra alg{fam->base()};
  std::vector<Poly> im;
  size_t nv = fam->base()->ring()->nvars();
  im.reserve(nv);
  for (size_t v = 0; v < nv; ++v) im.push_back(Poly::variable(fam->base()->ring(), static_cast<int>(v)));
  return delta0(make_point(G, alg, std::move(im)), fam);
}

GroupForm twisted_action(const GroupForm& omega, const GroupPoint<QuotAlgebra>& g) {
  if (omega.degree() != 1) throw ContextError("the twisted action is defined on 1-forms");
  if (g.group != omega.group()) throw ContextError("twisted action: point and form belong to different groups");
  SPoint g0 = at_slot(g, omega.target(), 0), g1 = at_slot(g, omega.target(), 1);
  return wrap_point(point_compose(point_compose(point_inverse(g0), omega.point()), g1));
}

GroupForm delta1(const GroupForm& omega) {
  if (omega.degree() != 1) throw ContextError("delta1 is defined on 1-forms");
  SPoint a = pulled(omega, {0, 1}, 2), b = pulled(omega, {1, 2}, 2), c = pulled(omega, {2, 0}, 2);
  return wrap_point(point_compose(point_compose(a, b), c));
}

GroupForm delta2(const AutForm& chi, const GroupForm& phi) {
  if (chi.form().degree() != 1) throw ContextError("delta2 needs an automorphism-valued 1-form");
  if (phi.degree() != 2) throw ContextError("delta2 is defined on 2-forms");
  if (chi.action()->acted() != phi.group()) throw ContextError("delta2: coaction does not act on the form's group");
  if (chi.form().target()->family() != phi.target()->family()) throw ContextError("delta2: different simplex families");
  SPoint c01 = pulled(chi.form(), {0, 1}, 3);
  SPoint f1 = point_act(chi.action(), c01, pulled(phi, {1, 2, 3}, 3));
  SPoint out = point_compose(f1, pulled(phi, {0, 1, 3}, 3));
  out = point_compose(out, pulled(phi, {0, 3, 2}, 3));
  out = point_compose(out, pulled(phi, {0, 2, 1}, 3));
  return wrap_point(out);
}

GroupForm delta3(const AutForm& chi, const GroupForm& W) {
  if (chi.form().degree() != 1) throw ContextError("delta3 needs an automorphism-valued 1-form");
  if (W.degree() != 3) throw ContextError("delta3 is defined on 3-forms");
  if (chi.action()->acted() != W.group()) throw ContextError("delta3: coaction does not act on the form's group");
  if (chi.form().target()->family() != W.target()->family()) throw ContextError("delta3: different simplex families");
  SPoint c01 = pulled(chi.form(), {0, 1}, 4);
  SPoint out = point_act(chi.action(), c01, pulled(W, {1, 2, 3, 4}, 4));
  out = point_compose(out, pulled(W, {0, 1, 3, 4}, 4));
  out = point_compose(out, pulled(W, {0, 1, 2, 3}, 4));
  out = point_compose(out, point_inverse(pulled(W, {0, 2, 3, 4}, 4)));
  out = point_compose(out, point_inverse(pulled(W, {0, 1, 2, 4}, 4)));
  return wrap_point(out);
}

GroupForm delta3_full(const AutForm& chi, const GroupForm& eta, const GroupForm& W) {
  if (eta.degree() != 2) throw ContextError("delta3_full needs an auxiliary 2-form");
  if (eta.group() != W.group()) throw ContextError("delta3_full: auxiliary form belongs to a different group");
  if (chi.form().degree() != 1) throw ContextError("delta3 needs an automorphism-valued 1-form");
  if (W.degree() != 3) throw ContextError("delta3 is defined on 3-forms");
  if (chi.action()->acted() != W.group()) throw ContextError("delta3: coaction does not act on the form's group");
  if (chi.form().target()->family() != W.target()->family()) throw ContextError("delta3: different simplex families");
  SPoint c01 = pulled(chi.form(), {0, 1}, 4);
  SPoint c12 = pulled(chi.form(), {1, 2}, 4);
  auto conj = [](const SPoint& c, const SPoint& x) { return point_compose(point_compose(c, x), point_inverse(c)); };

  SPoint f1 = point_act(chi.action(), c01, pulled(W, {1, 2, 3, 4}, 4));
  SPoint c2 = point_act(chi.action(), c01, pulled(eta, {1, 2, 3}, 4));
  SPoint f2 = conj(c2, pulled(W, {0, 1, 3, 4}, 4));
  SPoint f3 = pulled(W, {0, 1, 2, 3}, 4);
  SPoint c4 = pulled(eta, {0, 1, 2}, 4);
  SPoint f4 = point_inverse(conj(c4, pulled(W, {0, 2, 3, 4}, 4)));
  SPoint c5 = point_act(chi.action(), c01, point_act(chi.action(), c12, pulled(eta, {2, 3, 4}, 4)));
  SPoint f5 = point_inverse(conj(c5, pulled(W, {0, 1, 2, 4}, 4)));
  return wrap_point(point_compose(point_compose(point_compose(point_compose(f1, f2), f3), f4), f5));
}

SimplexFamilyPtr group_form_family(const PresentationPtr& B, GroebnerLimits lim) {
  if (B->is_free()) return SimplexFamily::make(B, Flavor::Strong, EngineKind::Structured, lim);
  if (B->is_smooth()) return detail_make_family(B, Flavor::Strong, EngineKind::Structured, lim, true);
  if (B->base().is_field()) return SimplexFamily::make(B, Flavor::Strong, EngineKind::Generic, lim);
  throw ContextError("group forms over a presented base need a field of scalars");
}

}  // namespace cdf
