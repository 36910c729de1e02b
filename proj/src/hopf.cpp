#include "cdf/hopf.hpp"

#include <algorithm>

namespace cdf {

namespace {

// Blocks [P_0, ..., P_{k-1}] glued into one presentation on variables v@i.
PresentationPtr tensor_blocks(const std::vector<PresentationPtr>& blocks) {
  if (blocks.empty()) throw ContextError("tensor of zero blocks");
  const Ring& base = blocks[0]->base();
  std::vector<std::string> vars;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (!(blocks[b]->base() == base)) throw ContextError("tensor blocks over different base rings");
    for (const auto& v : blocks[b]->ring()->vars()) vars.push_back(v + "@" + std::to_string(b));
  }
  PolyRingPtr ring = PolyRing::make(base, vars);
  std::vector<Poly> rels;
  std::vector<std::pair<std::string, std::string>> pairs;
  size_t off = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    size_t nb = blocks[b]->ring()->nvars();
    std::vector<int> up(nb);
    for (size_t v = 0; v < nb; ++v) up[v] = static_cast<int>(off + v);
    for (const Poly& r : blocks[b]->relations()) rels.push_back(r.reindex(ring, up));
    for (const auto& [g, gbar] : blocks[b]->inverse_pairs()) pairs.emplace_back(vars[off + g], vars[off + gbar]);
    off += nb;
  }
  return AlgebraPresentation::make(base, vars, rels, pairs, blocks[0]->limits());
}

Poly eval_at_constants(const Poly& p, const std::vector<Scalar>& values) {
  Scalar acc = Scalar::zero(p.ring()->base());
  for (const auto& t : p.terms()) {
    Scalar c = t.coeff;
    for (size_t v = 0; v < values.size(); ++v)
      for (int e = 0; e < t.mono[v]; ++e) c = c * values[v];
    acc = acc + c;
  }
  return Poly::constant(p.ring(), acc);
}

// Terms of a tensor element bucketed by their monomial in the leading block.
std::map<Monomial, Poly> bucket_by_left(const Poly& tail, const PolyRingPtr& right_ring, size_t left_n) {
  std::map<Monomial, std::vector<Term>> raw;
  for (const auto& t : tail.terms()) {
    Monomial left(t.mono.begin(), t.mono.begin() + left_n);
    Monomial right(t.mono.begin() + left_n, t.mono.end());
    if (right.size() != right_ring->nvars()) throw ContextError("tensor split: block sizes do not match");
    raw[left].push_back(Term{right, t.coeff});
  }
  std::map<Monomial, Poly> out;
  for (auto& [m, ts] : raw) out.emplace(m, Poly::from_terms(right_ring, std::move(ts)));
  return out;
}

std::vector<std::pair<Poly, Poly>> split_tail(const Poly& tail, const PresentationPtr& tensor,
                                              const HopfAlgebra& left, const HopfAlgebra& right,
                                              const char* what) {
  size_t nl = left.presentation()->ring()->nvars();
  std::vector<std::pair<Poly, Poly>> out;
  for (auto& [m, part] : bucket_by_left(tail, right.presentation()->ring(), nl)) {
    Poly alpha = Poly::from_terms(left.presentation()->ring(), {Term{m, Scalar::one(tail.ring()->base())}});
    alpha = alpha - left.counit_value(alpha) * Poly::constant(alpha.ring(), 1);
    Poly beta = part - right.counit_value(part) * Poly::constant(part.ring(), 1);
    if (alpha.is_zero() || beta.is_zero()) continue;
    out.emplace_back(left.presentation()->reduce(alpha), right.presentation()->reduce(beta));
  }
  Poly rebuilt = Poly::zero(tensor->ring());
  for (const auto& [a, b] : out) rebuilt += tensor_lift(a, tensor, 0) * tensor_lift(b, tensor, 1);
  if (!tensor->equivalent(rebuilt, tail))
    throw EngineError(std::string(what) + ": tail decomposition does not rebuild the tail");
  return out;
}

std::string names_of(const PresentationPtr& p, const std::map<int, Scalar>& row) {
  std::string s;
  for (const auto& [v, c] : row) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*[" + p->ring()->vars()[v] + "]";
  }
  return s.empty() ? "0" : s;
}

}  // namespace

PresentationPtr tensor_power(const PresentationPtr& A, int k) {
  if (k < 1) throw ContextError("tensor power needs at least one factor");
  return tensor_blocks(std::vector<PresentationPtr>(static_cast<size_t>(k), A));
}

PresentationPtr mixed_tensor(const PresentationPtr& D, const PresentationPtr& A) { return tensor_blocks({D, A}); }

Poly tensor_lift(const Poly& p, const PresentationPtr& tensor, int block) {
  const auto& src = p.ring();
  std::vector<int> map(src->nvars());
  for (size_t v = 0; v < src->nvars(); ++v) {
    int idx = tensor->ring()->var_index(src->vars()[v] + "@" + std::to_string(block));
    if (idx < 0) throw ContextError("tensor lift: block " + std::to_string(block) + " not present");
    map[v] = idx;
  }
  return p.reindex(tensor->ring(), map);
}

HopfPtr HopfAlgebra::make(PresentationPtr A, std::vector<Poly> comult, std::vector<Scalar> counit,
                          std::vector<Poly> antipode, std::string name) {
  auto G = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
  G->A_ = std::move(A);
  G->T2_ = tensor_power(G->A_, 2);
  G->name_ = std::move(name);
  const auto& R = G->A_->ring();
  size_t nv = R->nvars();
  if (comult.size() != nv || counit.size() != nv || antipode.size() != nv)
    throw ContextError("hopf data: one comultiplication, counit, and antipode image per generator");
  for (size_t v = 0; v < nv; ++v) {
    if (comult[v].ring() != G->T2_->ring() && !comult[v].ring()->same_as(*G->T2_->ring()))
      throw ContextError("comultiplication images must live in the doubled tensor ring");
    if (antipode[v].ring() != R && !antipode[v].ring()->same_as(*R))
      throw ContextError("antipode images must live in the group's own ring");
    G->comult_.push_back(G->T2_->reduce(comult[v]));
    G->counit_.push_back(counit[v]);
    G->antipode_.push_back(G->A_->reduce(antipode[v]));
  }

  auto fail = [&](const std::string& which, size_t v, const Poly& witness) {
    throw PresentationError("hopf axiom failed (" + which + ") on generator " + R->vars()[v] + ": residue " +
                            witness.to_string() + " in " + G->describe());
  };
  for (const Poly& r : G->A_->relations()) {
    Poly mu_r = G->T2_->reduce(r.substitute(G->comult_));
    if (!mu_r.is_zero())
      throw PresentationError("hopf axiom failed (comultiplication is not an algebra map) on relation " +
                              r.to_string() + ": residue " + mu_r.to_string());
    Poly s_r = G->A_->reduce(r.substitute(G->antipode_));
    if (!s_r.is_zero())
      throw PresentationError("hopf axiom failed (antipode is not an algebra map) on relation " + r.to_string() +
                              ": residue " + s_r.to_string());
    Poly e_r = eval_at_constants(r, G->counit_);
    if (!e_r.is_zero())
      throw PresentationError("hopf axiom failed (counit is not an algebra map) on relation " + r.to_string() +
                              ": residue " + e_r.to_string());
  }

  PresentationPtr T3 = tensor_power(G->A_, 3);
  std::vector<Poly> mu_left, mu_right;  // (mu (x) id) and (id (x) mu) on the doubled ring
  for (size_t b = 0; b < 2 * nv; ++b) {
    size_t v = b % nv;
    if (b < nv) {
      std::vector<int> into01(2 * nv);
      for (size_t i = 0; i < 2 * nv; ++i) into01[i] = static_cast<int>(i);
      mu_left.push_back(G->comult_[v].reindex(T3->ring(), into01));
      mu_right.push_back(tensor_lift(Poly::variable(R, static_cast<int>(v)), T3, 0));
    } else {
      mu_left.push_back(tensor_lift(Poly::variable(R, static_cast<int>(v)), T3, 2));
      std::vector<int> into12(2 * nv);
      for (size_t i = 0; i < 2 * nv; ++i) into12[i] = static_cast<int>(i + nv);
      mu_right.push_back(G->comult_[v].reindex(T3->ring(), into12));
    }
  }
  std::vector<Poly> unit_left, unit_right, anti_left, anti_right;
  for (size_t b = 0; b < 2 * nv; ++b) {
    size_t v = b % nv;
    Poly var = Poly::variable(R, static_cast<int>(v));
    Poly cst = Poly::constant(R, G->counit_[v]);
    unit_left.push_back(b < nv ? cst : var);
    unit_right.push_back(b < nv ? var : cst);
    anti_left.push_back(b < nv ? G->antipode_[v] : var);
    anti_right.push_back(b < nv ? var : G->antipode_[v]);
  }
  for (size_t v = 0; v < nv; ++v) {
    const Poly& mv = G->comult_[v];
    Poly lhs = T3->reduce(mv.substitute(mu_left));
    Poly rhs = T3->reduce(mv.substitute(mu_right));
    if (!(lhs == rhs)) fail("coassociativity", v, lhs - rhs);
    Poly var = Poly::variable(R, static_cast<int>(v));
    Poly ul = G->A_->reduce(mv.substitute(unit_left) - var);
    if (!ul.is_zero()) fail("left counit", v, ul);
    Poly ur = G->A_->reduce(mv.substitute(unit_right) - var);
    if (!ur.is_zero()) fail("right counit", v, ur);
    Poly eta = Poly::constant(R, G->counit_[v]);
    Poly al = G->A_->reduce(mv.substitute(anti_left) - eta);
    if (!al.is_zero()) fail("left antipode", v, al);
    Poly ar = G->A_->reduce(mv.substitute(anti_right) - eta);
    if (!ar.is_zero()) fail("right antipode", v, ar);
  }
  return G;
}

Poly HopfAlgebra::comult_poly(const Poly& p) const { return T2_->reduce(p.substitute(comult_)); }

Scalar HopfAlgebra::counit_value(const Poly& p) const {
  return eval_at_constants(p, counit_).constant_coefficient();
}

Poly HopfAlgebra::antipode_poly(const Poly& p) const { return A_->reduce(p.substitute(antipode_)); }

std::string HopfAlgebra::describe() const {
  std::string head = name_.empty() ? std::string("group") : name_;
  return head + " over " + A_->describe();
}

HopfPtr builtin_group(const std::string& name, const Ring& R) {
  auto var = [](const PresentationPtr& P, const char* n) { return Poly::variable(P->ring(), P->ring()->var_index(n)); };
  auto tvar = [](const PresentationPtr& T2, const char* n, int block) {
    return Poly::variable(T2->ring(), T2->ring()->var_index(std::string(n) + "@" + std::to_string(block)));
  };
  if (name == "Ga") {
    auto A = AlgebraPresentation::free_algebra(R, {"x"});
    auto T2 = tensor_power(A, 2);
    return HopfAlgebra::make(A, {tvar(T2, "x", 0) + tvar(T2, "x", 1)}, {Scalar::zero(R)}, {-var(A, "x")}, "Ga");
  }
  if (name == "Gm") {
    auto A = AlgebraPresentation::make(R, {"t", "tbar"}, {}, {{"t", "tbar"}});
    auto T2 = tensor_power(A, 2);
    return HopfAlgebra::make(A, {tvar(T2, "t", 0) * tvar(T2, "t", 1), tvar(T2, "tbar", 0) * tvar(T2, "tbar", 1)},
                             {Scalar::one(R), Scalar::one(R)}, {var(A, "tbar"), var(A, "t")}, "Gm");
  }
  if (name == "Aff1") {
    auto A = AlgebraPresentation::make(R, {"a", "abar", "b"}, {}, {{"a", "abar"}});
    auto T2 = tensor_power(A, 2);
    return HopfAlgebra::make(
        A,
        {tvar(T2, "a", 0) * tvar(T2, "a", 1), tvar(T2, "abar", 0) * tvar(T2, "abar", 1),
         tvar(T2, "b", 0) + tvar(T2, "a", 0) * tvar(T2, "b", 1)},
        {Scalar::one(R), Scalar::one(R), Scalar::zero(R)},
        {var(A, "abar"), var(A, "a"), -var(A, "abar") * var(A, "b")}, "Aff1");
  }
  if (name == "Heis3") {
    auto A = AlgebraPresentation::free_algebra(R, {"p", "q", "r"});
    auto T2 = tensor_power(A, 2);
    return HopfAlgebra::make(
        A,
        {tvar(T2, "p", 0) + tvar(T2, "p", 1), tvar(T2, "q", 0) + tvar(T2, "q", 1),
         tvar(T2, "r", 0) + tvar(T2, "r", 1) + tvar(T2, "p", 0) * tvar(T2, "q", 1)},
        {Scalar::zero(R), Scalar::zero(R), Scalar::zero(R)},
        {-var(A, "p"), -var(A, "q"), -var(A, "r") + var(A, "p") * var(A, "q")}, "Heis3");
  }
  throw LookupError("unknown builtin group: " + name);
}

bool CoLieClass::operator==(const CoLieClass& o) const {
  if (!base->ring()->same_as(*o.base->ring())) return false;
  return coords == o.coords;
}

CoLieClass CoLieClass::operator+(const CoLieClass& o) const {
  CoLieClass out = *this;
  for (const auto& [v, c] : o.coords) {
    auto it = out.coords.find(v);
    if (it == out.coords.end()) {
      if (!c.is_zero()) out.coords.emplace(v, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.coords.erase(it);
    }
  }
  return out;
}

CoLieClass CoLieClass::operator-() const {
  CoLieClass out = *this;
  for (auto& [v, c] : out.coords) c = -c;
  return out;
}

std::string CoLieClass::to_string() const { return names_of(base, coords); }

bool CoTensor::operator==(const CoTensor& o) const {
  if (!rows->ring()->same_as(*o.rows->ring()) || !cols->ring()->same_as(*o.cols->ring())) return false;
  return coords == o.coords;
}

CoTensor CoTensor::operator+(const CoTensor& o) const {
  CoTensor out = *this;
  for (const auto& [k, c] : o.coords) {
    auto it = out.coords.find(k);
    if (it == out.coords.end()) {
      if (!c.is_zero()) out.coords.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.coords.erase(it);
    }
  }
  return out;
}

CoTensor CoTensor::operator-() const {
  CoTensor out = *this;
  for (auto& [k, c] : out.coords) c = -c;
  return out;
}

CoTensor CoTensor::transpose() const {
  if (!rows->ring()->same_as(*cols->ring())) throw ContextError("transpose needs matching row and column groups");
  CoTensor out{rows, cols, {}};
  for (const auto& [k, c] : coords) out.coords.emplace(std::make_pair(k.second, k.first), c);
  return out;
}

std::string CoTensor::to_string() const {
  std::string s;
  for (const auto& [k, c] : coords) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*[" + rows->ring()->vars()[k.first] + "](x)[" + cols->ring()->vars()[k.second] + "]";
  }
  return s.empty() ? "0" : s;
}

CoLieClass colie_reduce(const HopfPtr& G, const Poly& z) {
  const auto& A = G->presentation();
  if (!A->is_smooth()) throw PresentationError("co-Lie reduction needs a smooth presentation");
  Poly zr = A->reduce(z);
  if (!G->counit_value(zr).is_zero()) throw ContextError("co-Lie reduction needs an augmentation-ideal element");
  CoLieClass out{A, {}};
  auto grad = [&](int v) { return G->counit_value(zr.derivative(v)); };
  for (int v : A->primary_vars()) {
    Scalar c = grad(v);
    int bar = A->partner_of(v);
    if (bar >= 0) {
      Scalar e = G->counit(bar);
      c = c - e * e * grad(bar);
    }
    if (!c.is_zero()) out.coords.emplace(v, c);
  }
  return out;
}

std::vector<std::pair<Poly, Poly>> comult_tail(const HopfPtr& G, const Poly& z) {
  Poly zr = G->presentation()->reduce(z);
  if (!G->counit_value(zr).is_zero()) throw ContextError("comultiplication tail needs an augmentation-ideal element");
  const auto& T2 = G->tensor2();
  Poly tail = T2->reduce(G->comult_poly(zr) - tensor_lift(zr, T2, 0) - tensor_lift(zr, T2, 1));
  return split_tail(tail, T2, *G, *G, "comultiplication tail");
}

CoTensor lambda_map(const HopfPtr& G, const Poly& z) {
  CoTensor out{G->presentation(), G->presentation(), {}};
  for (const auto& [a, b] : comult_tail(G, z)) {
    CoLieClass ra = colie_reduce(G, a), rb = colie_reduce(G, b);
    for (const auto& [i, ci] : ra.coords)
      for (const auto& [j, cj] : rb.coords) {
        auto bump = [&](int r, int c, const Scalar& val) {
          auto key = std::make_pair(r, c);
          auto it = out.coords.find(key);
          Scalar next = it == out.coords.end() ? val : it->second + val;
          if (next.is_zero()) {
            if (it != out.coords.end()) out.coords.erase(it);
          } else if (it == out.coords.end()) {
            out.coords.emplace(key, next);
          } else {
            it->second = next;
          }
        };
        bump(i, j, ci * cj);
        bump(j, i, -(ci * cj));
      }
  }
  return out;
}

CoactionPtr Coaction::make(HopfPtr D, HopfPtr A, std::vector<Poly> images, std::string name) {
  auto rho = std::shared_ptr<Coaction>(new Coaction());
  rho->D_ = std::move(D);
  rho->A_ = std::move(A);
  rho->M_ = mixed_tensor(rho->D_->presentation(), rho->A_->presentation());
  rho->name_ = std::move(name);
  const auto& RD = rho->D_->presentation()->ring();
  const auto& RA = rho->A_->presentation()->ring();
  size_t nd = RD->nvars(), na = RA->nvars();
  if (images.size() != na) throw ContextError("coaction: one image per generator of the acted group");
  for (Poly& p : images) {
    if (p.ring() != rho->M_->ring() && !p.ring()->same_as(*rho->M_->ring()))
      throw ContextError("coaction images must live in the mixed tensor ring");
    rho->images_.push_back(rho->M_->reduce(p));
  }

  for (const Poly& r : rho->A_->presentation()->relations()) {
    Poly img = rho->M_->reduce(r.substitute(rho->images_));
    if (!img.is_zero())
      throw PresentationError("coaction axiom failed (not an algebra map) on relation " + r.to_string() +
                              ": residue " + img.to_string());
  }

  std::vector<Poly> counit_side, identity_side;
  for (size_t i = 0; i < nd; ++i) {
    counit_side.push_back(Poly::constant(RA, rho->D_->counit(static_cast<int>(i))));
    identity_side.push_back(Poly::variable(RD, static_cast<int>(i)));
  }
  for (size_t w = 0; w < na; ++w) {
    counit_side.push_back(Poly::variable(RA, static_cast<int>(w)));
    identity_side.push_back(Poly::constant(RD, rho->A_->counit(static_cast<int>(w))));
  }

  PresentationPtr T = tensor_blocks({rho->D_->presentation(), rho->D_->presentation(), rho->A_->presentation()});
  std::vector<Poly> comodule_left, comodule_right;
  for (size_t i = 0; i < nd; ++i) {
    std::vector<int> into01(2 * nd);
    for (size_t j = 0; j < 2 * nd; ++j) into01[j] = static_cast<int>(j);
    comodule_left.push_back(rho->D_->comult(static_cast<int>(i)).reindex(T->ring(), into01));
    comodule_right.push_back(Poly::variable(T->ring(), static_cast<int>(i)));
  }
  std::vector<int> shift(nd + na);
  for (size_t j = 0; j < nd + na; ++j) shift[j] = static_cast<int>(j + nd);
  for (size_t w = 0; w < na; ++w) {
    comodule_left.push_back(Poly::variable(T->ring(), static_cast<int>(2 * nd + w)));
    comodule_right.push_back(rho->images_[w].reindex(T->ring(), shift));
  }

  for (size_t w = 0; w < na; ++w) {
    const Poly& img = rho->images_[w];
    Poly var = Poly::variable(RA, static_cast<int>(w));
    Poly cu = rho->A_->presentation()->reduce(img.substitute(counit_side) - var);
    if (!cu.is_zero())
      throw PresentationError("coaction axiom failed (counit) on generator " + RA->vars()[w] + ": residue " +
                              cu.to_string());
    Poly eta = Poly::constant(RD, rho->A_->counit(static_cast<int>(w)));
    Poly idp = rho->D_->presentation()->reduce(img.substitute(identity_side) - eta);
    if (!idp.is_zero())
      throw PresentationError("coaction axiom failed (identity preservation) on generator " + RA->vars()[w] +
                              ": residue " + idp.to_string());
    Poly lhs = T->reduce(img.substitute(comodule_left));
    Poly rhs = T->reduce(img.substitute(comodule_right));
    if (!(lhs == rhs))
      throw PresentationError("coaction axiom failed (comodule associativity) on generator " + RA->vars()[w] +
                              ": residue " + (lhs - rhs).to_string());
  }
  return rho;
}

Poly Coaction::apply(const Poly& p) const { return M_->reduce(p.substitute(images_)); }

std::string Coaction::describe() const {
  std::string head = name_.empty() ? std::string("coaction") : name_;
  return head + ": " + D_->describe() + " acting on " + A_->describe();
}

std::vector<std::pair<Poly, Poly>> coaction_tail(const Coaction& rho, const Poly& z) {
  Poly zr = rho.acted()->presentation()->reduce(z);
  if (!rho.acted()->counit_value(zr).is_zero())
    throw ContextError("coaction tail needs an augmentation-ideal element");
  Poly tail = rho.mixed()->reduce(rho.apply(zr) - tensor_lift(zr, rho.mixed(), 1));
  return split_tail(tail, rho.mixed(), *rho.actor(), *rho.acted(), "coaction tail");
}

CoTensor lambda_bar(const Coaction& rho, const Poly& z) {
  CoTensor out{rho.actor()->presentation(), rho.acted()->presentation(), {}};
  for (const auto& [d, b] : coaction_tail(rho, z)) {
    CoLieClass rd = colie_reduce(rho.actor(), d), rb = colie_reduce(rho.acted(), b);
    for (const auto& [i, ci] : rd.coords)
      for (const auto& [j, cj] : rb.coords) {
        auto key = std::make_pair(i, j);
        auto it = out.coords.find(key);
        Scalar next = it == out.coords.end() ? ci * cj : it->second + ci * cj;
        if (next.is_zero()) {
          if (it != out.coords.end()) out.coords.erase(it);
        } else if (it == out.coords.end()) {
          out.coords.emplace(key, next);
        } else {
          it->second = next;
        }
      }
  }
  return out;
}

CoactionPtr gm_scales_ga(const Ring& R) {
  HopfPtr D = builtin_group("Gm", R);
  HopfPtr A = builtin_group("Ga", R);
  PresentationPtr M = mixed_tensor(D->presentation(), A->presentation());
  Poly img = Poly::variable(M->ring(), M->ring()->var_index("t@0")) *
             Poly::variable(M->ring(), M->ring()->var_index("x@1"));
  return Coaction::make(D, A, {img}, "Gm scaling Ga");
}

CoactionPtr conjugation_action(const HopfPtr& G) {
  {
    std::lock_guard<std::mutex> lk(G->conj_mu_);
    if (G->conj_cache_) return G->conj_cache_;
  }
  PresentationPtr M = mixed_tensor(G->presentation(), G->presentation());
  QuotAlgebra alg{M};
  size_t nv = G->presentation()->ring()->nvars();
  std::vector<Poly> gi, hi;
  for (size_t v = 0; v < nv; ++v) {
    gi.push_back(Poly::variable(M->ring(), static_cast<int>(v)));
    hi.push_back(Poly::variable(M->ring(), static_cast<int>(nv + v)));
  }
  auto gamma = make_point(G, alg, gi);
  auto h = make_point(G, alg, hi);
  auto conj = point_compose(point_compose(gamma, h), point_inverse(gamma));
  std::string nm = G->name().empty() ? std::string("conjugation") : G->name() + " conjugation";
  CoactionPtr rho = Coaction::make(G, G, conj.images, nm);
  std::lock_guard<std::mutex> lk(G->conj_mu_);
  if (!G->conj_cache_) G->conj_cache_ = rho;
  return G->conj_cache_;
}

}  // namespace cdf
