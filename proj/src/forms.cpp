#include "cdf/forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cdf {

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (!a->ring()->same_as(*b->ring())) return false;
  return a->relations() == b->relations() && a->inverse_pairs() == b->inverse_pairs();
}

namespace {

// Sort a variable tuple ascending; the sign is the parity of the sorting
// permutation, 0 when a repeat kills the key (strong basis only).
int canonical_vars(bool strong, std::vector<int>& vars) {
  int inversions = 0;
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j) {
      if (vars[i] > vars[j]) ++inversions;
      else if (strong && vars[i] == vars[j]) return 0;
    }
  std::sort(vars.begin(), vars.end());
  return inversions % 2 ? -1 : 1;
}

bool has_repeat(const std::vector<int>& sorted_vars) {
  return std::adjacent_find(sorted_vars.begin(), sorted_vars.end()) != sorted_vars.end();
}

using FormTable = std::map<std::vector<int>, Poly>;

void add_entry(FormTable& t, std::vector<int> key, const Poly& c) {
  auto it = t.find(key);
  if (it == t.end())
    t.emplace(std::move(key), c);
  else
    it->second += c;
}

FormTable canon_table(const PresentationPtr& B, int n, bool strong, const FormTable& in) {
  if (!B) throw ContextError("form: missing base presentation");
  if (n < 0) throw ContextError("form: negative degree");
  FormTable raw;
  for (const auto& [k0, c0] : in) {
    if (static_cast<int>(k0.size()) != n) throw ContextError("form table: key length differs from degree");
    std::vector<int> k = k0;
    for (int v : k)
      if (v < 0 || v >= static_cast<int>(B->ring()->nvars()) || !B->is_primary(v))
        throw RepresentationError("form key: not a primary generator of the base");
    int sg = canonical_vars(strong, k);
    if (sg == 0) continue;
    Poly c = B->reduce(c0);
    if (sg < 0) c = -c;
    add_entry(raw, std::move(k), c);
  }
  FormTable out;
  for (auto& [k, c] : raw) {
    Poly cc = B->reduce(c);
    if (!strong && has_repeat(k)) cc = cc.map_scalars([](const Scalar& s) { return s.reduce_mod_two(); });
    if (!cc.is_zero()) out.emplace(k, std::move(cc));
  }
  return out;
}

FormTable merge_tables(const FormTable& a, const FormTable& b, bool negate_b) {
  FormTable t = a;
  for (const auto& [k, c] : b) add_entry(t, k, negate_b ? -c : c);
  return t;
}

FormTable wedge_tables(const PresentationPtr& B, bool strong, const FormTable& a, const FormTable& b) {
  FormTable t;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      int sg = canonical_vars(strong, k);
      if (sg == 0) continue;
      Poly c = ca * cb;
      if (sg < 0) c = -c;
      add_entry(t, std::move(k), c);
    }
  return t;
}

FormTable d_table(const PresentationPtr& B, bool strong, const FormTable& in) {
  FormTable t;
  for (const auto& [k, c] : in)
    for (int v : B->primary_vars()) {
      Poly dc = B->derive(c, v);
      if (dc.is_zero()) continue;
      if (strong && std::binary_search(k.begin(), k.end(), v)) continue;
      auto pos = std::lower_bound(k.begin(), k.end(), v);
      std::vector<int> key;
      key.reserve(k.size() + 1);
      key.insert(key.end(), k.begin(), pos);
      key.push_back(v);
      key.insert(key.end(), pos, k.end());
      if ((pos - k.begin()) % 2) dc = -dc;
      add_entry(t, std::move(key), dc);
    }
  return t;
}

std::string render_table(const FormTable& t, const PresentationPtr& B, const std::string& sym) {
  if (t.empty()) return "0";
  const auto& names = B->ring()->vars();
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t) {
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_constant() && c.constant_coefficient().is_one();
    if (k.empty()) {
      os << c.to_string();
      continue;
    }
    if (!unit) {
      bool simple = c.terms().size() == 1;
      os << (simple ? c.to_string() : "(" + c.to_string() + ")") << "*";
    }
    for (size_t i = 0; i < k.size(); ++i) {
      if (i) os << "^";
      os << sym << names[k[i]];
    }
  }
  return os.str();
}

}  // namespace

// --- classical strong forms -------------------------------------------------

ClassicalForm ClassicalForm::zero(PresentationPtr base, int degree) {
  ClassicalForm w;
  if (!base) throw ContextError("form: missing base presentation");
  if (degree < 0) throw ContextError("form: negative degree");
  w.base_ = std::move(base);
  w.n_ = degree;
  return w;
}

ClassicalForm ClassicalForm::term(PresentationPtr base, const Poly& coeff, std::vector<int> vars) {
  int n = static_cast<int>(vars.size());
  FormTable t;
  t.emplace(std::move(vars), coeff);
  return make(std::move(base), n, t);
}

ClassicalForm ClassicalForm::make(PresentationPtr base, int degree, const FormTable& table) {
  ClassicalForm w = zero(base, degree);
  w.table_ = canon_table(w.base_, degree, true, table);
  return w;
}

ClassicalForm ClassicalForm::operator+(const ClassicalForm& o) const {
  if (!same_presentation(base_, o.base_) || n_ != o.n_) throw ContextError("form addition: mismatched forms");
  return make(base_, n_, merge_tables(table_, o.table_, false));
}

ClassicalForm ClassicalForm::operator-(const ClassicalForm& o) const {
  if (!same_presentation(base_, o.base_) || n_ != o.n_) throw ContextError("form subtraction: mismatched forms");
  return make(base_, n_, merge_tables(table_, o.table_, true));
}

ClassicalForm ClassicalForm::operator-() const {
  FormTable t;
  for (const auto& [k, c] : table_) t.emplace(k, -c);
  return make(base_, n_, t);
}

bool ClassicalForm::operator==(const ClassicalForm& o) const {
  return same_presentation(base_, o.base_) && n_ == o.n_ && table_ == o.table_;
}

ClassicalForm ClassicalForm::scaled(const Scalar& c) const {
  FormTable t;
  for (const auto& [k, cc] : table_) t.emplace(k, cc.scaled(c));
  return make(base_, n_, t);
}

ClassicalForm ClassicalForm::scaled(const Poly& b) const {
  FormTable t;
  for (const auto& [k, cc] : table_) t.emplace(k, cc * b);
  return make(base_, n_, t);
}

std::string ClassicalForm::to_string() const { return render_table(table_, base_, "d"); }

// --- weak forms ---------------------------------------------------------------

WeakClassicalForm WeakClassicalForm::zero(PresentationPtr base, int degree) {
  WeakClassicalForm w;
  if (!base) throw ContextError("form: missing base presentation");
  if (degree < 0) throw ContextError("form: negative degree");
  w.base_ = std::move(base);
  w.n_ = degree;
  return w;
}

WeakClassicalForm WeakClassicalForm::term(PresentationPtr base, const Poly& coeff, std::vector<int> vars) {
  int n = static_cast<int>(vars.size());
  FormTable t;
  t.emplace(std::move(vars), coeff);
  return make(std::move(base), n, t);
}

WeakClassicalForm WeakClassicalForm::make(PresentationPtr base, int degree, const FormTable& table) {
  WeakClassicalForm w = zero(base, degree);
  w.table_ = canon_table(w.base_, degree, false, table);
  return w;
}

WeakClassicalForm WeakClassicalForm::operator+(const WeakClassicalForm& o) const {
  if (!same_presentation(base_, o.base_) || n_ != o.n_) throw ContextError("form addition: mismatched forms");
  return make(base_, n_, merge_tables(table_, o.table_, false));
}

WeakClassicalForm WeakClassicalForm::operator-(const WeakClassicalForm& o) const {
  if (!same_presentation(base_, o.base_) || n_ != o.n_) throw ContextError("form subtraction: mismatched forms");
  return make(base_, n_, merge_tables(table_, o.table_, true));
}

WeakClassicalForm WeakClassicalForm::operator-() const {
  FormTable t;
  for (const auto& [k, c] : table_) t.emplace(k, -c);
  return make(base_, n_, t);
}

bool WeakClassicalForm::operator==(const WeakClassicalForm& o) const {
  return same_presentation(base_, o.base_) && n_ == o.n_ && table_ == o.table_;
}

WeakClassicalForm WeakClassicalForm::scaled(const Scalar& c) const {
  FormTable t;
  for (const auto& [k, cc] : table_) t.emplace(k, cc.scaled(c));
  return make(base_, n_, t);
}

WeakClassicalForm WeakClassicalForm::scaled(const Poly& b) const {
  FormTable t;
  for (const auto& [k, cc] : table_) t.emplace(k, cc * b);
  return make(base_, n_, t);
}

ClassicalForm WeakClassicalForm::projection() const {
  ClassicalForm w = ClassicalForm::zero(base_, n_);
  FormTable t;
  for (const auto& [k, c] : table_)
    if (!has_repeat(k)) t.emplace(k, c);
  w.table_ = std::move(t);
  return w;
}

std::string WeakClassicalForm::to_string() const { return render_table(table_, base_, "d"); }

ClassicalForm wedge(const ClassicalForm& a, const ClassicalForm& b) {
  if (!same_presentation(a.base(), b.base())) throw ContextError("wedge: base algebra mismatch");
  return ClassicalForm::make(a.base(), a.degree() + b.degree(), wedge_tables(a.base(), true, a.table(), b.table()));
}

WeakClassicalForm wedge(const WeakClassicalForm& a, const WeakClassicalForm& b) {
  if (!same_presentation(a.base(), b.base())) throw ContextError("wedge: base algebra mismatch");
  return WeakClassicalForm::make(a.base(), a.degree() + b.degree(),
                                 wedge_tables(a.base(), false, a.table(), b.table()));
}

ClassicalForm exterior_d(const ClassicalForm& w) {
  return ClassicalForm::make(w.base(), w.degree() + 1, d_table(w.base(), true, w.table()));
}

WeakClassicalForm exterior_d(const WeakClassicalForm& w) {
  return WeakClassicalForm::make(w.base(), w.degree() + 1, d_table(w.base(), false, w.table()));
}

// --- multiderivations ------------------------------------------------------------

MultiDerivation MultiDerivation::zero(PresentationPtr base, int degree) {
  MultiDerivation d;
  if (!base) throw ContextError("multiderivation: missing base presentation");
  if (degree < 0) throw ContextError("multiderivation: negative degree");
  d.base_ = std::move(base);
  d.n_ = degree;
  return d;
}

MultiDerivation MultiDerivation::term(PresentationPtr base, const Poly& coeff, std::vector<int> vars) {
  MultiDerivation d = zero(std::move(base), static_cast<int>(vars.size()));
  FormTable t;
  t.emplace(std::move(vars), coeff);
  d.table_ = canon_table(d.base_, d.n_, true, t);
  return d;
}

MultiDerivation MultiDerivation::operator+(const MultiDerivation& o) const {
  if (!same_presentation(base_, o.base_) || n_ != o.n_) throw ContextError("multiderivation addition: mismatch");
  MultiDerivation d = zero(base_, n_);
  d.table_ = canon_table(base_, n_, true, merge_tables(table_, o.table_, false));
  return d;
}

std::string MultiDerivation::to_string() const { return render_table(table_, base_, "D"); }

Poly contract(const ClassicalForm& w, const MultiDerivation& d) {
  if (!same_presentation(w.base(), d.base())) throw ContextError("contract: base algebra mismatch");
  if (w.degree() != d.degree()) throw ContextError("contract: degree mismatch");
  Poly out = Poly::zero(w.base()->ring());
  for (const auto& [k, c] : w.table()) {
    auto it = d.table().find(k);
    if (it != d.table().end()) out += c * it->second;
  }
  return w.base()->reduce(out);
}

// --- combinatorial forms ------------------------------------------------------------

ScalarCombForm::ScalarCombForm(SimplexElement e) : elem_(std::move(e)) {
  if (!elem_.ring()) return;
  int n = elem_.ring()->degree();
  if (n == 0) return;
  if (elem_.ring()->engine() == EngineKind::Structured) {
    for (const auto& [k, c] : elem_.table())
      if (static_cast<int>(k.factors.size()) != n)
        throw FormError("combinatorial form: component survives a degeneracy pullback");
  } else {
    for (int i = 0; i < n; ++i)
      if (!elem_.pullback(IndexMap::repeat(i, n)).is_zero())
        throw FormError("combinatorial form: degeneracy pullback is nonzero");
  }
}

int ScalarCombForm::degree() const {
  if (!ring()) throw ContextError("combinatorial form: missing ring");
  return ring()->degree();
}

ScalarCombForm ScalarCombForm::operator+(const ScalarCombForm& o) const { return ScalarCombForm(elem_ + o.elem_); }
ScalarCombForm ScalarCombForm::operator-(const ScalarCombForm& o) const { return ScalarCombForm(elem_ - o.elem_); }
ScalarCombForm ScalarCombForm::operator-() const { return ScalarCombForm(-elem_); }

namespace {

ScalarCombForm nu_impl(const FormTable& table, int degree, const PresentationPtr& base, const SimplexFamilyPtr& fam,
                       Flavor expect) {
  if (!fam) throw ContextError("nu: missing simplex family");
  if (fam->flavor() != expect)
    throw ContextError(expect == Flavor::Strong ? "nu: classical forms target a strong family"
                                                : "nu: weak forms target a weak family");
  if (!same_presentation(fam->base(), base)) throw ContextError("nu: base algebra mismatch");
  auto R = fam->ring(degree);
  SimplexElement out = R->zero();
  for (const auto& [k, c] : table) {
    SimplexElement t = R->from_base(c);
    for (size_t i = 0; i < k.size(); ++i) t = t * R->eps(static_cast<int>(i) + 1, k[i]);
    out += t;
  }
  return ScalarCombForm(out);
}

FormTable comb_to_table(const ScalarCombForm& f) {
  // requires a structured element; keys of a valid form are full
  FormTable t;
  for (const auto& [k, c] : f.element().table()) {
    std::vector<int> key;
    key.reserve(k.factors.size());
    for (const auto& [slot, var] : k.factors) key.push_back(var);
    t.emplace(std::move(key), c);
  }
  return t;
}

SimplexRingPtr structured_target(const ScalarCombForm& f) {
  const auto& B = f.ring()->base();
  int n = f.degree();
  if (B->is_free()) return f.ring()->family()->sibling()->ring(n);
  if (B->is_smooth())
    return detail_make_family(B, f.ring()->flavor(), EngineKind::Structured, f.ring()->family()->limits(), true)
        ->ring(n);
  throw PresentationError("classical extraction requires a free or localized-free base algebra");
}

}  // namespace

ScalarCombForm nu(const ClassicalForm& w, const SimplexFamilyPtr& fam) {
  return nu_impl(w.table(), w.degree(), w.base(), fam, Flavor::Strong);
}

ScalarCombForm nu(const WeakClassicalForm& w, const SimplexFamilyPtr& fam) {
  return nu_impl(w.table(), w.degree(), w.base(), fam, Flavor::Weak);
}

ClassicalForm nu_inverse_strong(const ScalarCombForm& f) {
  if (!f.ring()) throw ContextError("nu_inverse: missing ring");
  if (f.ring()->flavor() != Flavor::Strong) throw ContextError("nu_inverse: strong form required");
  if (f.ring()->engine() == EngineKind::Structured)
    return ClassicalForm::make(f.ring()->base(), f.degree(), comb_to_table(f));
  auto target = structured_target(f);
  ScalarCombForm s(project_to_structured(f.element(), target));
  return ClassicalForm::make(target->base(), f.degree(), comb_to_table(s));
}

WeakClassicalForm nu_inverse_weak(const ScalarCombForm& f) {
  if (!f.ring()) throw ContextError("nu_inverse: missing ring");
  if (f.ring()->flavor() != Flavor::Weak) throw ContextError("nu_inverse: weak form required");
  if (f.ring()->engine() == EngineKind::Structured)
    return WeakClassicalForm::make(f.ring()->base(), f.degree(), comb_to_table(f));
  auto target = structured_target(f);
  ScalarCombForm s(project_to_structured(f.element(), target));
  return WeakClassicalForm::make(target->base(), f.degree(), comb_to_table(s));
}

ScalarCombForm star_product(const ScalarCombForm& f, const ScalarCombForm& g) {
  if (!f.ring() || !g.ring()) throw ContextError("star product: missing ring");
  if (f.ring()->flavor() != g.ring()->flavor() || f.ring()->engine() != g.ring()->engine() ||
      !same_presentation(f.ring()->base(), g.ring()->base()))
    throw ContextError("star product: incompatible forms");
  int m = f.degree(), n = g.degree();
  std::vector<int> ia(m + 1), ib(n + 1);
  std::iota(ia.begin(), ia.end(), 0);
  std::iota(ib.begin(), ib.end(), m);
  SimplexElement a = f.element().pullback(IndexMap::of(ia, m + n));
  SimplexElement b = g.element().pullback(IndexMap::of(ib, m + n));
  return ScalarCombForm(a * b);
}

ScalarCombForm cech_delta(const ScalarCombForm& f) {
  if (!f.ring()) throw ContextError("cech delta: missing ring");
  int n = f.degree();
  auto target = f.ring()->family()->ring(n + 1);
  SimplexElement out = target->zero();
  for (int i = 0; i <= n + 1; ++i) {
    SimplexElement face = f.element().pullback(IndexMap::skip(i, n));
    out = (i % 2) ? out - face : out + face;
  }
  return ScalarCombForm(out);
}

ScalarCombForm sym_action(const std::vector<int>& sigma, const ScalarCombForm& f) {
  return ScalarCombForm(f.element().pullback(IndexMap::permutation(sigma)));
}

ScalarCombForm module_action(const Poly& b, const ScalarCombForm& f, int slot) {
  if (!f.ring()) throw ContextError("module action: missing ring");
  return ScalarCombForm(f.ring()->universal(slot, b) * f.element());
}

ScalarCombForm to_strong(const ScalarCombForm& f, const SimplexFamilyPtr& strong_fam) {
  if (!f.ring() || !strong_fam) throw ContextError("to_strong: missing ring");
  if (f.ring()->flavor() != Flavor::Weak || strong_fam->flavor() != Flavor::Strong)
    throw ContextError("to_strong: weak source and strong target required");
  if (!same_presentation(f.ring()->base(), strong_fam->base())) throw ContextError("to_strong: base mismatch");
  if (strong_fam->engine() != f.ring()->engine()) throw EngineError("to_strong: engines must match");
  auto target = strong_fam->ring(f.degree());
  if (f.ring()->engine() == EngineKind::Structured) {
    SimplexElement out = target->zero();
    for (const auto& [k, c] : f.element().table()) {
      SimplexElement t = target->from_base(c);
      for (const auto& [slot, var] : k.factors) t = t * target->eps(slot, var);
      out += t;
    }
    return ScalarCombForm(out);
  }
  const auto& br = target->base()->ring();
  int nv = static_cast<int>(br->nvars());
  std::vector<SimplexElement> images;
  images.reserve(f.ring()->ambient()->nvars());
  for (int i = 0; i <= target->degree(); ++i)
    for (int v = 0; v < nv; ++v) images.push_back(target->universal(i, Poly::variable(br, v)));
  return ScalarCombForm(eval_poly(f.element().rep(), images, target));
}

}  // namespace cdf
