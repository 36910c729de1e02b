#include "cdf/simplex.hpp"

#include <algorithm>
#include <sstream>

namespace cdf {

// --- IndexMap -------------------------------------------------------------

IndexMap IndexMap::of(std::vector<int> images, int target) {
  if (images.empty()) throw IndexError("index map: empty image list");
  if (target < 0) throw IndexError("index map: negative target degree");
  for (int j : images)
    if (j < 0 || j > target) throw IndexError("index map: image out of range");
  IndexMap m;
  m.source = static_cast<int>(images.size()) - 1;
  m.target = target;
  m.images = std::move(images);
  return m;
}

IndexMap IndexMap::identity(int n) {
  std::vector<int> im(n + 1);
  for (int i = 0; i <= n; ++i) im[i] = i;
  return of(std::move(im), n);
}

IndexMap IndexMap::skip(int i, int n) {
  if (i < 0 || i > n + 1) throw IndexError("skip: vertex out of range");
  std::vector<int> im(n + 1);
  for (int j = 0; j <= n; ++j) im[j] = j < i ? j : j + 1;
  return of(std::move(im), n + 1);
}

IndexMap IndexMap::repeat(int i, int n) {
  if (n < 1) throw IndexError("repeat: degree must be positive");
  if (i < 0 || i > n - 1) throw IndexError("repeat: vertex out of range");
  std::vector<int> im(n + 1);
  for (int j = 0; j <= n; ++j) im[j] = j <= i ? j : j - 1;
  return of(std::move(im), n - 1);
}

IndexMap IndexMap::merge(int r, int s, int n) {
  if (!(0 <= r && r < s && s <= n)) throw IndexError("merge: need 0 <= r < s <= n");
  std::vector<int> im(n + 1);
  for (int j = 0; j <= n; ++j) im[j] = j < s ? j : (j == s ? r : j - 1);
  return of(std::move(im), n - 1);
}

IndexMap IndexMap::permutation(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size()) - 1;
  std::vector<bool> seen(sigma.size(), false);
  for (int j : sigma) {
    if (j < 0 || j > n || seen[j]) throw IndexError("permutation: not a bijection");
    seen[j] = true;
  }
  return of(sigma, n);
}

IndexMap IndexMap::then(const IndexMap& next) const {
  if (target != next.source) throw IndexError("index map composition: degree mismatch");
  std::vector<int> im(images.size());
  for (size_t i = 0; i < images.size(); ++i) im[i] = next.images[images[i]];
  return of(std::move(im), next.target);
}

// --- structured keys -------------------------------------------------------

bool EpsKey::has_repeated_var() const {
  std::vector<int> vars;
  vars.reserve(factors.size());
  for (auto& f : factors) vars.push_back(f.second);
  std::sort(vars.begin(), vars.end());
  return std::adjacent_find(vars.begin(), vars.end()) != vars.end();
}

namespace {

// Canonicalize a factor list in place and return the sign it picks up,
// 0 when the product vanishes.  Slots commute freely; exchanging the
// variables between two slots flips the sign, so the canonical form has
// slots strictly increasing and the variable pattern sorted ascending.
int canonical_sign(Flavor flavor, std::vector<std::pair<int, int>>& factors) {
  std::sort(factors.begin(), factors.end());
  for (size_t i = 0; i + 1 < factors.size(); ++i)
    if (factors[i].first == factors[i + 1].first) return 0;  // same slot: square of the slot ideal
  int inversions = 0;
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[i].second > factors[j].second) ++inversions;
      else if (flavor == Flavor::Strong && factors[i].second == factors[j].second) return 0;
    }
  std::vector<int> vars;
  vars.reserve(factors.size());
  for (auto& f : factors) vars.push_back(f.second);
  std::sort(vars.begin(), vars.end());
  for (size_t i = 0; i < factors.size(); ++i) factors[i].second = vars[i];
  return inversions % 2 ? -1 : 1;
}

void add_entry(std::map<EpsKey, Poly>& table, EpsKey key, const Poly& c) {
  auto it = table.find(key);
  if (it == table.end())
    table.emplace(std::move(key), c);
  else
    it->second += c;
}

}  // namespace

// --- family ----------------------------------------------------------------

SimplexFamilyPtr detail_make_family(PresentationPtr base, Flavor flavor, EngineKind engine, GroebnerLimits lim,
                                    bool allow_smooth) {
  if (!base) throw ContextError("simplex family: null base presentation");
  if (engine == EngineKind::Structured) {
    bool ok = base->is_free() || (allow_smooth && base->is_smooth());
    if (!ok)
      throw EngineError("structured engine requires a free base algebra; use the generic engine for presented bases");
  } else if (!base->base().is_field()) {
    throw ContextError("generic engine requires a field base ring (normal forms use Groebner bases)");
  }
  auto fam = std::shared_ptr<SimplexFamily>(new SimplexFamily());
  fam->base_ = std::move(base);
  fam->flavor_ = flavor;
  fam->engine_ = engine;
  fam->limits_ = lim;
  fam->allow_smooth_ = allow_smooth;
  return fam;
}

SimplexFamilyPtr SimplexFamily::make(PresentationPtr base, Flavor flavor, EngineKind engine, GroebnerLimits lim) {
  return detail_make_family(std::move(base), flavor, engine, lim, false);
}

SimplexRingPtr SimplexFamily::ring(int n) const {
  if (n < 0) throw IndexError("simplex ring: degree must be >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = rings_.find(n);
  if (it != rings_.end()) return it->second;
  auto r = std::shared_ptr<SimplexRing>(new SimplexRing());
  r->family_ = shared_from_this();
  r->n_ = n;
  if (engine_ == EngineKind::Generic) r->init_generic();
  rings_.emplace(n, r);
  return r;
}

SimplexFamilyPtr SimplexFamily::sibling() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (sibling_) return sibling_;
  EngineKind other = engine_ == EngineKind::Structured ? EngineKind::Generic : EngineKind::Structured;
  auto sib = detail_make_family(base_, flavor_, other, limits_, allow_smooth_);
  std::const_pointer_cast<SimplexFamily>(sib)->sibling_ = shared_from_this();
  sibling_ = sib;
  return sibling_;
}

// --- generic engine setup ----------------------------------------------------

namespace {

// All monomials of total degree d in nv variables, as exponent vectors.
void monomials_of_degree(int nv, int d, Monomial& cur, int from, std::vector<Monomial>& out) {
  if (from == nv - 1) {
    cur[from] = d;
    out.push_back(cur);
    cur[from] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[from] = e;
    monomials_of_degree(nv, d - e, cur, from + 1, out);
  }
  cur[from] = 0;
}

}  // namespace

void SimplexRing::init_generic() {
  const auto& B = base();
  const auto& br = B->ring();
  int nv = static_cast<int>(br->nvars());
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n_ + 1) * nv);
  for (int i = 0; i <= n_; ++i)
    for (const auto& v : br->vars()) names.push_back(v + "@" + std::to_string(i));
  ambient_ = PolyRing::make(br->base(), std::move(names));

  auto X = [&](int i, int v) { return Poly::variable(ambient_, i * nv + v); };
  auto lift = [&](const Poly& p, int i) {
    std::vector<int> vm(nv);
    for (int v = 0; v < nv; ++v) vm[v] = i * nv + v;
    return p.reindex(ambient_, vm);
  };

  std::vector<Poly> gens;
  for (int i = 0; i <= n_; ++i)
    for (const auto& rel : B->relations()) gens.push_back(lift(rel, i));
  // squares of every pairwise difference ideal, generated on variables
  for (int r = 0; r < n_; ++r)
    for (int s = r + 1; s <= n_; ++s)
      for (int v = 0; v < nv; ++v)
        for (int w = v; w < nv; ++w) gens.push_back((X(s, v) - X(r, v)) * (X(s, w) - X(r, w)));
  if (flavor() == Flavor::Strong) {
    // mixed products through slot 0: diagonal and polarized variable pairs
    for (int r = 1; r < n_; ++r)
      for (int s = r + 1; s <= n_; ++s) {
        for (int v = 0; v < nv; ++v) gens.push_back((X(r, v) - X(0, v)) * (X(s, v) - X(0, v)));
        for (int v = 0; v < nv; ++v)
          for (int w = v + 1; w < nv; ++w)
            gens.push_back((X(r, v) - X(0, v)) * (X(s, w) - X(0, w)) + (X(r, w) - X(0, w)) * (X(s, v) - X(0, v)));
      }
  }

  GroebnerLimits lim = family_->limits();
  if (flavor() == Flavor::Strong && !B->is_free() && n_ >= 2) {
    // For presented bases the variable-level generators may in principle
    // miss mixed products of higher monomials; saturate by adjoining lifted
    // monomial products until the Groebner basis stops changing.
    Ideal current(ambient_, gens, lim);
    std::vector<Poly> gb = current.groebner_basis();
    bool stable = false;
    for (int d = 2; d <= lim.max_degree; ++d) {
      std::vector<Monomial> monos;
      Monomial cur(nv, 0);
      monomials_of_degree(nv, d, cur, 0, monos);
      for (const auto& m : monos) {
        Poly pm = Poly::from_terms(br, {Term{m, Scalar::one(br->base())}});
        for (int r = 1; r < n_; ++r)
          for (int s = r + 1; s <= n_; ++s)
            gens.push_back((lift(pm, r) - lift(pm, 0)) * (lift(pm, s) - lift(pm, 0)));
      }
      Ideal next(ambient_, gens, lim);
      std::vector<Poly> gb2 = next.groebner_basis();
      if (gb2 == gb) {
        stable = true;
        defining_ = next;
        break;
      }
      gb = std::move(gb2);
    }
    if (!stable) throw ResourceError("simplex ring: mixed-product saturation did not stabilize within the degree cap");
    return;
  }
  defining_ = Ideal(ambient_, std::move(gens), lim);
}

const PolyRingPtr& SimplexRing::ambient() const {
  if (engine() != EngineKind::Generic) throw EngineError("ambient ring: generic engine only");
  return ambient_;
}

const Ideal& SimplexRing::defining_ideal() const {
  if (engine() != EngineKind::Generic) throw EngineError("defining ideal: generic engine only");
  return defining_;
}

int SimplexRing::ambient_var(int slot, int var) const {
  if (engine() != EngineKind::Generic) throw EngineError("ambient variables: generic engine only");
  int nv = static_cast<int>(base()->ring()->nvars());
  if (slot < 0 || slot > n_ || var < 0 || var >= nv) throw IndexError("ambient variable out of range");
  return slot * nv + var;
}

// --- element construction -----------------------------------------------------

SimplexElement SimplexRing::wrap(std::map<EpsKey, Poly> table) const {
  const auto& B = base();
  bool weak = flavor() == Flavor::Weak;
  SimplexElement e;
  e.ring_ = shared_from_this();
  for (auto& [k, c] : table) {
    Poly cc = B->is_free() ? c : B->reduce(c);
    if (weak && k.has_repeated_var()) cc = cc.map_scalars([](const Scalar& s) { return s.reduce_mod_two(); });
    if (!cc.is_zero()) e.table_.emplace(k, std::move(cc));
  }
  return e;
}

SimplexElement SimplexRing::wrap(Poly ambient_poly) const {
  SimplexElement e;
  e.ring_ = shared_from_this();
  e.rep_ = defining_.normal_form(ambient_poly);
  return e;
}

SimplexElement SimplexRing::zero() const {
  if (engine() == EngineKind::Generic) return wrap(Poly::zero(ambient_));
  return wrap(std::map<EpsKey, Poly>{});
}

SimplexElement SimplexRing::one() const { return from_scalar(Scalar::one(base()->base())); }

SimplexElement SimplexRing::from_scalar(const Scalar& c) const {
  return from_base(Poly::constant(base()->ring(), c));
}

SimplexElement SimplexRing::from_base(const Poly& b) const { return universal(0, b); }

SimplexElement SimplexRing::universal(int i, const Poly& b) const {
  if (i < 0 || i > n_) throw IndexError("universal point: slot out of range");
  const auto& B = base();
  if (!b.ring()->same_as(*B->ring())) throw ContextError("universal point: polynomial not over the base algebra");
  if (engine() == EngineKind::Generic) {
    int nv = static_cast<int>(B->ring()->nvars());
    std::vector<int> vm(nv);
    for (int v = 0; v < nv; ++v) vm[v] = i * nv + v;
    return wrap(B->reduce(b).reindex(ambient_, vm));
  }
  Poly red = B->reduce(b);
  std::map<EpsKey, Poly> t;
  if (!red.is_zero()) t.emplace(EpsKey{}, red);
  if (i > 0) {
    for (int v : B->primary_vars()) {
      Poly d = B->derive(red, v);
      if (!d.is_zero()) add_entry(t, EpsKey{{{i, v}}}, d);
    }
  }
  return wrap(std::move(t));
}

SimplexElement SimplexRing::dgen(int r, int s, const Poly& b) const {
  return universal(s, b) - universal(r, b);
}

SimplexElement SimplexRing::eps(int slot, int var) const {
  if (slot < 1 || slot > n_) throw IndexError("eps: slot out of range");
  int nv = static_cast<int>(base()->ring()->nvars());
  if (var < 0 || var >= nv) throw IndexError("eps: variable out of range");
  Poly x = Poly::variable(base()->ring(), var);
  return universal(slot, x) - universal(0, x);
}

std::string SimplexRing::describe() const {
  std::ostringstream os;
  os << (flavor() == Flavor::Weak ? "weak" : "strong") << " simplex ring, degree " << n_ << ", "
     << (engine() == EngineKind::Structured ? "structured" : "generic") << " engine over " << base()->describe();
  return os.str();
}

// --- element arithmetic ------------------------------------------------------

namespace {

void check_rings(const SimplexElement& a, const SimplexElement& b) {
  if (!a.ring() || !b.ring()) throw ContextError("simplex element: missing ring");
  if (a.ring() != b.ring()) {
    const auto& ra = *a.ring();
    const auto& rb = *b.ring();
    bool same = ra.degree() == rb.degree() && ra.flavor() == rb.flavor() && ra.engine() == rb.engine() &&
                ra.base() == rb.base();
    if (!same) throw ContextError("simplex elements live in different rings");
  }
}

}  // namespace

bool SimplexElement::is_zero() const {
  if (!ring_) return true;
  return ring_->engine() == EngineKind::Generic ? rep_.is_zero() : table_.empty();
}

SimplexElement SimplexElement::operator+(const SimplexElement& o) const {
  check_rings(*this, o);
  if (ring_->engine() == EngineKind::Generic) return ring_->wrap(rep_ + o.rep_);
  std::map<EpsKey, Poly> t = table_;
  for (const auto& [k, c] : o.table_) add_entry(t, k, c);
  return ring_->wrap(std::move(t));
}

SimplexElement SimplexElement::operator-(const SimplexElement& o) const { return *this + (-o); }

SimplexElement SimplexElement::operator-() const {
  if (!ring_) return *this;
  if (ring_->engine() == EngineKind::Generic) return ring_->wrap(-rep_);
  std::map<EpsKey, Poly> t;
  for (const auto& [k, c] : table_) t.emplace(k, -c);
  return ring_->wrap(std::move(t));
}

SimplexElement SimplexElement::operator*(const SimplexElement& o) const {
  check_rings(*this, o);
  if (ring_->engine() == EngineKind::Generic) return ring_->wrap(rep_ * o.rep_);
  std::map<EpsKey, Poly> t;
  Flavor f = ring_->flavor();
  for (const auto& [ka, ca] : table_)
    for (const auto& [kb, cb] : o.table_) {
      std::vector<std::pair<int, int>> factors = ka.factors;
      factors.insert(factors.end(), kb.factors.begin(), kb.factors.end());
      int sg = canonical_sign(f, factors);
      if (sg == 0) continue;
      Poly c = ca * cb;
      if (sg < 0) c = -c;
      add_entry(t, EpsKey{std::move(factors)}, c);
    }
  return ring_->wrap(std::move(t));
}

bool SimplexElement::operator==(const SimplexElement& o) const {
  check_rings(*this, o);
  return ring_->engine() == EngineKind::Generic ? rep_ == o.rep_ : table_ == o.table_;
}

SimplexElement SimplexElement::scaled(const Scalar& c) const {
  if (!ring_) throw ContextError("simplex element: missing ring");
  if (ring_->engine() == EngineKind::Generic) return ring_->wrap(rep_.scaled(c));
  std::map<EpsKey, Poly> t;
  for (const auto& [k, cc] : table_) t.emplace(k, cc.scaled(c));
  return ring_->wrap(std::move(t));
}

SimplexElement SimplexElement::pow(int e) const {
  if (!ring_) throw ContextError("simplex element: missing ring");
  if (e < 0) throw ContextError("pow: negative exponent; use invert");
  SimplexElement acc = ring_->one();
  SimplexElement b = *this;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

SimplexElement SimplexElement::pullback(const IndexMap& phi) const {
  if (!ring_) throw ContextError("pullback: missing ring");
  if (phi.source != ring_->degree()) throw IndexError("pullback: map source does not match element degree");
  auto target = ring_->family()->ring(phi.target);
  if (ring_->engine() == EngineKind::Generic) {
    int nv = static_cast<int>(ring_->base()->ring()->nvars());
    std::vector<int> vm(ring_->ambient_->nvars());
    for (int i = 0; i <= phi.source; ++i)
      for (int v = 0; v < nv; ++v) vm[i * nv + v] = phi.images[i] * nv + v;
    return target->wrap(rep_.reindex(target->ambient_, vm));
  }
  int j0 = phi.images[0];
  SimplexElement out = target->zero();
  for (const auto& [k, c] : table_) {
    SimplexElement term = j0 == 0 ? target->from_base(c) : target->universal(j0, c);
    for (const auto& [slot, var] : k.factors) {
      int j = phi.images[slot];
      Poly x = Poly::variable(ring_->base()->ring(), var);
      SimplexElement f = target->universal(j, x) - target->universal(j0, x);
      term = term * f;
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

Poly SimplexElement::augmentation() const {
  if (!ring_) throw ContextError("augmentation: missing ring");
  const auto& B = ring_->base();
  if (ring_->engine() == EngineKind::Structured) {
    auto it = table_.find(EpsKey{});
    return it == table_.end() ? Poly::zero(B->ring()) : it->second;
  }
  int nv = static_cast<int>(B->ring()->nvars());
  std::vector<int> vm(ring_->ambient_->nvars());
  for (int i = 0; i <= ring_->degree(); ++i)
    for (int v = 0; v < nv; ++v) vm[i * nv + v] = v;
  return B->reduce(rep_.reindex(B->ring(), vm));
}

SimplexElement SimplexElement::invert() const {
  if (!ring_) throw ContextError("invert: missing ring");
  Poly c = augmentation();
  Poly cinv = ring_->base()->inverse_of(c);
  SimplexElement ci = ring_->from_base(cinv);
  SimplexElement nu = *this - ring_->from_base(c);
  SimplexElement out = ring_->zero();
  SimplexElement nupow = ring_->one();
  int n = ring_->degree();
  for (int k = 0; k <= n; ++k) {
    SimplexElement term = ci.pow(k + 1) * nupow;
    out = (k % 2) ? out - term : out + term;
    if (k < n) {
      nupow = nupow * nu;
      if (nupow.is_zero()) break;
    }
  }
  if (!((*this * out) == ring_->one())) throw EngineError("invert: inverse verification failed");
  return out;
}

const std::map<EpsKey, Poly>& SimplexElement::table() const {
  if (!ring_ || ring_->engine() != EngineKind::Structured)
    throw EngineError("structured table: structured engine only");
  return table_;
}

const Poly& SimplexElement::rep() const {
  if (!ring_ || ring_->engine() != EngineKind::Generic)
    throw EngineError("ambient representative: generic engine only");
  return rep_;
}

std::string SimplexElement::to_string() const {
  if (!ring_) return "0";
  if (ring_->engine() == EngineKind::Generic) return rep_.to_string();
  if (table_.empty()) return "0";
  const auto& names = ring_->base()->ring()->vars();
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : table_) {
    if (!first) os << " + ";
    first = false;
    std::string coeff = c.to_string();
    bool unit_coeff = c.is_constant() && c.constant_coefficient().is_one();
    if (k.factors.empty()) {
      os << coeff;
      continue;
    }
    if (!unit_coeff) {
      bool simple = c.terms().size() == 1;
      os << (simple ? coeff : "(" + coeff + ")") << "*";
    }
    for (size_t i = 0; i < k.factors.size(); ++i) {
      if (i) os << "*";
      os << "e(" << k.factors[i].first << "," << names[k.factors[i].second] << ")";
    }
  }
  return os.str();
}

// --- derived maps --------------------------------------------------------------

SimplexElement mult_map(int r, int s, const SimplexElement& e) {
  if (!e.ring()) throw ContextError("mult_map: missing ring");
  return e.pullback(IndexMap::merge(r, s, e.ring()->degree()));
}

SimplexElement splitting_map(int r, const SimplexElement& e) {
  if (!e.ring()) throw ContextError("splitting_map: missing ring");
  return e.pullback(IndexMap::skip(r, e.ring()->degree()));
}

SimplexElement eval_poly(const Poly& p, const std::vector<SimplexElement>& images, const SimplexRingPtr& target) {
  if (!target) throw ContextError("eval_poly: missing target ring");
  if (images.size() != p.ring()->nvars()) throw ContextError("eval_poly: one image per variable required");
  if (!(p.ring()->base() == target->base()->base()))
    throw ContextError("eval_poly: scalar rings differ");
  std::vector<std::vector<SimplexElement>> pows(images.size());
  auto power = [&](int v, int e) -> const SimplexElement& {
    auto& chain = pows[v];
    if (chain.empty()) chain.push_back(images[v]);
    while (static_cast<int>(chain.size()) < e) chain.push_back(chain.back() * images[v]);
    return chain[e - 1];
  };
  SimplexElement out = target->zero();
  for (const auto& t : p.terms()) {
    SimplexElement term = target->from_scalar(t.coeff);
    for (size_t v = 0; v < images.size(); ++v)
      if (t.mono[v] > 0) term = term * power(static_cast<int>(v), t.mono[v]);
    out += term;
  }
  return out;
}

SimplexElement lift_to_generic(const SimplexElement& e, const SimplexRingPtr& target) {
  if (!e.ring() || !target) throw ContextError("lift_to_generic: missing ring");
  if (e.ring()->engine() != EngineKind::Structured || target->engine() != EngineKind::Generic)
    throw EngineError("lift_to_generic: structured source and generic target required");
  if (e.ring()->degree() != target->degree() || e.ring()->flavor() != target->flavor() ||
      !e.ring()->base()->ring()->same_as(*target->base()->ring()))
    throw ContextError("lift_to_generic: incompatible rings");
  SimplexElement out = target->zero();
  for (const auto& [k, c] : e.table()) {
    SimplexElement term = target->from_base(c);
    for (const auto& [slot, var] : k.factors) term = term * target->eps(slot, var);
    out += term;
  }
  return out;
}

SimplexElement project_to_structured(const SimplexElement& e, const SimplexRingPtr& target) {
  if (!e.ring() || !target) throw ContextError("project_to_structured: missing ring");
  if (e.ring()->engine() != EngineKind::Generic || target->engine() != EngineKind::Structured)
    throw EngineError("project_to_structured: generic source and structured target required");
  if (e.ring()->degree() != target->degree() || e.ring()->flavor() != target->flavor() ||
      !e.ring()->base()->ring()->same_as(*target->base()->ring()))
    throw ContextError("project_to_structured: incompatible rings");
  const auto& br = target->base()->ring();
  int nv = static_cast<int>(br->nvars());
  std::vector<SimplexElement> images;
  images.reserve(e.ring()->ambient()->nvars());
  for (int i = 0; i <= target->degree(); ++i)
    for (int v = 0; v < nv; ++v) images.push_back(target->universal(i, Poly::variable(br, v)));
  return eval_poly(e.rep(), images, target);
}

bool engine_crosscheck(const SimplexElement& e) {
  if (!e.ring()) throw ContextError("engine_crosscheck: missing ring");
  auto sib = e.ring()->family()->sibling()->ring(e.ring()->degree());
  if (e.ring()->engine() == EngineKind::Structured) {
    SimplexElement g = lift_to_generic(e, sib);
    return project_to_structured(g, e.ring()) == e;
  }
  SimplexElement s = project_to_structured(e, sib);
  return lift_to_generic(s, e.ring()) == e;
}

}  // namespace cdf
