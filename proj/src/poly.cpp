#include "cdf/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cdf/error.hpp"

namespace cdf {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

namespace {

// Degrevlex on the index window [lo, hi).
int cmp_drl(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  int da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller trailing exponent wins
  }
  return 0;
}

}  // namespace

int compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  size_t n = a.size();
  if (ord.elim > 0) {
    if (int c = cmp_drl(a, b, 0, static_cast<size_t>(ord.elim))) return c;
    return cmp_drl(a, b, static_cast<size_t>(ord.elim), n);
  }
  return cmp_drl(a, b, 0, n);
}

PolyRingPtr PolyRing::make(Ring base, std::vector<std::string> vars, MonomialOrder ord) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw ContextError("duplicate variable name: " + vars[i]);
  return PolyRingPtr(new PolyRing(base, std::move(vars), ord));
}

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

Poly Poly::zero(const PolyRingPtr& r) {
  Poly p;
  p.ring_ = r;
  return p;
}

Poly Poly::constant(const PolyRingPtr& r, const Scalar& c) {
  Poly p = zero(r);
  if (!(c.ring() == r->base())) throw ContextError("constant scalar from wrong base ring");
  if (!c.is_zero()) p.terms_.push_back({Monomial(r->nvars(), 0), c});
  return p;
}

Poly Poly::constant(const PolyRingPtr& r, long c) { return constant(r, Scalar(r->base(), c)); }

Poly Poly::variable(const PolyRingPtr& r, int var, int exp) {
  if (var < 0 || static_cast<size_t>(var) >= r->nvars()) throw ContextError("variable index out of range");
  if (exp < 0) throw ContextError("negative exponent");
  Poly p = zero(r);
  if (exp == 0) return constant(r, 1);
  Monomial m(r->nvars(), 0);
  m[var] = exp;
  p.terms_.push_back({std::move(m), Scalar::one(r->base())});
  return p;
}

Poly Poly::from_terms(const PolyRingPtr& r, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare_monomials(a.mono, b.mono, r->order()) > 0;
  });
  Poly p = zero(r);
  for (auto& t : terms) {
    if (!(t.coeff.ring() == r->base())) throw ContextError("term scalar from wrong base ring");
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_[0].mono) == 0);
}

Scalar Poly::constant_coefficient() const {
  if (terms_.empty() || monomial_degree(terms_.back().mono) != 0) return Scalar::zero(ring_->base());
  return terms_.back().coeff;
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw ContextError("leading term of zero polynomial");
  return terms_.front();
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, monomial_degree(t.mono));
  return d;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

void Poly::check_same(const Poly& o) const {
  if (ring_ == o.ring_) return;
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) throw ContextError("polynomial ring mismatch");
}

Poly Poly::add_scaled(const Poly& o, const Scalar& c, const Monomial& m) const {
  check_same(o);
  Poly out = zero(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  Monomial shifted(ring_->nvars());
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (j < o.terms_.size()) {
      for (size_t k = 0; k < shifted.size(); ++k) shifted[k] = o.terms_[j].mono[k] + m[k];
    }
    if (i >= terms_.size())
      cmp = -1;
    else if (j >= o.terms_.size())
      cmp = 1;
    else
      cmp = compare_monomials(terms_[i].mono, shifted, ring_->order());
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      Scalar s = c * o.terms_[j].coeff;
      if (!s.is_zero()) out.terms_.push_back({shifted, s});
      ++j;
    } else {
      Scalar s = terms_[i].coeff + c * o.terms_[j].coeff;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  return add_scaled(o, Scalar::one(ring_->base()), Monomial(ring_->nvars(), 0));
}

Poly Poly::operator-(const Poly& o) const {
  return add_scaled(o, -Scalar::one(ring_->base()), Monomial(ring_->nvars(), 0));
}

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }

Poly Poly::operator-() const { return scaled(-Scalar::one(ring_->base())); }

Poly Poly::scaled(const Scalar& c) const {
  Poly out = zero(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar s = t.coeff * c;
    if (!s.is_zero()) out.terms_.push_back({t.mono, s});
  }
  return out;
}

Poly operator*(const Scalar& c, const Poly& p) { return p.scaled(c); }

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  struct Cmp {
    const PolyRing* r;
    bool operator()(const Monomial& a, const Monomial& b) const {
      return compare_monomials(a, b, r->order()) > 0;
    }
  };
  std::map<Monomial, Scalar, Cmp> acc{Cmp{ring_.get()}};
  Monomial m(ring_->nvars());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      for (size_t k = 0; k < m.size(); ++k) m[k] = a.mono[k] + b.mono[k];
      Scalar s = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, s);
      else
        it->second = it->second + s;
    }
  }
  Poly out = zero(ring_);
  out.terms_.reserve(acc.size());
  for (auto& [mono, c] : acc)
    if (!c.is_zero()) out.terms_.push_back({mono, c});
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw ContextError("negative power of a polynomial");
  Poly r = constant(ring_, 1);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = e > 1 ? b * b : b;
    e >>= 1;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coeff.inverse());
}

bool Poly::operator==(const Poly& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  check_same(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  return true;
}

Poly Poly::derivative(int var) const {
  Poly out = zero(ring_);
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Scalar c = t.coeff * Scalar(ring_->base(), t.mono[var]);
    if (c.is_zero()) continue;
    Monomial m = t.mono;
    m[var] -= 1;
    out.terms_.push_back({std::move(m), c});
  }
  // Dropping a variable's power preserves the descending term order.
  return from_terms(ring_, std::move(out.terms_));
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != ring_->nvars()) throw ContextError("substitute: wrong number of images");
  PolyRingPtr target = images.empty() ? ring_ : images[0].ring();
  // Power cache per variable.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](size_t v, int e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  Poly out = Poly::zero(target);
  for (const auto& t : terms_) {
    if (!(t.coeff.ring() == target->base())) throw ContextError("substitute: base ring change");
    Poly acc = Poly::constant(target, t.coeff);
    for (size_t v = 0; v < images.size(); ++v)
      if (t.mono[v] > 0) acc = acc * power(v, t.mono[v]);
    out += acc;
  }
  return out;
}

Poly Poly::reindex(const PolyRingPtr& target, const std::vector<int>& var_map) const {
  if (var_map.size() != ring_->nvars()) throw ContextError("reindex: wrong map size");
  Poly out = Poly::zero(target);
  out.terms_.reserve(terms_.size());
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Monomial m(target->nvars(), 0);
    for (size_t v = 0; v < var_map.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (var_map[v] < 0) throw ContextError("reindex: variable has no image");
      m[var_map[v]] += t.mono[v];
    }
    terms.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(terms));
}

Poly Poly::map_scalars(const std::function<Scalar(const Scalar&)>& f) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    Scalar c = f(t.coeff);
    if (!c.is_zero()) terms.push_back({t.mono, c});
  }
  return from_terms(ring_, std::move(terms));
}

std::string monomial_to_string(const PolyRing& r, const Monomial& m) {
  std::string s;
  for (size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += r.vars()[v];
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = c.substr(1);
    std::string mono = monomial_to_string(*ring_, t.mono);
    if (mono == "1")
      os << c;
    else if (c == "1")
      os << mono;
    else
      os << c << "*" << mono;
    first = false;
  }
  return os.str();
}

}  // namespace cdf
