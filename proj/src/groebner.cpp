#include "cdf/groebner.hpp"

#include <algorithm>
#include <set>

#include "cdf/error.hpp"

namespace cdf {

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial mono_quot(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

Poly reduce_full(const Poly& p, const std::vector<Poly>& basis, const GroebnerLimits& lim) {
  // Hard guard well above the configured cap: elimination orders are not
  // degree-compatible, so intermediate degrees may exceed input degrees.
  const int hard_cap = 2 * lim.max_degree + 8;
  Poly rest = p;
  std::vector<Term> done;
  while (!rest.is_zero()) {
    if (rest.total_degree() > hard_cap) throw ResourceError("reduction exceeded degree cap");
    const Term& lt = rest.leading();
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      if (!divides(g.leading().mono, lt.mono)) continue;
      Scalar c = -(lt.coeff * g.leading().coeff.inverse());
      rest = rest.add_scaled(g, c, mono_quot(lt.mono, g.leading().mono));
      reduced = true;
      break;
    }
    if (!reduced) {
      done.push_back(lt);
      rest = rest.add_scaled(Poly::constant(rest.ring(), 1), -lt.coeff, lt.mono);
    }
  }
  return Poly::from_terms(p.ring(), std::move(done));
}

std::vector<Poly> reduced_groebner_basis(const PolyRingPtr& ring, const std::vector<Poly>& gens,
                                         const GroebnerLimits& lim) {
  if (!ring->base().is_field())
    throw ContextError("Groebner bases need field coefficients; got " + ring->base().to_string());

  std::vector<Poly> G;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    G.push_back(g.monic());
  }

  struct Pair {
    int deg;
    Monomial lcm;
    size_t i, j;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (int c = compare_monomials(a.lcm, b.lcm, ring->order())) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> queue;
  auto push_pairs = [&](size_t t) {
    for (size_t i = 0; i < t; ++i) {
      Monomial l = mono_lcm(G[i].leading().mono, G[t].leading().mono);
      queue.push_back({monomial_degree(l), std::move(l), i, t});
    }
  };
  for (size_t t = 0; t < G.size(); ++t) push_pairs(t);

  std::set<std::pair<size_t, size_t>> handled;
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair pr = *it;
    queue.erase(it);
    handled.insert({pr.i, pr.j});

    const Monomial& li = G[pr.i].leading().mono;
    const Monomial& lj = G[pr.j].leading().mono;
    if (coprime(li, lj)) continue;
    bool chained = false;
    for (size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(G[k].leading().mono, pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (handled.count({key1.first, key1.second}) && handled.count({key2.first, key2.second})) chained = true;
    }
    if (chained) continue;

    Poly s = Poly::zero(ring).add_scaled(G[pr.i], Scalar::one(ring->base()), mono_quot(pr.lcm, li));
    s = s.add_scaled(G[pr.j], -Scalar::one(ring->base()), mono_quot(pr.lcm, lj));
    Poly r = reduce_full(s, G, lim);
    if (r.is_zero()) continue;
    if (r.total_degree() > lim.max_degree)
      throw ResourceError("Groebner element degree " + std::to_string(r.total_degree()) + " exceeds cap " +
                          std::to_string(lim.max_degree));
    if (G.size() + 1 > lim.max_basis) throw ResourceError("Groebner basis size exceeds cap");
    G.push_back(r.monic());
    push_pairs(G.size() - 1);
  }

  // Minimalize: keep only elements whose leading terms are minimal.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &li = G[i].leading().mono, &lj = G[j].leading().mono;
      if (divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Interreduce to the unique reduced basis.
  std::vector<Poly> reduced = minimal;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < reduced.size(); ++i) {
      std::vector<Poly> others;
      for (size_t j = 0; j < reduced.size(); ++j)
        if (j != i) others.push_back(reduced[j]);
      Poly r = reduce_full(reduced[i], others, lim).monic();
      if (!(r == reduced[i])) {
        reduced[i] = r;
        changed = true;
      }
    }
    std::erase_if(reduced, [](const Poly& p) { return p.is_zero(); });
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return compare_monomials(a.leading().mono, b.leading().mono, ring->order()) < 0;
  });
  return reduced;
}

Ideal::Ideal(PolyRingPtr ring, std::vector<Poly> gens, GroebnerLimits lim)
    : ring_(std::move(ring)), gens_(std::move(gens)), limits_(lim), cache_(std::make_shared<Cache>()) {
  for (const Poly& g : gens_)
    if (g.ring() != ring_ && !g.ring()->same_as(*ring_)) throw ContextError("ideal generator from wrong ring");
}

const std::vector<Poly>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    try {
      cache_->gb = reduced_groebner_basis(ring_, gens_, limits_);
    } catch (...) {
      cache_->error = std::current_exception();
    }
  });
  if (cache_->error) std::rethrow_exception(cache_->error);
  return cache_->gb;
}

Poly Ideal::normal_form(const Poly& p) const { return reduce_full(p, groebner_basis(), limits_); }

bool Ideal::contains(const Poly& p) const { return normal_form(p).is_zero(); }

bool Ideal::contains_ideal(const Ideal& o) const {
  for (const Poly& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::same_ideal(const Ideal& o) const { return contains_ideal(o) && o.contains_ideal(*this); }

void Ideal::check_ring(const Ideal& o) const {
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw ContextError("ideal ring mismatch");
}

Ideal Ideal::sum(const Ideal& o) const {
  check_ring(o);
  std::vector<Poly> gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(gens), limits_);
}

Ideal Ideal::product(const Ideal& o) const {
  check_ring(o);
  std::vector<Poly> gens;
  for (const Poly& f : gens_)
    for (const Poly& g : o.gens_) gens.push_back(f * g);
  return Ideal(ring_, std::move(gens), limits_);
}

Ideal Ideal::intersect(const Ideal& o) const {
  check_ring(o);
  // I cap J = (t*I + (1-t)*J) cap R with t eliminated first.
  std::vector<std::string> vars;
  vars.push_back("@t");
  for (const auto& v : ring_->vars()) vars.push_back(v);
  PolyRingPtr ext = PolyRing::make(ring_->base(), vars, MonomialOrder{1});
  std::vector<int> up(ring_->nvars());
  for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i) + 1;
  Poly t = Poly::variable(ext, 0);
  Poly one_minus_t = Poly::constant(ext, 1) - t;
  std::vector<Poly> gens;
  for (const Poly& f : gens_) gens.push_back(t * f.reindex(ext, up));
  for (const Poly& g : o.gens_) gens.push_back(one_minus_t * g.reindex(ext, up));
  std::vector<Poly> gb = reduced_groebner_basis(ext, gens, limits_);
  std::vector<int> down(ext->nvars(), -1);
  for (size_t i = 1; i < ext->nvars(); ++i) down[i] = static_cast<int>(i) - 1;
  std::vector<Poly> kept;
  for (const Poly& h : gb)
    if (h.degree_in(0) == 0) kept.push_back(h.reindex(ring_, down));
  return Ideal(ring_, std::move(kept), limits_);
}

}  // namespace cdf
