#include "cdf/presentation.hpp"

#include <algorithm>

#include "cdf/error.hpp"

namespace cdf {

PresentationPtr AlgebraPresentation::make(Ring base, std::vector<std::string> vars, std::vector<Poly> relations,
                                          std::vector<std::pair<std::string, std::string>> inverse_pairs,
                                          GroebnerLimits lim) {
  auto p = std::shared_ptr<AlgebraPresentation>(new AlgebraPresentation());
  p->ring_ = PolyRing::make(base, std::move(vars));
  p->limits_ = lim;
  for (Poly& r : relations) {
    if (r.ring() != p->ring_ && !r.ring()->same_as(*p->ring_)) throw ContextError("relation from wrong ring");
    p->relations_.push_back(std::move(r));
  }
  for (const auto& [g, gbar] : inverse_pairs) {
    int i = p->ring_->var_index(g), j = p->ring_->var_index(gbar);
    if (i < 0 || j < 0) throw PresentationError("inverse pair names unknown: (" + g + ", " + gbar + ")");
    if (i == j) throw PresentationError("generator cannot be its own declared inverse: " + g);
    for (const auto& [a, b] : p->pairs_)
      if (a == i || b == i || a == j || b == j) throw PresentationError("generator in two inverse pairs");
    p->pairs_.emplace_back(i, j);
    Poly rel = Poly::variable(p->ring_, i) * Poly::variable(p->ring_, j) - Poly::constant(p->ring_, 1);
    bool present = std::any_of(p->relations_.begin(), p->relations_.end(), [&](const Poly& r) { return r == rel; });
    if (!present) p->relations_.push_back(rel);
  }
  for (size_t v = 0; v < p->ring_->nvars(); ++v) {
    bool is_bar = std::any_of(p->pairs_.begin(), p->pairs_.end(),
                              [&](const std::pair<int, int>& pr) { return pr.second == static_cast<int>(v); });
    if (!is_bar) p->primary_.push_back(static_cast<int>(v));
  }
  p->ideal_ = Ideal(p->ring_, p->relations_, lim);
  return p;
}

PresentationPtr AlgebraPresentation::free_algebra(Ring base, std::vector<std::string> vars, GroebnerLimits lim) {
  return make(base, std::move(vars), {}, {}, lim);
}

bool AlgebraPresentation::is_smooth() const {
  if (relations_.empty()) return true;
  for (const Poly& r : relations_) {
    bool is_pair_rel = false;
    for (const auto& [i, j] : pairs_) {
      Poly rel = Poly::variable(ring_, i) * Poly::variable(ring_, j) - Poly::constant(ring_, 1);
      if (r == rel) {
        is_pair_rel = true;
        break;
      }
    }
    if (!is_pair_rel) return false;
  }
  return true;
}

bool AlgebraPresentation::is_primary(int var) const {
  return std::find(primary_.begin(), primary_.end(), var) != primary_.end();
}

int AlgebraPresentation::partner_of(int var) const {
  for (const auto& [i, j] : pairs_) {
    if (i == var) return j;
    if (j == var) return i;
  }
  return -1;
}

Poly AlgebraPresentation::reduce(const Poly& p) const {
  if (relations_.empty()) return p;
  return ideal_.normal_form(p);
}

Poly AlgebraPresentation::derive(const Poly& p, int primary_var) const {
  if (!is_smooth()) throw PresentationError("derivations need a smooth presentation");
  if (!is_primary(primary_var)) throw PresentationError("derive: not a primary generator");
  Poly d = p.derivative(primary_var);
  int bar = partner_of(primary_var);
  if (bar >= 0) {
    Poly vb = Poly::variable(ring_, bar);
    d -= p.derivative(bar) * vb * vb;
  }
  return reduce(d);
}

Poly AlgebraPresentation::inverse_of(const Poly& c) const {
  Poly cr = reduce(c);
  if (cr.is_zero()) throw UnitError("inverse of zero in " + describe());
  if (cr.is_constant()) return Poly::constant(ring_, cr.constant_coefficient().inverse());
  {
    std::lock_guard<std::mutex> lk(inv_mu_);
    auto it = inv_cache_.find(cr.to_string());
    if (it != inv_cache_.end()) return it->second;
  }
  // Adjoin y with c*y = 1 and eliminate: the reduced basis rewrites y to the
  // inverse exactly when c is a unit in the quotient.
  std::vector<std::string> vars;
  vars.push_back("@y");
  for (const auto& v : ring_->vars()) vars.push_back(v);
  PolyRingPtr ext = PolyRing::make(base(), vars, MonomialOrder{1});
  std::vector<int> up(ring_->nvars());
  for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i) + 1;
  std::vector<Poly> gens;
  for (const Poly& r : relations_) gens.push_back(r.reindex(ext, up));
  gens.push_back(cr.reindex(ext, up) * Poly::variable(ext, 0) - Poly::constant(ext, 1));
  std::vector<Poly> gb = reduced_groebner_basis(ext, gens, limits_);
  Poly y_nf = reduce_full(Poly::variable(ext, 0), gb, limits_);
  if (y_nf.degree_in(0) != 0) throw UnitError(cr.to_string() + " is not a unit in " + describe());
  std::vector<int> down(ext->nvars(), -1);
  for (size_t i = 1; i < ext->nvars(); ++i) down[i] = static_cast<int>(i) - 1;
  Poly inv = reduce(y_nf.reindex(ring_, down));
  if (!reduce(inv * cr - Poly::constant(ring_, 1)).is_zero())
    throw UnitError(cr.to_string() + " is not a unit in " + describe());
  std::lock_guard<std::mutex> lk(inv_mu_);
  inv_cache_.emplace(cr.to_string(), inv);
  return inv;
}

std::string AlgebraPresentation::describe() const {
  std::string s = base().to_string() + "[";
  for (size_t i = 0; i < ring_->nvars(); ++i) {
    if (i) s += ",";
    s += ring_->vars()[i];
  }
  s += "]";
  if (!relations_.empty()) {
    s += "/(";
    for (size_t i = 0; i < relations_.size(); ++i) {
      if (i) s += ", ";
      s += relations_[i].to_string();
    }
    s += ")";
  }
  return s;
}

}  // namespace cdf
