#include "cdf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "cdf/gforms.hpp"

namespace cdf {
namespace {

uint64_t mix_seed(uint64_t seed, const std::string& tag) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h ^ seed;
}

/// Small random data built on the deterministic generator.
struct Rand {
  Lcg64 gen;
  explicit Rand(uint64_t seed) : gen(seed) {}

  long below(long n) { return static_cast<long>(gen.below(static_cast<uint64_t>(n))); }
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }

  Scalar scalar(const Ring& R, bool nonzero) {
    for (;;) {
      Scalar c(R, range(-4, 4));
      if (!nonzero || !c.is_zero()) return c;
    }
  }

  Scalar unit(const Ring& R) {
    for (;;) {
      Scalar c = scalar(R, true);
      try {
        (void)c.inverse();
        return c;
      } catch (const UnitError&) {
      }
    }
  }

  Poly poly(const PresentationPtr& B, int maxdeg, bool nonzero = false) {
    const auto& R = B->ring();
    int nv = static_cast<int>(R->nvars());
    for (;;) {
      Poly out = Poly::zero(R);
      long terms = range(1, 3);
      for (long t = 0; t < terms; ++t) {
        Poly m = Poly::constant(R, scalar(R->base(), true));
        long deg = range(0, maxdeg);
        for (long d = 0; d < deg; ++d) m = m * Poly::variable(R, static_cast<int>(below(nv)));
        out = out + m;
      }
      out = B->reduce(out);
      if (!nonzero || !out.is_zero()) return out;
    }
  }

  std::vector<int> perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[static_cast<size_t>(below(i + 1))]);
    return p;
  }

  static bool odd_perm(const std::vector<int>& s) {
    int inv = 0;
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        if (s[i] > s[j]) ++inv;
    return inv % 2 == 1;
  }

  std::vector<int> subset(int nv, int k) {
    auto p = perm(nv);
    p.resize(static_cast<size_t>(k));
    std::sort(p.begin(), p.end());
    return p;
  }

  ClassicalForm form(const PresentationPtr& B, int degree, int coeffdeg, bool nonzero = false) {
    int nv = static_cast<int>(B->ring()->nvars());
    if (degree < 0 || degree > nv) return ClassicalForm::zero(B, degree);
    for (;;) {
      ClassicalForm w = ClassicalForm::zero(B, degree);
      long terms = range(1, 2);
      for (long t = 0; t < terms; ++t)
        w = w + ClassicalForm::term(B, poly(B, coeffdeg), subset(nv, degree));
      if (!nonzero || !w.is_zero()) return w;
    }
  }

  WeakClassicalForm weak_form(const PresentationPtr& B, int degree, int coeffdeg) {
    int nv = static_cast<int>(B->ring()->nvars());
    if (degree == 0) return WeakClassicalForm::term(B, poly(B, coeffdeg), {});
    WeakClassicalForm w = WeakClassicalForm::zero(B, degree);
    long terms = range(1, 2);
    for (long t = 0; t < terms; ++t) {
      std::vector<int> vars;
      for (int i = 0; i < degree; ++i) vars.push_back(static_cast<int>(below(nv)));
      w = w + WeakClassicalForm::term(B, poly(B, coeffdeg), vars);
    }
    return w;
  }

  ClassicalRep rep(const HopfPtr& G, const PresentationPtr& B, int degree, int coeffdeg) {
    const auto& prim = G->presentation()->primary_vars();
    int nv = static_cast<int>(B->ring()->nvars());
    std::map<int, ClassicalForm> im;
    for (int v : prim)
      if (below(4) < 3) {
        auto w = form(B, degree, coeffdeg);
        if (!w.is_zero()) im.emplace(v, w);
      }
    if (im.empty() && degree <= nv && !prim.empty())
      im.emplace(prim[static_cast<size_t>(below(static_cast<long>(prim.size())))], form(B, degree, coeffdeg, true));
    return ClassicalRep(G, B, degree, im);
  }
};

struct Checker {
  std::string suite;
  std::vector<CheckRecord>* out;
  int idx = 0;

  void push(CheckStatus st, const std::string& desc, const std::string& witness, long long ms) {
    out->push_back({suite, idx++, desc, st, witness, ms});
  }

  void run(const std::string& desc, const std::function<std::optional<std::string>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckStatus st = CheckStatus::Pass;
    std::string witness;
    try {
      if (auto w = body()) {
        st = CheckStatus::Fail;
        witness = *w;
      }
    } catch (const ResourceError& e) {
      st = CheckStatus::Skip;
      witness = e.what();
    } catch (const std::exception& e) {
      st = CheckStatus::Fail;
      witness = e.what();
    }
    auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    push(st, desc, witness, ms);
  }

  void skip(const std::string& desc, const std::string& why) { push(CheckStatus::Skip, desc, why, 0); }
  void fail(const std::string& desc, const std::string& witness) { push(CheckStatus::Fail, desc, witness, 0); }
};

template <class T>
std::optional<std::string> expect_eq(const T& got, const T& want, const std::string& what) {
  if (got == want) return std::nullopt;
  return what + ": got " + got.to_string() + ", want " + want.to_string();
}

/// Simplex family over B in the requested flavor: structured engine when
/// the base allows it, generic over field scalars otherwise.
SimplexFamilyPtr scalar_family(const PresentationPtr& B, Flavor fl, const GroebnerLimits& lim, std::string* why) {
  if (B->is_free()) return SimplexFamily::make(B, fl, EngineKind::Structured, lim);
  if (B->is_smooth()) return detail_make_family(B, fl, EngineKind::Structured, lim, true);
  if (B->base().is_field()) return SimplexFamily::make(B, fl, EngineKind::Generic, lim);
  if (why) *why = "presented bases need field scalars for the generic engine";
  return nullptr;
}

PresentationPtr suite_base(const SuiteConfig& cfg, Checker& ck) {
  try {
    return config_base(cfg);
  } catch (const std::exception& e) {
    ck.fail("construct the base algebra from the configuration", e.what());
    return nullptr;
  }
}

/// Append the configured group unless it duplicates one already present;
/// a group that fails its structure checks shows up as a failing record.
void add_config_group(const SuiteConfig& cfg, Checker& ck, std::vector<HopfPtr>& gs) {
  for (const auto& g : gs)
    if (g->name() == cfg.group) return;
  ck.run("the configured group '" + cfg.group + "' satisfies the group-structure laws",
         [&]() -> std::optional<std::string> {
           gs.push_back(resolve_group(cfg, cfg.group));
           return std::nullopt;
         });
}

/// Builtin groups that exist over the configured scalars; localized
/// presentations need field coefficients and are skipped otherwise.
std::vector<HopfPtr> builtin_list(const SuiteConfig& cfg, Checker& ck, std::initializer_list<const char*> names) {
  std::vector<HopfPtr> out;
  for (const char* n : names) {
    try {
      out.push_back(builtin_group(n, cfg.ring));
    } catch (const ContextError& e) {
      ck.skip(std::string(n) + ": the group is unavailable over this scalar ring", e.what());
    }
  }
  return out;
}

std::string point_string(const GroupPoint<QuotAlgebra>& g) {
  std::string out = "(";
  for (size_t i = 0; i < g.images.size(); ++i) {
    if (i) out += ", ";
    out += g.images[i].to_string();
  }
  return out + ")";
}

/// A random base-valued point: arbitrary images for free presentations,
/// unit constants on inverted generators for localized ones.
std::optional<GroupPoint<QuotAlgebra>> random_point(Rand& rng, const HopfPtr& G, const QuotAlgebra& alg,
                                                    int coeffdeg) {
  const auto& A = G->presentation();
  const auto& R = alg.B->ring();
  size_t nv = A->ring()->nvars();
  std::vector<Poly> im(nv, Poly::zero(R));
  if (A->is_free()) {
    for (size_t v = 0; v < nv; ++v) im[v] = rng.poly(alg.B, coeffdeg);
    return make_point(G, alg, std::move(im));
  }
  if (A->is_smooth()) {
    std::set<int> inverted;
    for (const auto& [g, gbar] : A->inverse_pairs()) inverted.insert(g);
    for (int v : A->primary_vars())
      im[static_cast<size_t>(v)] = inverted.count(v) ? Poly::constant(R, rng.unit(R->base()))
                                                     : rng.poly(alg.B, coeffdeg);
    for (const auto& [g, gbar] : A->inverse_pairs())
      im[static_cast<size_t>(gbar)] = alg.inverse(im[static_cast<size_t>(g)]);
    return make_point(G, alg, std::move(im));
  }
  return std::nullopt;
}

/// B with one extra square-zero generator adjoined.
PresentationPtr square_zero_ext(const PresentationPtr& B, const GroebnerLimits& lim) {
  const auto& R = B->ring();
  std::vector<std::string> names = R->vars();
  names.push_back("eps");
  auto free_ring = AlgebraPresentation::free_algebra(R->base(), names)->ring();
  std::vector<int> up(R->nvars());
  std::iota(up.begin(), up.end(), 0);
  std::vector<Poly> rels;
  for (const Poly& r : B->relations()) rels.push_back(r.reindex(free_ring, up));
  int ne = static_cast<int>(free_ring->nvars());
  rels.push_back(Poly::variable(free_ring, ne - 1, 2));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [g, gbar] : B->inverse_pairs())
    pairs.emplace_back(R->vars()[static_cast<size_t>(g)], R->vars()[static_cast<size_t>(gbar)]);
  return AlgebraPresentation::make(R->base(), names, rels, pairs, lim);
}

/// Matrix of the conjugation action on kernel coordinates, computed by
/// conjugating the coordinate kernel points over the square-zero extension.
std::map<int, std::map<int, Poly>> coadjoint_matrix(const HopfPtr& G, const GroupPoint<QuotAlgebra>& g,
                                                    const PresentationPtr& Beps) {
  const auto& Re = Beps->ring();
  const auto& Rb = g.alg.B->ring();
  int ne = static_cast<int>(Re->nvars());
  QuotAlgebra algE{Beps};
  std::vector<int> up(Rb->nvars());
  std::iota(up.begin(), up.end(), 0);
  std::vector<Poly> gim;
  for (const Poly& p : g.images) gim.push_back(p.reindex(Re, up));
  auto ge = make_point(G, algE, std::move(gim));
  Poly eps = Poly::variable(Re, ne - 1);
  std::vector<int> down(static_cast<size_t>(ne), -1);
  for (int i = 0; i + 1 < ne; ++i) down[static_cast<size_t>(i)] = i;
  std::map<int, std::map<int, Poly>> M;
  for (int y : G->presentation()->primary_vars()) {
    std::map<int, Poly> u;
    u.emplace(y, eps);
    auto conj = point_compose(point_compose(ge, kernel_point(G, algE, u)), point_inverse(ge));
    for (const auto& [z, c] : kernel_coords(conj)) {
      std::vector<Term> terms;
      Poly cr = Beps->reduce(c);
      for (const Term& t : cr.terms()) {
        if (t.mono[static_cast<size_t>(ne - 1)] != 1)
          throw EngineError("conjugated kernel coordinate is not linear in the extension generator");
        auto m = t.mono;
        m[static_cast<size_t>(ne - 1)] = 0;
        terms.push_back({std::move(m), t.coeff});
      }
      M[z][y] = Poly::from_terms(Re, std::move(terms)).reindex(Rb, down);
    }
  }
  return M;
}

/// Componentwise exterior derivative of a classical shadow.
ClassicalRep rep_d(const ClassicalRep& r) {
  std::map<int, ClassicalForm> im;
  for (const auto& [v, w] : r.images()) {
    auto dw = exterior_d(w);
    if (!dw.is_zero()) im.emplace(v, dw);
  }
  return ClassicalRep(r.group(), r.base(), r.degree() + 1, im);
}

int corrupt_target(const SuiteConfig& cfg) {
  if (cfg.corrupt.empty()) return -1;
  std::istringstream is(cfg.corrupt);
  std::string kind;
  long k = -1;
  is >> kind >> k;
  return kind == "ideal" && k >= 0 ? static_cast<int>(k) : -1;
}

// --- suites ---------------------------------------------------------------

void suite_ideal_identities(const SuiteConfig& cfg, Checker& ck) {
  if (!cfg.ring.is_field()) {
    ck.skip("descriptions of the top combinatorial ideal agree", "ideal arithmetic needs field scalars");
    return;
  }
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "ideal-identities"));
  int nv = static_cast<int>(B->ring()->nvars());
  int bug = corrupt_target(cfg);

  int top = std::max(2, std::min(cfg.nmax, 3));
  for (int n = 2; n <= top; ++n) {
    ck.run("five descriptions of the top combinatorial ideal agree on the degree-" + std::to_string(n) +
               " simplex",
           [&, n]() -> std::optional<std::string> {
             auto fam = SimplexFamily::make(B, cfg.flavor, EngineKind::Generic, cfg.cap);
             auto R = fam->ring(n);
             const auto& amb = R->ambient();
             const Ideal& D = R->defining_ideal();
             auto dgens = [&](int r, int s) {
               std::vector<Poly> g;
               for (int v = 0; v < nv; ++v)
                 g.push_back(Poly::variable(amb, R->ambient_var(s, v)) -
                             Poly::variable(amb, R->ambient_var(r, v)));
               return g;
             };
             auto with_defining = [&](std::vector<Poly> gens) {
               for (const Poly& p : D.generators()) gens.push_back(p);
               return Ideal(amb, std::move(gens), cfg.cap);
             };
             auto edge = [&](int r, int s) { return with_defining(dgens(r, s)); };
             auto product_of = [&](const std::vector<std::vector<Poly>>& factors) {
               std::vector<Poly> acc = {Poly::constant(amb, 1)};
               for (const auto& f : factors) {
                 std::vector<Poly> nxt;
                 for (const auto& a : acc)
                   for (const auto& g : f) nxt.push_back(a * g);
                 acc = std::move(nxt);
               }
               return with_defining(std::move(acc));
             };

             std::vector<std::vector<Poly>> head, chain;
             for (int i = 1; i <= n; ++i) head.push_back(dgens(0, i));
             for (int i = 0; i < n; ++i) chain.push_back(dgens(i, i + 1));
             if (bug >= 0) {
               // fault injection: reroute one factor of the head product to a
               // duplicate edge, which collapses the product into the
               // defining ideal
               int k = bug % n;
               head[static_cast<size_t>(k)] = dgens(0, (k + 1) % n + 1);
             }

             Ideal p_head = product_of(head);
             Ideal p_chain = product_of(chain);
             Ideal i_head = edge(0, 1);
             for (int i = 2; i <= n; ++i) i_head = i_head.intersect(edge(0, i));
             Ideal i_chain = edge(0, 1);
             for (int i = 1; i < n; ++i) i_chain = i_chain.intersect(edge(i, i + 1));
             Ideal i_all = edge(0, 1);
             for (int r = 0; r <= n; ++r)
               for (int s = r + 1; s <= n; ++s)
                 if (!(r == 0 && s == 1)) i_all = i_all.intersect(edge(r, s));

             const Ideal* others[4] = {&p_head, &p_chain, &i_head, &i_chain};
             const char* tags[4] = {"the product over edges from vertex 0",
                                    "the product over consecutive edges",
                                    "the intersection over edges from vertex 0",
                                    "the intersection over consecutive edges"};
             for (int t = 0; t < 4; ++t) {
               if (others[t]->same_ideal(i_all)) continue;
               for (const Poly& p : i_all.groebner_basis())
                 if (!others[t]->contains(p))
                   return std::string(tags[t]) + " misses " + p.to_string();
               for (const Poly& p : others[t]->groebner_basis())
                 if (!i_all.contains(p))
                   return std::string(tags[t]) + " has the extra element " + p.to_string();
               return std::string(tags[t]) + " differs from the full intersection";
             }
             return std::nullopt;
           });
  }

  {
    std::string why;
    auto fam = scalar_family(B, cfg.flavor, cfg.cap, &why);
    if (!fam)
      ck.skip("difference generators satisfy the cocycle identity", why);
    else
      ck.run("difference generators satisfy the cocycle identity", [&]() -> std::optional<std::string> {
        for (int t = 0; t < 50; ++t) {
          int n = static_cast<int>(rng.range(2, std::max(2, std::min(cfg.nmax, 3))));
          auto R = fam->ring(n);
          Poly b = rng.poly(B, cfg.coeffdeg);
          auto tri = rng.subset(n + 1, 3);
          int i = tri[0], j = tri[1], k = tri[2];
          if (!(R->dgen(i, k, b) == R->dgen(i, j, b) + R->dgen(j, k, b)))
            return "vertices " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                   " on " + b.to_string();
        }
        return std::nullopt;
      });
  }

  if (!B->is_free()) {
    ck.skip("the strong degree-2 ideal sits between the cube and square of the difference ideal",
            "the neighborhood comparison is set up for free bases");
  } else {
    ck.run("the strong degree-2 ideal sits between the cube and square of the difference ideal",
           [&]() -> std::optional<std::string> {
             auto fam = SimplexFamily::make(B, Flavor::Strong, EngineKind::Generic, cfg.cap);
             auto R = fam->ring(2);
             const auto& amb = R->ambient();
             const Ideal& D = R->defining_ideal();
             std::vector<Poly> gens;
             for (int v = 0; v < nv; ++v) {
               gens.push_back(Poly::variable(amb, R->ambient_var(1, v)) -
                              Poly::variable(amb, R->ambient_var(0, v)));
               gens.push_back(Poly::variable(amb, R->ambient_var(2, v)) -
                              Poly::variable(amb, R->ambient_var(1, v)));
             }
             Ideal I(amb, gens, cfg.cap);
             Ideal I2 = I.product(I);
             Ideal I3 = I2.product(I);
             if (!D.contains_ideal(I3)) return std::string("the cube escapes the strong ideal");
             if (!I2.contains_ideal(D)) return std::string("the strong ideal escapes the square");
             if (nv >= 2) {
               Poly w = (Poly::variable(amb, R->ambient_var(1, 0)) - Poly::variable(amb, R->ambient_var(0, 0))) *
                        (Poly::variable(amb, R->ambient_var(2, 1)) - Poly::variable(amb, R->ambient_var(1, 1)));
               if (D.contains(w))
                 return "the strong ideal absorbs the mixed product " + w.to_string() +
                        ", so the chain is not strict";
             }
             return std::nullopt;
           });
  }
}

void suite_nu_iso(const SuiteConfig& cfg, Checker& ck) {
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "nu-iso"));
  std::string why;
  auto strong = scalar_family(B, Flavor::Strong, cfg.cap, &why);
  if (!strong) {
    ck.skip("classical and combinatorial forms are isomorphic", why);
    return;
  }
  auto weak = scalar_family(B, Flavor::Weak, cfg.cap, &why);
  int nv = static_cast<int>(B->ring()->nvars());
  int top = std::max(1, std::min(cfg.nmax, 3));

  for (int n = 1; n <= top; ++n) {
    ck.run("strong forms survive the classical roundtrip in degree " + std::to_string(n),
           [&, n]() -> std::optional<std::string> {
             for (int t = 0; t < 10; ++t) {
               auto w = rng.form(B, n, cfg.coeffdeg, n <= nv);
               auto back = nu_inverse_strong(nu(w, strong));
               if (back != w) return "sent " + w.to_string() + ", got back " + back.to_string();
             }
             return std::nullopt;
           });
    ck.run("weak forms survive the classical roundtrip in degree " + std::to_string(n),
           [&, n]() -> std::optional<std::string> {
             for (int t = 0; t < 10; ++t) {
               auto w = rng.weak_form(B, n, cfg.coeffdeg);
               auto back = nu_inverse_weak(nu(w, weak));
               if (back != w) return "sent " + w.to_string() + ", got back " + back.to_string();
             }
             return std::nullopt;
           });
    ck.run("difference products survive the combinatorial roundtrip in degree " + std::to_string(n),
           [&, n]() -> std::optional<std::string> {
             auto fam = cfg.flavor == Flavor::Strong ? strong : weak;
             for (int t = 0; t < 10; ++t) {
               auto R = fam->ring(n);
               SimplexElement e = R->from_base(rng.poly(B, cfg.coeffdeg, true));
               for (int i = 1; i <= n; ++i) e = e * R->dgen(0, i, rng.poly(B, cfg.coeffdeg));
               ScalarCombForm f(e);
               ScalarCombForm f2 = cfg.flavor == Flavor::Strong ? nu(nu_inverse_strong(f), fam)
                                                                : nu(nu_inverse_weak(f), fam);
               if (f2 != f) return "sent " + f.to_string() + ", got back " + f2.to_string();
             }
             return std::nullopt;
           });
  }

  if (!B->base().is_field()) {
    ck.skip("diagonal weak forms measure the two-torsion kernel", "the kernel comparison assumes field scalars");
  } else {
    ck.run("diagonal weak forms measure the two-torsion kernel", [&]() -> std::optional<std::string> {
      auto t = WeakClassicalForm::term(B, Poly::constant(B->ring(), 1), {0, 0});
      if (B->base().characteristic() == 2) {
        if (t.is_zero()) return std::string("the diagonal term collapsed in characteristic two");
        if (!t.projection().is_zero()) return std::string("the projection keeps the diagonal term");
        auto f = nu(t, weak);
        if (f.is_zero()) return std::string("the diagonal weak form has zero image");
        if (!to_strong(f, strong).is_zero())
          return "the diagonal weak form survives strongly as " + to_strong(f, strong).to_string();
      } else {
        if (!t.is_zero()) return std::string("the diagonal term survives although two is invertible");
        int n = std::min(top, std::max(1, nv));
        for (int k = 0; k < 5; ++k) {
          auto w = rng.form(B, n, cfg.coeffdeg, true);
          auto wk = WeakClassicalForm::make(B, n, w.table());
          if (to_strong(nu(wk, weak), strong) != nu(w, strong))
            return "weak and strong images of " + w.to_string() + " disagree";
        }
      }
      return std::nullopt;
    });
  }
}

void suite_sign_action(const SuiteConfig& cfg, Checker& ck) {
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "sign-action"));
  std::string why;
  auto fam = scalar_family(B, cfg.flavor, cfg.cap, &why);
  if (!fam) {
    ck.skip("vertex permutations act by the sign character", why);
    return;
  }
  int top = std::max(1, std::min(cfg.nmax, 3));

  ck.run("scalar forms transform by the sign character under vertex permutations",
         [&]() -> std::optional<std::string> {
           for (int t = 0; t < 50; ++t) {
             int n = static_cast<int>(rng.range(1, top));
             ScalarCombForm f = cfg.flavor == Flavor::Strong
                                    ? nu(rng.form(B, n, cfg.coeffdeg), fam)
                                    : nu(rng.weak_form(B, n, cfg.coeffdeg), fam);
             auto sigma = rng.perm(n + 1);
             ScalarCombForm want = Rand::odd_perm(sigma) ? f.scaled(Scalar(cfg.ring, -1)) : f;
             if (auto w = expect_eq(sym_action(sigma, f), want, "permuting " + f.to_string())) return w;
           }
           return std::nullopt;
         });

  auto strong = cfg.flavor == Flavor::Strong ? fam : scalar_family(B, Flavor::Strong, cfg.cap, &why);
  ck.run("group-valued forms invert under odd vertex permutations", [&]() -> std::optional<std::string> {
    auto G = resolve_group(cfg, cfg.group);
    for (int t = 0; t < 20; ++t) {
      int n = static_cast<int>(rng.range(1, std::min(top, 2)));
      GroupForm f = from_classical(rng.rep(G, B, n, cfg.coeffdeg), strong);
      auto sigma = rng.perm(n + 1);
      GroupForm want = Rand::odd_perm(sigma) ? gf_inverse(f) : f;
      if (auto w = expect_eq(gf_pullback(f, IndexMap::permutation(sigma)), want, "permuting " + f.to_string()))
        return w;
    }
    return std::nullopt;
  });
}

void suite_wedge(const SuiteConfig& cfg, Checker& ck) {
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "wedge"));
  std::string why;
  auto fam = scalar_family(B, cfg.flavor, cfg.cap, &why);
  if (!fam) {
    ck.skip("the wedge matches the star product", why);
    return;
  }
  bool strong = cfg.flavor == Flavor::Strong;
  int top = std::max(2, std::min(cfg.nmax, 3));

  ck.run("the classical-to-combinatorial map intertwines wedge and star product",
         [&]() -> std::optional<std::string> {
           for (int a = 1; a < top; ++a)
             for (int b = 1; a + b <= top; ++b)
               for (int t = 0; t < 5; ++t) {
                 if (strong) {
                   auto w = rng.form(B, a, cfg.coeffdeg);
                   auto u = rng.form(B, b, cfg.coeffdeg);
                   if (auto bad = expect_eq(star_product(nu(w, fam), nu(u, fam)), nu(wedge(w, u), fam),
                                            "degrees (" + std::to_string(a) + "," + std::to_string(b) + ")"))
                     return bad;
                 } else {
                   auto w = rng.weak_form(B, a, cfg.coeffdeg);
                   auto u = rng.weak_form(B, b, cfg.coeffdeg);
                   if (auto bad = expect_eq(star_product(nu(w, fam), nu(u, fam)), nu(wedge(w, u), fam),
                                            "degrees (" + std::to_string(a) + "," + std::to_string(b) + ")"))
                     return bad;
                 }
               }
           return std::nullopt;
         });

  ck.run("multiplying by base functions is the vertex module action at every slot",
         [&]() -> std::optional<std::string> {
           for (int t = 0; t < 15; ++t) {
             int n = static_cast<int>(rng.range(1, top));
             Poly b = rng.poly(B, cfg.coeffdeg);
             int slot = static_cast<int>(rng.below(n + 1));
             if (strong) {
               auto w = rng.form(B, n, cfg.coeffdeg);
               if (auto bad = expect_eq(module_action(b, nu(w, fam), slot), nu(w.scaled(b), fam),
                                        "scaling " + w.to_string() + " by " + b.to_string()))
                 return bad;
             } else {
               auto w = rng.weak_form(B, n, cfg.coeffdeg);
               if (auto bad = expect_eq(module_action(b, nu(w, fam), slot), nu(w.scaled(b), fam),
                                        "scaling " + w.to_string() + " by " + b.to_string()))
                 return bad;
             }
           }
           return std::nullopt;
         });

  ck.run("the exterior derivative is a graded derivation for the wedge", [&]() -> std::optional<std::string> {
    for (int t = 0; t < 15; ++t) {
      int a = static_cast<int>(rng.range(1, 2));
      int b = static_cast<int>(rng.range(1, 2));
      Scalar sign(cfg.ring, a % 2 ? -1 : 1);
      if (strong) {
        auto w = rng.form(B, a, cfg.coeffdeg);
        auto u = rng.form(B, b, cfg.coeffdeg);
        auto want = wedge(exterior_d(w), u) + wedge(w, exterior_d(u)).scaled(sign);
        if (auto bad = expect_eq(exterior_d(wedge(w, u)), want,
                                 "on " + w.to_string() + " and " + u.to_string()))
          return bad;
      } else {
        auto w = rng.weak_form(B, a, cfg.coeffdeg);
        auto u = rng.weak_form(B, b, cfg.coeffdeg);
        auto want = wedge(exterior_d(w), u) + wedge(w, exterior_d(u)).scaled(sign);
        if (auto bad = expect_eq(exterior_d(wedge(w, u)), want,
                                 "on " + w.to_string() + " and " + u.to_string()))
          return bad;
      }
    }
    return std::nullopt;
  });
}

void suite_cech(const SuiteConfig& cfg, Checker& ck) {
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "cech"));
  std::string why;
  auto fam = scalar_family(B, cfg.flavor, cfg.cap, &why);
  if (!fam) {
    ck.skip("the alternating coboundary matches the exterior derivative", why);
    return;
  }
  bool strong = cfg.flavor == Flavor::Strong;
  int top = std::max(0, std::min(cfg.nmax - 1, 2));
  auto sample = [&](int n) {
    return strong ? nu(rng.form(B, n, cfg.coeffdeg), fam) : nu(rng.weak_form(B, n, cfg.coeffdeg), fam);
  };

  ck.run("the alternating coboundary matches the exterior derivative", [&]() -> std::optional<std::string> {
    for (int t = 0; t < 15; ++t) {
      int n = static_cast<int>(rng.range(0, top));
      if (strong) {
        auto w = rng.form(B, n, cfg.coeffdeg);
        if (auto bad = expect_eq(cech_delta(nu(w, fam)), nu(exterior_d(w), fam), "on " + w.to_string()))
          return bad;
      } else {
        auto w = rng.weak_form(B, n, cfg.coeffdeg);
        if (auto bad = expect_eq(cech_delta(nu(w, fam)), nu(exterior_d(w), fam), "on " + w.to_string()))
          return bad;
      }
    }
    return std::nullopt;
  });

  ck.run("the alternating coboundary squares to zero", [&]() -> std::optional<std::string> {
    for (int t = 0; t < 10; ++t) {
      auto f = sample(static_cast<int>(rng.range(0, top)));
      auto dd = cech_delta(cech_delta(f));
      if (!dd.is_zero()) return "on " + f.to_string() + ": " + dd.to_string();
    }
    return std::nullopt;
  });

  ck.run("the alternating coboundary is a graded derivation for the star product",
         [&]() -> std::optional<std::string> {
           for (int t = 0; t < 10; ++t) {
             int a = static_cast<int>(rng.range(1, 2));
             auto f = sample(a);
             auto g = sample(static_cast<int>(rng.range(1, 2)));
             Scalar sign(cfg.ring, a % 2 ? -1 : 1);
             auto want = star_product(cech_delta(f), g) + star_product(f, cech_delta(g)).scaled(sign);
             if (auto bad = expect_eq(cech_delta(star_product(f, g)), want,
                                      "on " + f.to_string() + " and " + g.to_string()))
               return bad;
           }
           return std::nullopt;
         });
}

void suite_bracket_laws(const SuiteConfig& cfg, Checker& ck) {
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "bracket-laws"));
  std::string why;
  auto fam = scalar_family(B, Flavor::Strong, cfg.cap, &why);
  if (!fam) {
    ck.skip("the bracket laws", why);
    return;
  }
  std::vector<HopfPtr> gs = builtin_list(cfg, ck, {"Heis3", "Aff1"});
  add_config_group(cfg, ck, gs);

  for (const auto& G : gs) {
    auto draw = [&](int deg) { return rng.rep(G, B, deg, cfg.coeffdeg); };
    auto lift = [&](const ClassicalRep& r) { return from_classical(r, fam); };

    ck.run(G->name() + ": the bracket is multiplicative in each slot", [&]() -> std::optional<std::string> {
      for (int t = 0; t < 3; ++t) {
        GroupForm a = lift(draw(1)), a2 = lift(draw(1)), b = lift(draw(1)), b2 = lift(draw(1));
        if (auto bad = expect_eq(bracket(gf_product(a, a2), b), gf_product(bracket(a, b), bracket(a2, b)),
                                 "first slot"))
          return bad;
        if (auto bad = expect_eq(bracket(a, gf_product(b, b2)), gf_product(bracket(a, b), bracket(a, b2)),
                                 "second slot"))
          return bad;
      }
      return std::nullopt;
    });

    ck.run(G->name() + ": the bracket is graded anticommutative", [&]() -> std::optional<std::string> {
      for (int t = 0; t < 3; ++t) {
        GroupForm a = lift(draw(1)), b = lift(draw(1)), c = lift(draw(2));
        // degrees (1,1): sign (-1)^(1*1+1) = +1
        if (auto bad = expect_eq(bracket(a, b), bracket(b, a), "degrees (1,1)")) return bad;
        // degrees (1,2): sign (-1)^(1*2+1) = -1
        if (auto bad = expect_eq(bracket(a, c), gf_inverse(bracket(c, a)), "degrees (1,2)")) return bad;
        if (auto bad = expect_eq(to_classical(bracket(a, c)), -to_classical(bracket(c, a)),
                                 "degrees (1,2), classical"))
          return bad;
      }
      return std::nullopt;
    });

    ck.run(G->name() + ": the graded Jacobi identity holds in degrees (1,1,1)",
           [&]() -> std::optional<std::string> {
             for (int t = 0; t < 3; ++t) {
               GroupForm f = lift(draw(1)), g = lift(draw(1)), h = lift(draw(1));
               GroupForm j = gf_product(gf_product(bracket(bracket(f, g), h), bracket(bracket(g, h), f)),
                                        bracket(bracket(h, f), g));
               if (!j.is_identity()) return "the cyclic product is " + j.to_string();
               auto s = to_classical(bracket(bracket(f, g), h)) + to_classical(bracket(bracket(g, h), f)) +
                        to_classical(bracket(bracket(h, f), g));
               if (!s.is_zero()) return "the classical cyclic sum is " + s.to_string();
             }
             return std::nullopt;
           });

    ck.run(G->name() + ": the graded Jacobi identity holds in degrees (1,1,2)",
           [&]() -> std::optional<std::string> {
             for (int t = 0; t < 2; ++t) {
               GroupForm f = lift(draw(1)), g = lift(draw(1)), h = lift(draw(2));
               // signs: +1, (-1)^(1*(1+2)) = -1, (-1)^(2*(1+1)) = +1
               auto s = to_classical(bracket(bracket(f, g), h)) - to_classical(bracket(bracket(g, h), f)) +
                        to_classical(bracket(bracket(h, f), g));
               if (!s.is_zero()) return "the signed cyclic sum is " + s.to_string();
             }
             return std::nullopt;
           });

    ck.run(G->name() + ": the bracket matches the classical cobracket pairing",
           [&]() -> std::optional<std::string> {
             for (int t = 0; t < 3; ++t) {
               auto u = draw(1), v = draw(1), w = draw(2);
               if (auto bad =
                       expect_eq(to_classical(bracket(lift(u), lift(v))), bracket_classical(u, v), "degrees (1,1)"))
                 return bad;
               if (auto bad =
                       expect_eq(to_classical(bracket(lift(u), lift(w))), bracket_classical(u, w), "degrees (1,2)"))
                 return bad;
             }
             return std::nullopt;
           });

    ck.run(G->name() + ": twice the halved self-bracket is the self-bracket",
           [&]() -> std::optional<std::string> {
             for (int t = 0; t < 3; ++t) {
               auto u = draw(1);
               auto sq = square(u);
               if (auto bad = expect_eq(sq + sq, bracket_classical(u, u), "on " + u.to_string())) return bad;
             }
             return std::nullopt;
           });

    ck.run(G->name() + ": inner automorphism brackets reduce to the plain bracket",
           [&]() -> std::optional<std::string> {
             for (int t = 0; t < 3; ++t) {
               GroupForm f = lift(draw(1)), g = lift(draw(static_cast<int>(rng.range(1, 2))));
               if (auto bad = expect_eq(aut_bracket(i_star(f), g), bracket(f, g), "on " + f.to_string()))
                 return bad;
             }
             return std::nullopt;
           });
  }
}

void suite_adjoint(const SuiteConfig& cfg, Checker& ck) {
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "adjoint"));
  std::string why;
  auto fam = scalar_family(B, Flavor::Strong, cfg.cap, &why);
  if (!fam) {
    ck.skip("conjugation of forms by base points", why);
    return;
  }
  if (!cfg.ring.is_field()) {
    ck.skip("conjugation of forms by base points", "the kernel-point route needs field scalars");
    return;
  }
  PresentationPtr Beps = square_zero_ext(B, cfg.cap);
  QuotAlgebra algB{B};
  int top = std::max(1, std::min(cfg.nmax, 2));

  for (const auto& G : {builtin_group("Aff1", cfg.ring), builtin_group("Heis3", cfg.ring)}) {
    ck.run(G->name() + ": the identity point fixes every form", [&]() -> std::optional<std::string> {
      for (int t = 0; t < 2; ++t) {
        GroupForm f = from_classical(rng.rep(G, B, static_cast<int>(rng.range(1, top)), cfg.coeffdeg), fam);
        if (auto bad = expect_eq(adjoint(point_identity(G, algB), f), f, "on " + f.to_string())) return bad;
      }
      return std::nullopt;
    });

    ck.run(G->name() + ": conjugation is independent of the chosen vertex", [&]() -> std::optional<std::string> {
      for (int t = 0; t < 5; ++t) {
        auto g = random_point(rng, G, algB, cfg.coeffdeg);
        int d = static_cast<int>(rng.range(1, top));
        GroupForm f = from_classical(rng.rep(G, B, d, cfg.coeffdeg), fam);
        GroupForm at0 = adjoint(*g, f, 0);
        for (int s = 1; s <= d; ++s)
          if (auto bad = expect_eq(adjoint(*g, f, s), at0, "vertex " + std::to_string(s) + " at the point " +
                                                               point_string(*g)))
            return bad;
      }
      return std::nullopt;
    });

    ck.run(G->name() + ": conjugation respects point composition", [&]() -> std::optional<std::string> {
      for (int t = 0; t < 3; ++t) {
        auto g1 = random_point(rng, G, algB, cfg.coeffdeg);
        auto g2 = random_point(rng, G, algB, cfg.coeffdeg);
        GroupForm f = from_classical(rng.rep(G, B, static_cast<int>(rng.range(1, top)), cfg.coeffdeg), fam);
        if (auto bad = expect_eq(adjoint(point_compose(*g1, *g2), f), adjoint(*g1, adjoint(*g2, f)),
                                 "at " + point_string(*g1) + " and " + point_string(*g2)))
          return bad;
      }
      return std::nullopt;
    });

    ck.run(G->name() + ": conjugation matches the kernel-point coadjoint matrix",
           [&]() -> std::optional<std::string> {
             for (int t = 0; t < 5; ++t) {
               auto g = random_point(rng, G, algB, cfg.coeffdeg);
               auto M = coadjoint_matrix(G, *g, Beps);
               int d = static_cast<int>(rng.range(1, top));
               auto u = rng.rep(G, B, d, cfg.coeffdeg);
               std::map<int, ClassicalForm> im;
               for (int z : G->presentation()->primary_vars()) {
                 ClassicalForm acc = ClassicalForm::zero(B, d);
                 for (const auto& [y, m] : M[z]) acc = acc + u.at(y).scaled(m);
                 if (!acc.is_zero()) im.emplace(z, acc);
               }
               ClassicalRep want(G, B, d, im);
               if (auto bad = expect_eq(to_classical(adjoint(*g, from_classical(u, fam), 0)), want,
                                        "at the point " + point_string(*g)))
                 return bad;
             }
             return std::nullopt;
           });
  }
}

void suite_delta(const SuiteConfig& cfg, Checker& ck) {
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "delta-suite"));
  std::string why;
  auto fam = scalar_family(B, Flavor::Strong, cfg.cap, &why);
  if (!fam) {
    ck.skip("the coboundary tower", why);
    return;
  }
  QuotAlgebra algB{B};
  auto Ga = builtin_group("Ga", cfg.ring);
  auto H3 = builtin_group("Heis3", cfg.ring);
  HopfPtr Gm, Aff;
  try {
    Gm = builtin_group("Gm", cfg.ring);
    Aff = builtin_group("Aff1", cfg.ring);
  } catch (const ContextError& e) {
    ck.skip("groups with localized presentations take part", e.what());
  }
  std::vector<HopfPtr> all = {Ga, H3};
  if (Gm) all.push_back(Gm);
  if (Aff) all.push_back(Aff);
  add_config_group(cfg, ck, all);
  std::vector<HopfPtr> rich = {H3};
  if (Aff) rich.push_back(Aff);
  std::vector<HopfPtr> curv = {Ga, H3};
  if (Aff) curv.push_back(Aff);
  int nv = static_cast<int>(B->ring()->nvars());

  ck.run("point coboundaries are flat", [&]() -> std::optional<std::string> {
    for (const auto& G : all)
      for (int t = 0; t < 2; ++t) {
        auto g = random_point(rng, G, algB, cfg.coeffdeg);
        if (!g) continue;
        if (!delta1(delta0(*g, fam)).is_identity())
          return G->name() + " at the point " + point_string(*g);
      }
    return std::nullopt;
  });

  ck.run("the point coboundary is a crossed homomorphism", [&]() -> std::optional<std::string> {
    for (const auto& G : rich)
      for (int t = 0; t < 3; ++t) {
        auto g1 = random_point(rng, G, algB, cfg.coeffdeg);
        auto g2 = random_point(rng, G, algB, cfg.coeffdeg);
        auto want = gf_product(adjoint(point_inverse(*g2), delta0(*g1, fam)), delta0(*g2, fam));
        if (auto bad = expect_eq(delta0(point_compose(*g1, *g2), fam), want,
                                 G->name() + " at " + point_string(*g1) + " and " + point_string(*g2)))
          return bad;
      }
    return std::nullopt;
  });

  ck.run("the classical shadow of a point coboundary is the differential",
         [&]() -> std::optional<std::string> {
           for (int t = 0; t < 5; ++t) {
             Poly p = rng.poly(B, cfg.coeffdeg);
             auto g = make_point(Ga, algB, {p});
             auto dp = exterior_d(ClassicalForm::term(B, p, {}));
             ClassicalRep want(Ga, B, 1, dp.is_zero() ? std::map<int, ClassicalForm>{}
                                                      : std::map<int, ClassicalForm>{{0, dp}});
             if (auto bad = expect_eq(to_classical(delta0(g, fam)), want, "at " + p.to_string())) return bad;
           }
           return std::nullopt;
         });

  ck.run("structural one-forms of the four groups are flat", [&]() -> std::optional<std::string> {
    for (const auto& G : all) {
      if (!G->presentation()->is_free() && !G->presentation()->is_smooth()) continue;
      auto famG = group_form_family(G->presentation(), cfg.cap);
      if (!delta1(mc_form(G, famG)).is_identity()) return G->name();
    }
    return std::nullopt;
  });

  ck.run("structural one-forms solve the structure equation", [&]() -> std::optional<std::string> {
    for (const auto& G : all) {
      if (!G->presentation()->is_free() && !G->presentation()->is_smooth()) continue;
      auto famG = group_form_family(G->presentation(), cfg.cap);
      auto w = to_classical(mc_form(G, famG));
      auto s = rep_d(w) + square(w);
      if (!s.is_zero()) return G->name() + ": the defect is " + s.to_string();
    }
    return std::nullopt;
  });

  ck.run("curvature is the derivative plus the halved self-bracket", [&]() -> std::optional<std::string> {
    for (const auto& G : curv)
      for (int t = 0; t < 3; ++t) {
        auto u = rng.rep(G, B, 1, cfg.coeffdeg);
        if (auto bad = expect_eq(to_classical(delta1(from_classical(u, fam))), rep_d(u) + square(u),
                                 G->name() + " on " + u.to_string()))
          return bad;
      }
    return std::nullopt;
  });

  ck.run("the curvature additivity defect is the bracket", [&]() -> std::optional<std::string> {
    for (const auto& G : rich)
      for (int t = 0; t < 3; ++t) {
        GroupForm f = from_classical(rng.rep(G, B, 1, cfg.coeffdeg), fam);
        GroupForm g = from_classical(rng.rep(G, B, 1, cfg.coeffdeg), fam);
        auto want = gf_product(gf_product(delta1(f), delta1(g)), bracket(f, g));
        if (auto bad = expect_eq(delta1(gf_product(f, g)), want, G->name())) return bad;
      }
    return std::nullopt;
  });

  ck.run("the curvature is equivariant for the twisted action", [&]() -> std::optional<std::string> {
    for (const auto& G : rich)
      for (int t = 0; t < 3; ++t) {
        auto g = random_point(rng, G, algB, cfg.coeffdeg);
        GroupForm w = from_classical(rng.rep(G, B, 1, cfg.coeffdeg), fam);
        if (auto bad = expect_eq(delta1(twisted_action(w, *g)), adjoint(point_inverse(*g), delta1(w)),
                                 G->name() + " at the point " + point_string(*g)))
          return bad;
      }
    return std::nullopt;
  });

  ck.run("curvatures are closed for their own inner twist", [&]() -> std::optional<std::string> {
    for (const auto& G : rich)
      for (int t = 0; t < 3; ++t) {
        GroupForm w = from_classical(rng.rep(G, B, 1, cfg.coeffdeg), fam);
        auto d2 = delta2(i_star(w), delta1(w));
        if (!d2.is_identity()) return G->name() + ": " + d2.to_string();
      }
    return std::nullopt;
  });

  CoactionPtr rho = Gm ? gm_scales_ga(cfg.ring) : nullptr;
  if (!rho)
    ck.skip("the twisted two-cochain differential matches its classical shadow",
            "the scaling coaction is unavailable over this scalar ring");
  else
    ck.run("the twisted two-cochain differential matches its classical shadow",
           [&]() -> std::optional<std::string> {
             for (int t = 0; t < 3; ++t) {
               auto chi = rng.rep(rho->actor(), B, 1, cfg.coeffdeg);
               auto phi = rng.rep(rho->acted(), B, 2, cfg.coeffdeg);
               auto got = to_classical(delta2(AutForm(from_classical(chi, fam), rho), from_classical(phi, fam)));
               if (auto bad = expect_eq(got, rep_d(phi) + aut_bracket_classical(rho, chi, phi),
                                        "twist " + chi.to_string()))
                 return bad;
             }
             return std::nullopt;
           });

  ck.run("inner twists reduce the two-cochain differential to the bracket",
         [&]() -> std::optional<std::string> {
           for (int t = 0; t < 3; ++t) {
             auto psi = rng.rep(H3, B, 1, cfg.coeffdeg);
             auto phi = rng.rep(H3, B, 2, cfg.coeffdeg);
             auto got = to_classical(delta2(i_star(from_classical(psi, fam)), from_classical(phi, fam)));
             if (auto bad = expect_eq(got, rep_d(phi) + bracket_classical(psi, phi), "on " + psi.to_string()))
               return bad;
           }
           return std::nullopt;
         });

  ck.run("coboundary twists with central curvature kill the composite differential",
         [&]() -> std::optional<std::string> {
           for (int t = 0; t < 2; ++t) {
             auto gamma = random_point(rng, H3, algB, cfg.coeffdeg);
             auto chi = i_star(delta0(*gamma, fam));
             // the third generator spans the center, so this form is conjugation-invariant
             ClassicalRep eta(H3, B, 2, {{2, rng.form(B, 2, cfg.coeffdeg, nv >= 2)}});
             GroupForm E = from_classical(eta, fam);
             GroupForm d2 = delta2(chi, E);
             if (!delta3(chi, d2).is_identity()) return "the short route at " + point_string(*gamma);
             if (!delta3_full(chi, E, d2).is_identity()) return "the full route at " + point_string(*gamma);
           }
           return std::nullopt;
         });

  if (!rho)
    ck.skip("the twisted three-cochain differential matches its classical shadow",
            "the scaling coaction is unavailable over this scalar ring");
  else
    ck.run("the twisted three-cochain differential matches its classical shadow",
           [&]() -> std::optional<std::string> {
             auto B4 = AlgebraPresentation::free_algebra(cfg.ring, {"x1", "x2", "x3", "x4"}, cfg.cap);
           auto fam4 = group_form_family(B4, cfg.cap);
           for (int t = 0; t < 2; ++t) {
             auto chi = rng.rep(rho->actor(), B4, 1, cfg.coeffdeg);
             auto w = rng.rep(rho->acted(), B4, 3, cfg.coeffdeg);
             auto got = to_classical(delta3(AutForm(from_classical(chi, fam4), rho), from_classical(w, fam4)));
             if (auto bad = expect_eq(got, rep_d(w) + aut_bracket_classical(rho, chi, w),
                                      "twist " + chi.to_string()))
               return bad;
           }
           return std::nullopt;
         });

  ck.run("the full and reduced three-cochain differentials agree", [&]() -> std::optional<std::string> {
    for (int t = 0; t < 2; ++t) {
      auto psi = from_classical(rng.rep(H3, B, 1, cfg.coeffdeg), fam);
      auto aux = from_classical(rng.rep(H3, B, 2, cfg.coeffdeg), fam);
      auto w = from_classical(rng.rep(H3, B, 3, cfg.coeffdeg), fam);
      if (auto bad = expect_eq(delta3_full(i_star(psi), aux, w), delta3(i_star(psi), w), "inner twist"))
        return bad;
    }
    if (rho) {
      auto chi = AutForm(from_classical(rng.rep(rho->actor(), B, 1, cfg.coeffdeg), fam), rho);
      auto aux = from_classical(rng.rep(rho->acted(), B, 2, cfg.coeffdeg), fam);
      auto w = from_classical(rng.rep(rho->acted(), B, 3, cfg.coeffdeg), fam);
      return expect_eq(delta3_full(chi, aux, w), delta3(chi, w), "scaling twist");
    }
    return std::nullopt;
  });
}

void suite_deformation_kernel(const SuiteConfig& cfg, Checker& ck) {
  auto B = suite_base(cfg, ck);
  if (!B) return;
  Rand rng(mix_seed(cfg.seed, "deformation-kernel"));
  std::vector<HopfPtr> gs = builtin_list(cfg, ck, {"Ga", "Gm", "Aff1", "Heis3"});
  add_config_group(cfg, ck, gs);
  int nv = static_cast<int>(B->ring()->nvars());

  if (!cfg.ring.is_field()) {
    ck.skip("kernels over the square-zero polynomial extension",
            "the square-zero extension needs field scalars");
  } else {
    PresentationPtr Beps = square_zero_ext(B, cfg.cap);
    QuotAlgebra algE{Beps};
    const auto& Re = Beps->ring();
    int ne = static_cast<int>(Re->nvars());
    Poly eps = Poly::variable(Re, ne - 1);
    std::vector<int> up(static_cast<size_t>(ne - 1));
    std::iota(up.begin(), up.end(), 0);
    auto lift = [&](const Poly& p) { return p.reindex(Re, up); };
    auto draw = [&](const HopfPtr& G) {
      std::map<int, Poly> u;
      for (int v : G->presentation()->primary_vars())
        if (rng.below(4) < 3) u.emplace(v, eps * lift(rng.poly(B, cfg.coeffdeg)));
      return u;
    };

    ck.run("square-zero kernel points compose abelianly", [&]() -> std::optional<std::string> {
      for (const auto& G : gs)
        for (int t = 0; t < 3; ++t) {
          auto k1 = kernel_point(G, algE, draw(G));
          auto k2 = kernel_point(G, algE, draw(G));
          if (!point_equal(point_compose(k1, k2), point_compose(k2, k1))) return G->name();
        }
      return std::nullopt;
    });

    ck.run("kernel coordinates and kernel points are mutually inverse", [&]() -> std::optional<std::string> {
      for (const auto& G : gs) {
        auto u = draw(G);
        auto k = kernel_point(G, algE, u);
        auto back = kernel_coords(k);
        for (int v : G->presentation()->primary_vars()) {
          Poly want = u.count(v) ? u.at(v) : Poly::zero(Re);
          if (!algE.equal(back.at(v), want))
            return G->name() + ": coordinate of generator " + std::to_string(v);
        }
        if (!point_equal(kernel_point(G, algE, back), k)) return G->name() + ": the point roundtrip";
        if (!point_equal(kernel_point(G, algE, {}), point_identity(G, algE)))
          return G->name() + ": zero coordinates are not the identity";
      }
      return std::nullopt;
    });

    ck.run("composition adds kernel coordinates and doubling scales them", [&]() -> std::optional<std::string> {
      for (const auto& G : gs)
        for (int t = 0; t < 3; ++t) {
          auto u1 = draw(G);
          auto u2 = draw(G);
          auto k1 = kernel_point(G, algE, u1);
          auto k2 = kernel_point(G, algE, u2);
          auto sum = kernel_coords(point_compose(k1, k2));
          std::map<int, Poly> twice;
          for (int v : G->presentation()->primary_vars()) {
            Poly a = u1.count(v) ? u1.at(v) : Poly::zero(Re);
            Poly b = u2.count(v) ? u2.at(v) : Poly::zero(Re);
            if (!algE.equal(sum.at(v), algE.add(a, b)))
              return G->name() + ": composing does not add coordinate " + std::to_string(v);
            twice.emplace(v, algE.add(a, a));
          }
          if (!point_equal(point_compose(k1, k1), kernel_point(G, algE, twice)))
            return G->name() + ": doubling is not scaling by two";
        }
      return std::nullopt;
    });
  }

  ck.run("jet-algebra kernels are classical one-forms", [&]() -> std::optional<std::string> {
    JetAlgebra ja{B, 1};
    auto zero_form = ClassicalForm::zero(B, 1);
    auto zero_body = Poly::zero(B->ring());
    auto draw = [&](const HopfPtr& G) {
      std::map<int, JetElem> u;
      for (int v : G->presentation()->primary_vars())
        if (rng.below(4) < 3) u.emplace(v, JetElem{zero_body, rng.form(B, 1, cfg.coeffdeg, nv >= 1)});
      return u;
    };
    for (const auto& G : gs)
      for (int t = 0; t < 2; ++t) {
        auto u1 = draw(G);
        auto u2 = draw(G);
        auto k1 = kernel_point(G, ja, u1);
        auto k2 = kernel_point(G, ja, u2);
        if (!point_equal(point_compose(k1, k2), point_compose(k2, k1)))
          return G->name() + ": the kernel is not abelian";
        auto sum = kernel_coords(point_compose(k1, k2));
        for (int v : G->presentation()->primary_vars()) {
          JetElem a = u1.count(v) ? u1.at(v) : JetElem{zero_body, zero_form};
          JetElem b = u2.count(v) ? u2.at(v) : JetElem{zero_body, zero_form};
          if (!(sum.at(v) == ja.add(a, b)))
            return G->name() + ": composing does not add the slopes at generator " + std::to_string(v);
        }
        if (!point_equal(kernel_point(G, ja, kernel_coords(k1)), k1)) return G->name() + ": the roundtrip";
      }
    return std::nullopt;
  });
}

void run_one(const std::string& name, const SuiteConfig& cfg, Checker& ck) {
  if (name == "ideal-identities")
    suite_ideal_identities(cfg, ck);
  else if (name == "nu-iso")
    suite_nu_iso(cfg, ck);
  else if (name == "sign-action")
    suite_sign_action(cfg, ck);
  else if (name == "wedge")
    suite_wedge(cfg, ck);
  else if (name == "cech")
    suite_cech(cfg, ck);
  else if (name == "bracket-laws")
    suite_bracket_laws(cfg, ck);
  else if (name == "adjoint")
    suite_adjoint(cfg, ck);
  else if (name == "delta-suite")
    suite_delta(cfg, ck);
  else if (name == "deformation-kernel")
    suite_deformation_kernel(cfg, ck);
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.status != CheckStatus::Fail; });
}

int Report::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [s](const CheckRecord& r) { return r.status == s; }));
}

std::string Report::machine_text(bool timings) const {
  auto tag = [](CheckStatus s) {
    switch (s) {
      case CheckStatus::Pass: return "pass";
      case CheckStatus::Fail: return "fail";
      default: return "skip";
    }
  };
  std::ostringstream os;
  for (const auto& r : records) {
    os << "check suite=" << r.suite << " idx=" << r.idx << " status=" << tag(r.status);
    if (timings) os << " ms=" << r.ms;
    os << " desc=" << r.desc;
    if (!r.witness.empty()) os << " witness=" << r.witness;
    os << "\n";
  }
  os << "summary checks=" << records.size() << " pass=" << count(CheckStatus::Pass)
     << " fail=" << count(CheckStatus::Fail) << " skip=" << count(CheckStatus::Skip) << "\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ideal-identities", "nu-iso",  "sign-action",
                                                 "wedge",            "cech",    "bracket-laws",
                                                 "adjoint",          "delta-suite", "deformation-kernel"};
  return names;
}

Report run_suites(const SuiteConfig& cfg) {
  const auto& names = suite_names();
  const auto& want = cfg.suites.empty() ? names : cfg.suites;
  for (const auto& s : want)
    if (std::find(names.begin(), names.end(), s) == names.end()) throw UsageError("unknown suite '" + s + "'");
  std::vector<std::string> todo;
  for (const auto& s : names)
    if (std::find(want.begin(), want.end(), s) != want.end()) todo.push_back(s);

  std::vector<std::vector<CheckRecord>> buckets(todo.size());
  auto work = [&](size_t i) {
    Checker ck{todo[i], &buckets[i]};
    try {
      run_one(todo[i], cfg, ck);
    } catch (const std::exception& e) {
      ck.fail("the suite ran to completion", e.what());
    }
  };

  if (cfg.jobs > 1 && todo.size() > 1) {
    std::atomic<size_t> next{0};
    unsigned nt = std::min<unsigned>(static_cast<unsigned>(cfg.jobs), static_cast<unsigned>(todo.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= todo.size()) return;
          work(i);
        }
      });
    for (auto& th : pool) th.join();
  } else {
    for (size_t i = 0; i < todo.size(); ++i) work(i);
  }

  Report rep;
  for (auto& b : buckets)
    for (auto& r : b) rep.records.push_back(std::move(r));
  return rep;
}

}  // namespace cdf
