#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdf/groebner.hpp"
#include "cdf/presentation.hpp"

using namespace cdf;

namespace {

PolyRingPtr qxy() { return PolyRing::make(Ring::rationals(), {"x", "y"}); }

Poly v(const PolyRingPtr& r, const char* name) { return Poly::variable(r, r->var_index(name)); }

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Ring Q = Ring::rationals();
  Scalar a = Scalar::fraction(Q, 1, 3), b = Scalar::fraction(Q, 1, 6);
  CHECK(a + b == Scalar::fraction(Q, 1, 2));
  CHECK((a * b).to_string() == "1/18");
  CHECK(a.inverse() == Scalar(Q, 3));

  Ring F5 = Ring::prime_field(5);
  Scalar c(F5, 3), d(F5, 4);
  CHECK(c + d == Scalar(F5, 2));
  CHECK(c * d == Scalar(F5, 2));
  CHECK(c.inverse() == Scalar(F5, 2));
  CHECK((-c) == Scalar(F5, 2));

  Ring Z6 = Ring::integers_mod(6);
  CHECK(Scalar(Z6, 5).is_unit());
  CHECK(Scalar(Z6, 5).inverse() == Scalar(Z6, 5));
  CHECK(!Scalar(Z6, 2).is_unit());
  CHECK_THROWS_AS(Scalar(Z6, 2).inverse(), UnitError);

  CHECK_THROWS_AS(Ring::prime_field(4), ContextError);
  CHECK_THROWS_AS((void)(Scalar(Q, 1) + Scalar(F5, 1)), ContextError);
}

TEST_CASE("coefficient reduction modulo two") {
  CHECK(Scalar(Ring::rationals(), 7).reduce_mod_two().is_zero());
  CHECK(Scalar(Ring::prime_field(2), 1).reduce_mod_two().is_one());
  CHECK(Scalar(Ring::prime_field(5), 3).reduce_mod_two().is_zero());
  Ring Z6 = Ring::integers_mod(6);
  CHECK(Scalar(Z6, 3).reduce_mod_two() == Scalar(Z6, 1));
  CHECK(Scalar(Z6, 4).reduce_mod_two().is_zero());
}

TEST_CASE("degrevlex ordering") {
  auto r = PolyRing::make(Ring::rationals(), {"x", "y", "z"});
  Poly p = v(r, "x") * v(r, "y").pow(2) + v(r, "x").pow(2) * v(r, "z");
  CHECK(monomial_to_string(*r, p.leading().mono) == "x*y^2");
  Poly q = v(r, "x") + v(r, "y").pow(2);
  CHECK(monomial_to_string(*r, q.leading().mono) == "y^2");
}

TEST_CASE("polynomial arithmetic, derivative, substitution") {
  auto r = qxy();
  Poly x = v(r, "x"), y = v(r, "y");
  Poly p = (x + y).pow(3);
  CHECK(p.to_string() == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
  CHECK(p - p == Poly::zero(r));
  CHECK(p.derivative(0) == Poly::constant(r, 3) * (x + y).pow(2));

  auto r3 = PolyRing::make(Ring::rationals(), {"u", "w"});
  Poly u = Poly::variable(r3, 0), w = Poly::variable(r3, 1);
  // x -> u + w, y -> u*w
  Poly img = p.substitute({u + w, u * w});
  CHECK(img == (u + w + u * w).pow(3));

  Poly back = x.reindex(r3, {1, 0});
  CHECK(back == w);
}

TEST_CASE("reduced Groebner bases match hand-computed ones") {
  auto r = qxy();
  Poly x = v(r, "x"), y = v(r, "y");

  auto gb = reduced_groebner_basis(r, {x * x - y, y});
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == y);
  CHECK(gb[1] == x * x);

  CHECK(reduced_groebner_basis(r, {}).empty());
  CHECK(reduced_groebner_basis(r, {Poly::zero(r)}).empty());

  auto gb2 = reduced_groebner_basis(r, {x, x * x});
  REQUIRE(gb2.size() == 1);
  CHECK(gb2[0] == x);

  // Non-monic and duplicate generators collapse to the same reduced basis.
  auto gb3 = reduced_groebner_basis(r, {Poly::constant(r, 7) * x, x, x * y});
  REQUIRE(gb3.size() == 1);
  CHECK(gb3[0] == x);
}

TEST_CASE("ideal membership, product, intersection") {
  auto r = qxy();
  Poly x = v(r, "x"), y = v(r, "y");
  Ideal ix(r, {x}), iy(r, {y});

  CHECK(ix.contains(x * x + x * y));
  CHECK(!ix.contains(y));

  Ideal prod = ix.product(iy);
  Ideal inter = ix.intersect(iy);
  Ideal expected(r, {x * y});
  CHECK(prod.same_ideal(expected));
  CHECK(inter.same_ideal(expected));

  Ideal sum2 = ix.sum(iy);
  Ideal square = sum2.product(sum2);
  CHECK(square.same_ideal(Ideal(r, {x * x, x * y, y * y})));

  // (x+y) cap (y) = ((x+y)*y)
  Ideal a(r, {x + y});
  CHECK(a.intersect(iy).same_ideal(Ideal(r, {(x + y) * y})));
}

TEST_CASE("groebner needs field coefficients and honors caps") {
  auto z6 = PolyRing::make(Ring::integers_mod(6), {"x"});
  CHECK_THROWS_AS(reduced_groebner_basis(z6, {Poly::variable(z6, 0)}), ContextError);

  auto r = qxy();
  Poly x = v(r, "x"), y = v(r, "y");
  GroebnerLimits tight;
  tight.max_degree = 1;
  Ideal capped(r, {x * x - y, x * y - Poly::constant(r, 1)}, tight);
  CHECK_THROWS_AS(capped.groebner_basis(), ResourceError);
}

TEST_CASE("presentations: localization, derivation, inversion") {
  auto loc = AlgebraPresentation::make(Ring::rationals(), {"t", "tbar"}, {}, {{"t", "tbar"}});
  CHECK(!loc->is_free());
  CHECK(loc->is_smooth());
  CHECK(loc->primary_vars() == std::vector<int>{0});

  auto rr = loc->ring();
  Poly t = Poly::variable(rr, 0), tb = Poly::variable(rr, 1);
  CHECK(loc->reduce(t * tb) == Poly::constant(rr, 1));
  CHECK(loc->derive(tb, 0) == -(tb * tb));
  CHECK(loc->derive(t * tb, 0) == Poly::zero(rr));
  CHECK(loc->inverse_of(t) == tb);
  CHECK(loc->inverse_of(t * t) == tb * tb);
  CHECK(loc->inverse_of(Poly::constant(rr, 2) * t) == Scalar::fraction(Ring::rationals(), 1, 2) * tb);
  CHECK_THROWS_AS(loc->inverse_of(t + Poly::constant(rr, 1)), UnitError);

  auto fr = AlgebraPresentation::free_algebra(Ring::rationals(), {"x"});
  CHECK(fr->is_free());
  CHECK(fr->inverse_of(Poly::constant(fr->ring(), 2)) ==
        Poly::constant(fr->ring(), Scalar::fraction(Ring::rationals(), 1, 2)));
  CHECK_THROWS_AS(fr->inverse_of(Poly::variable(fr->ring(), 0)), UnitError);

  auto sing = AlgebraPresentation::make(Ring::rationals(), {"x", "y"},
                                        {v(qxy(), "x") * v(qxy(), "x") - v(qxy(), "y") * v(qxy(), "y")});
  CHECK(!sing->is_smooth());
}
