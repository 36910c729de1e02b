#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cdf/config.hpp"

using namespace cdf;

namespace {

GroupDef relabeled_heis() {
  GroupDef g;
  g.name = "MyHeis";
  g.vars = {"u", "v", "c"};
  g.comult = {"u@0 + u@1", "v@0 + v@1", "c@0 + c@1 + u@0*v@1"};
  g.counit = {"0", "0", "0"};
  g.antipode = {"-u", "-v", "-c + u*v"};
  return g;
}

}  // namespace

TEST_CASE("polynomial expressions") {
  auto B = AlgebraPresentation::free_algebra(Ring::rationals(), {"x", "y"});
  auto R = B->ring();
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);

  CHECK(parse_poly(R, "x^2*y + 3") == x * x * y + Poly::constant(R, 3));
  CHECK(parse_poly(R, "-x + 1") == -x + Poly::constant(R, 1));
  CHECK(parse_poly(R, "1/2*x - (y - x)^2") == Poly::constant(R, Scalar::fraction(Ring::rationals(), 1, 2)) * x -
                                                  (y - x) * (y - x));
  CHECK(parse_poly(R, "  2 ") == Poly::constant(R, 2));
  // renderings parse back to the same element
  for (const Poly& p : {x * x * y - y + Poly::constant(R, 7), -x * y, (x + y) * (x - y)})
    CHECK(parse_poly(R, p.to_string()) == p);

  CHECK_THROWS_WITH_AS(parse_poly(R, "x + z"), doctest::Contains("unknown variable 'z'"), FormatError);
  CHECK_THROWS_AS(parse_poly(R, "x +"), FormatError);
  CHECK_THROWS_AS(parse_poly(R, "(x"), FormatError);
  CHECK_THROWS_AS(parse_poly(R, "x y"), FormatError);

  // doubled names resolve in tensor rings
  auto T2 = tensor_power(B, 2);
  CHECK(parse_poly(T2->ring(), "x@0*y@1") ==
        Poly::variable(T2->ring(), T2->ring()->var_index("x@0")) *
            Poly::variable(T2->ring(), T2->ring()->var_index("y@1")));
}

TEST_CASE("config round-trips through its text form") {
  SuiteConfig cfg;
  cfg.ring = Ring::prime_field(5);
  cfg.vars = {"s", "sbar", "x"};
  cfg.inverses = {{"s", "sbar"}};
  cfg.group = "Aff1";
  cfg.flavor = Flavor::Weak;
  cfg.nmax = 3;
  cfg.coeffdeg = 1;
  cfg.seed = 987654321;
  cfg.suites = {"nu-iso", "wedge"};
  cfg.cap.max_degree = 9;
  cfg.jobs = 2;

  SuiteConfig back = parse_config(serialize_config(cfg));
  CHECK(back == cfg);
  CHECK(serialize_config(back) == serialize_config(cfg));

  SuiteConfig dflt;
  CHECK(parse_config(serialize_config(dflt)) == dflt);

  // custom group and action definitions survive the round-trip
  SuiteConfig withdefs;
  withdefs.groups.push_back(relabeled_heis());
  ActionDef act;
  act.name = "scaling";
  act.actor = "Gm";
  act.acted = "Ga";
  act.images = {{"x", "t@0*x@1"}};
  withdefs.actions.push_back(act);
  SuiteConfig back2 = parse_config(serialize_config(withdefs));
  CHECK(back2 == withdefs);
  CHECK(serialize_config(back2) == serialize_config(withdefs));
}

TEST_CASE("malformed configs name the offending line") {
  CHECK_THROWS_WITH_AS(parse_config("vars x\n"), doctest::Contains("cdfcfg"), FormatError);
  CHECK_THROWS_WITH_AS(parse_config("cdfcfg 2\n"), doctest::Contains("version"), FormatError);
  std::string base = "cdfcfg 1\nring Q\nvars x\ngroup Ga\n";
  CHECK_THROWS_WITH_AS(parse_config(base + "colour blue\n"), doctest::Contains("unknown keyword 'colour'"),
                       FormatError);
  CHECK_THROWS_WITH_AS(parse_config(base + "flavor soft\n"), doctest::Contains("flavor"), FormatError);
  CHECK_THROWS_WITH_AS(parse_config(base + "begin group G\ngen t\n"), doctest::Contains("missing 'end'"),
                       FormatError);
  CHECK_THROWS_WITH_AS(parse_config("cdfcfg 1\nring Q\nvars x\n"), doctest::Contains("group"), FormatError);
  CHECK_THROWS_WITH_AS(parse_config(base + "ring R7\n"), doctest::Contains("ring"), FormatError);

  // comments and blank lines are fine
  SuiteConfig ok = parse_config("cdfcfg 1\n# a comment\nring Q\n\nvars x y # inline\ngroup Gm\n");
  CHECK(ok.vars == std::vector<std::string>{"x", "y"});
  CHECK(ok.group == "Gm");
}

TEST_CASE("custom groups are built and validated from definitions") {
  SuiteConfig cfg;
  cfg.groups.push_back(relabeled_heis());
  HopfPtr G = resolve_group(cfg, "MyHeis");
  CHECK(G->name() == "MyHeis");
  CHECK(G->presentation()->ring()->vars() == std::vector<std::string>{"u", "v", "c"});
  // comultiplication tail of the central generator reflects the relabeling
  auto tail = comult_tail(G, Poly::variable(G->presentation()->ring(), 2));
  REQUIRE(tail.size() == 1);
  CHECK(tail[0].first == Poly::variable(G->presentation()->ring(), 0));

  CHECK(resolve_group(cfg, "Gm")->name() == "Gm");
  CHECK_THROWS_AS(resolve_group(cfg, "Nope"), LookupError);

  // a corrupted antipode is rejected with the axiom named
  GroupDef badg = relabeled_heis();
  badg.antipode[2] = "-c";  // drops the correction term
  CHECK_THROWS_WITH_AS(build_group(badg, Ring::rationals()), doctest::Contains("antipode"), PresentationError);

  // custom scaling action equals the builtin one on its tail
  ActionDef act;
  act.name = "scaling";
  act.actor = "Gm";
  act.acted = "Ga";
  act.images = {{"x", "t@0*x@1"}};
  auto rho = build_action(act, builtin_group("Gm", Ring::rationals()), builtin_group("Ga", Ring::rationals()));
  auto ref = gm_scales_ga(Ring::rationals());
  CHECK(lambda_bar(*rho, Poly::variable(rho->acted()->presentation()->ring(), 0)).coords ==
        lambda_bar(*ref, Poly::variable(ref->acted()->presentation()->ring(), 0)).coords);
}
