#pragma once

#include "cdf/hopf.hpp"

namespace cdf {

/// Custom group definition as it appears in a definitions file: one line of
/// structure data per generator, all polynomials kept as parseable text.
struct GroupDef {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, std::string>> inverses;
  std::vector<std::string> comult;    // per generator, in the doubled ring ("v@0", "v@1")
  std::vector<std::string> counit;    // per generator, a constant
  std::vector<std::string> antipode;  // per generator, in the group ring
  bool operator==(const GroupDef&) const = default;
};

/// Custom coaction definition: actor/acted group names plus one image per
/// acted generator in the mixed doubled ring.
struct ActionDef {
  std::string name;
  std::string actor;
  std::string acted;
  std::vector<std::pair<std::string, std::string>> images;  // acted generator -> expression
  bool operator==(const ActionDef&) const = default;
};

struct SuiteConfig {
  Ring ring = Ring::rationals();
  std::vector<std::string> vars = {"x", "y"};
  std::vector<std::string> relations;
  std::vector<std::pair<std::string, std::string>> inverses;
  std::string group = "Heis3";
  Flavor flavor = Flavor::Strong;
  int nmax = 2;
  int coeffdeg = 2;
  uint64_t seed = 1;
  std::vector<std::string> suites;  // empty means all
  GroebnerLimits cap;
  int jobs = 1;
  std::string corrupt;  // fault injection for the negative controls, e.g. "ideal 0"
  std::vector<GroupDef> groups;
  std::vector<ActionDef> actions;
  bool operator==(const SuiteConfig&) const;
};

/// Line-oriented text format, versioned ("cdfcfg 1" header).  Unknown
/// keywords and malformed lines raise FormatError naming the offender.
SuiteConfig parse_config(const std::string& text);
std::string serialize_config(const SuiteConfig& cfg);

/// Parse a polynomial expression (+ - * ^ parentheses, integer and
/// fraction literals, named variables including doubled "v@i" names) in
/// the given ring.  FormatError on syntax errors or unknown names.
Poly parse_poly(const PolyRingPtr& ring, const std::string& text);

/// The base algebra described by the config.
PresentationPtr config_base(const SuiteConfig& cfg);

/// Realize a custom group definition (Hopf axioms are validated and throw
/// PresentationError with a witness when violated).
HopfPtr build_group(const GroupDef& def, const Ring& ring, const GroebnerLimits& lim = {});
/// Resolve a group name against the builtins and the config's custom list.
HopfPtr resolve_group(const SuiteConfig& cfg, const std::string& name);
CoactionPtr build_action(const ActionDef& def, const HopfPtr& actor, const HopfPtr& acted);

}  // namespace cdf
