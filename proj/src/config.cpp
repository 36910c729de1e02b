#include "cdf/config.hpp"

#include <cctype>
#include <sstream>

namespace cdf {

namespace {

// ---- polynomial expression parser -----------------------------------------

struct Lexer {
  std::string text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  std::string name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '@'))
      ++pos;
    return text.substr(start, pos - start);
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw FormatError("expected a number in '" + text + "'");
    return std::stol(text.substr(start, pos - start));
  }
};

struct PolyParser {
  Lexer lx;
  PolyRingPtr ring;

  Poly parse() {
    Poly p = sum();
    if (!lx.done()) throw FormatError("trailing input in polynomial '" + lx.text + "'");
    return p;
  }

  Poly sum() {
    Poly p = lx.eat('-') ? -product() : product();
    for (;;) {
      if (lx.eat('+'))
        p = p + product();
      else if (lx.eat('-'))
        p = p - product();
      else
        return p;
    }
  }

  Poly product() {
    Poly p = power();
    while (lx.eat('*')) p = p * power();
    return p;
  }

  Poly power() {
    Poly p = atom();
    if (lx.eat('^')) {
      long e = lx.integer();
      if (e < 0) throw FormatError("negative exponent in '" + lx.text + "'");
      p = p.pow(static_cast<int>(e));
    }
    return p;
  }

  Poly atom() {
    char c = lx.peek();
    if (c == '(') {
      lx.eat('(');
      Poly p = sum();
      if (!lx.eat(')')) throw FormatError("missing ')' in '" + lx.text + "'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = lx.integer();
      if (lx.eat('/')) return Poly::constant(ring, Scalar::fraction(ring->base(), num, lx.integer()));
      return Poly::constant(ring, num);
    }
    std::string n = lx.name();
    if (n.empty()) throw FormatError("unexpected character '" + std::string(1, c) + "' in '" + lx.text + "'");
    int v = ring->var_index(n);
    if (v < 0) throw FormatError("unknown variable '" + n + "' in '" + lx.text + "'");
    return Poly::variable(ring, v);
  }
};

Scalar parse_scalar(const Ring& r, const std::string& text) {
  Lexer lx{text};
  bool neg = lx.eat('-');
  long num = lx.integer();
  Scalar s = lx.eat('/') ? Scalar::fraction(r, num, lx.integer()) : Scalar(r, num);
  if (!lx.done()) throw FormatError("trailing input in constant '" + text + "'");
  return neg ? -s : s;
}

// ---- line-oriented config format -------------------------------------------

struct Line {
  std::string keyword;
  std::vector<std::string> words;  // whitespace-split arguments
  std::string tail;                // raw text after the keyword
  int number = 0;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line line;
    line.number = number;
    if (!(ls >> line.keyword)) continue;
    std::string w;
    while (ls >> w) line.words.push_back(w);
    size_t at = raw.find(line.keyword) + line.keyword.size();
    while (at < raw.size() && std::isspace(static_cast<unsigned char>(raw[at]))) ++at;
    line.tail = raw.substr(at);
    while (!line.tail.empty() && std::isspace(static_cast<unsigned char>(line.tail.back()))) line.tail.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void bad(const Line& line, const std::string& what) {
  throw FormatError(what + " (line " + std::to_string(line.number) + ")");
}

void expect_words(const Line& line, size_t n) {
  if (line.words.size() != n)
    bad(line, "keyword '" + line.keyword + "' expects " + std::to_string(n) + " argument(s)");
}

// "comul r = expr" -> generator name and expression text
std::pair<std::string, std::string> gen_assign(const Line& line) {
  auto eq = line.tail.find('=');
  if (eq == std::string::npos) bad(line, "keyword '" + line.keyword + "' expects 'generator = expression'");
  std::istringstream head(line.tail.substr(0, eq));
  std::string gen;
  if (!(head >> gen)) bad(line, "missing generator before '='");
  std::string rest;
  if (head >> rest) bad(line, "expected a single generator before '='");
  std::string expr = line.tail.substr(eq + 1);
  size_t a = expr.find_first_not_of(" \t");
  if (a == std::string::npos) bad(line, "missing expression after '='");
  return {gen, expr.substr(a)};
}

Ring parse_ring(const Line& line) {
  if (line.words.size() == 1 && line.words[0] == "Q") return Ring::rationals();
  if (line.words.size() == 2 && line.words[0] == "Fp") return Ring::prime_field(std::stol(line.words[1]));
  if (line.words.size() == 2 && line.words[0] == "Zmod") return Ring::integers_mod(std::stol(line.words[1]));
  bad(line, "ring expects 'Q', 'Fp <p>', or 'Zmod <m>'");
}

std::string render_ring(const Ring& r) {
  switch (r.kind()) {
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "Fp " + std::to_string(r.modulus());
    default: return "Zmod " + std::to_string(r.modulus());
  }
}

int find_gen(const std::vector<std::string>& vars, const std::string& n, const Line& line) {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == n) return static_cast<int>(i);
  bad(line, "unknown generator '" + n + "'");
}

}  // namespace

bool SuiteConfig::operator==(const SuiteConfig& o) const {
  return ring == o.ring && vars == o.vars && relations == o.relations && inverses == o.inverses &&
         group == o.group && flavor == o.flavor && nmax == o.nmax && coeffdeg == o.coeffdeg && seed == o.seed &&
         suites == o.suites && cap.max_degree == o.cap.max_degree && cap.max_basis == o.cap.max_basis &&
         jobs == o.jobs && corrupt == o.corrupt && groups == o.groups && actions == o.actions;
}

Poly parse_poly(const PolyRingPtr& ring, const std::string& text) {
  PolyParser p{Lexer{text}, ring};
  return p.parse();
}

SuiteConfig parse_config(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0].keyword != "cdfcfg") throw FormatError("missing 'cdfcfg' header");
  if (lines[0].words != std::vector<std::string>{"1"}) bad(lines[0], "unsupported cdfcfg version");

  SuiteConfig cfg;
  cfg.vars.clear();
  cfg.group.clear();
  bool have_ring = false;

  size_t i = 1;
  auto parse_group_block = [&](const Line& open) {
    GroupDef def;
    def.name = open.words[1];
    for (++i; i < lines.size(); ++i) {
      const Line& l = lines[i];
      if (l.keyword == "end") return def;
      if (l.keyword == "gen") {
        def.vars = l.words;
        def.comult.resize(def.vars.size());
        def.counit.resize(def.vars.size());
        def.antipode.resize(def.vars.size());
      } else if (l.keyword == "rel") {
        def.relations.push_back(l.tail);
      } else if (l.keyword == "inv") {
        expect_words(l, 2);
        def.inverses.emplace_back(l.words[0], l.words[1]);
      } else if (l.keyword == "comul" || l.keyword == "counit" || l.keyword == "antipode") {
        auto [gen, expr] = gen_assign(l);
        int v = find_gen(def.vars, gen, l);
        (l.keyword == "comul" ? def.comult : l.keyword == "counit" ? def.counit : def.antipode)[v] = expr;
      } else {
        bad(l, "unknown keyword '" + l.keyword + "' in group block");
      }
    }
    bad(open, "group block is missing 'end'");
  };
  auto parse_action_block = [&](const Line& open) {
    ActionDef def;
    def.name = open.words[1];
    for (++i; i < lines.size(); ++i) {
      const Line& l = lines[i];
      if (l.keyword == "end") return def;
      if (l.keyword == "actor") {
        expect_words(l, 1);
        def.actor = l.words[0];
      } else if (l.keyword == "acted") {
        expect_words(l, 1);
        def.acted = l.words[0];
      } else if (l.keyword == "act") {
        def.images.push_back(gen_assign(l));
      } else {
        bad(l, "unknown keyword '" + l.keyword + "' in action block");
      }
    }
    bad(open, "action block is missing 'end'");
  };

  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.keyword == "ring") {
      cfg.ring = parse_ring(l);
      have_ring = true;
    } else if (l.keyword == "vars") {
      cfg.vars = l.words;
    } else if (l.keyword == "rel") {
      cfg.relations.push_back(l.tail);
    } else if (l.keyword == "inv") {
      expect_words(l, 2);
      cfg.inverses.emplace_back(l.words[0], l.words[1]);
    } else if (l.keyword == "group") {
      expect_words(l, 1);
      cfg.group = l.words[0];
    } else if (l.keyword == "flavor") {
      expect_words(l, 1);
      if (l.words[0] == "strong")
        cfg.flavor = Flavor::Strong;
      else if (l.words[0] == "weak")
        cfg.flavor = Flavor::Weak;
      else
        bad(l, "flavor expects 'strong' or 'weak'");
    } else if (l.keyword == "nmax") {
      expect_words(l, 1);
      cfg.nmax = std::stoi(l.words[0]);
    } else if (l.keyword == "coeffdeg") {
      expect_words(l, 1);
      cfg.coeffdeg = std::stoi(l.words[0]);
    } else if (l.keyword == "seed") {
      expect_words(l, 1);
      cfg.seed = std::stoull(l.words[0]);
    } else if (l.keyword == "suite") {
      expect_words(l, 1);
      cfg.suites.push_back(l.words[0]);
    } else if (l.keyword == "cap") {
      expect_words(l, 2);
      cfg.cap.max_degree = std::stoi(l.words[0]);
      cfg.cap.max_basis = std::stoul(l.words[1]);
    } else if (l.keyword == "jobs") {
      expect_words(l, 1);
      cfg.jobs = std::stoi(l.words[0]);
    } else if (l.keyword == "corrupt") {
      cfg.corrupt = l.tail;
    } else if (l.keyword == "begin" && l.words.size() == 2 && l.words[0] == "group") {
      cfg.groups.push_back(parse_group_block(l));
    } else if (l.keyword == "begin" && l.words.size() == 2 && l.words[0] == "action") {
      cfg.actions.push_back(parse_action_block(l));
    } else {
      bad(l, "unknown keyword '" + l.keyword + "'");
    }
  }
  if (!have_ring) throw FormatError("config is missing the 'ring' line");
  if (cfg.vars.empty()) throw FormatError("config is missing the 'vars' line");
  if (cfg.group.empty()) throw FormatError("config is missing the 'group' line");
  return cfg;
}

std::string serialize_config(const SuiteConfig& cfg) {
  std::ostringstream os;
  os << "cdfcfg 1\n";
  os << "ring " << render_ring(cfg.ring) << "\n";
  os << "vars";
  for (const auto& v : cfg.vars) os << " " << v;
  os << "\n";
  for (const auto& r : cfg.relations) os << "rel " << r << "\n";
  for (const auto& [a, b] : cfg.inverses) os << "inv " << a << " " << b << "\n";
  os << "group " << cfg.group << "\n";
  os << "flavor " << (cfg.flavor == Flavor::Strong ? "strong" : "weak") << "\n";
  os << "nmax " << cfg.nmax << "\n";
  os << "coeffdeg " << cfg.coeffdeg << "\n";
  os << "seed " << cfg.seed << "\n";
  for (const auto& s : cfg.suites) os << "suite " << s << "\n";
  os << "cap " << cfg.cap.max_degree << " " << cfg.cap.max_basis << "\n";
  os << "jobs " << cfg.jobs << "\n";
  if (!cfg.corrupt.empty()) os << "corrupt " << cfg.corrupt << "\n";
  for (const auto& g : cfg.groups) {
    os << "begin group " << g.name << "\n";
    os << "gen";
    for (const auto& v : g.vars) os << " " << v;
    os << "\n";
    for (const auto& r : g.relations) os << "rel " << r << "\n";
    for (const auto& [a, b] : g.inverses) os << "inv " << a << " " << b << "\n";
    for (size_t v = 0; v < g.vars.size(); ++v) {
      os << "comul " << g.vars[v] << " = " << g.comult[v] << "\n";
      os << "counit " << g.vars[v] << " = " << g.counit[v] << "\n";
      os << "antipode " << g.vars[v] << " = " << g.antipode[v] << "\n";
    }
    os << "end\n";
  }
  for (const auto& a : cfg.actions) {
    os << "begin action " << a.name << "\n";
    os << "actor " << a.actor << "\n";
    os << "acted " << a.acted << "\n";
    for (const auto& [gen, expr] : a.images) os << "act " << gen << " = " << expr << "\n";
    os << "end\n";
  }
  return os.str();
}

PresentationPtr config_base(const SuiteConfig& cfg) {
  auto free_ring = AlgebraPresentation::free_algebra(cfg.ring, cfg.vars)->ring();
  std::vector<Poly> rels;
  rels.reserve(cfg.relations.size());
  for (const auto& r : cfg.relations) rels.push_back(parse_poly(free_ring, r));
  return AlgebraPresentation::make(cfg.ring, cfg.vars, rels, cfg.inverses, cfg.cap);
}

HopfPtr build_group(const GroupDef& def, const Ring& ring, const GroebnerLimits& lim) {
  if (def.vars.empty()) throw FormatError("group '" + def.name + "' has no generators");
  auto free_ring = AlgebraPresentation::free_algebra(ring, def.vars)->ring();
  std::vector<Poly> rels;
  for (const auto& r : def.relations) rels.push_back(parse_poly(free_ring, r));
  auto A = AlgebraPresentation::make(ring, def.vars, rels, def.inverses, lim);
  auto T2 = tensor_power(A, 2);
  std::vector<Poly> comult, antipode;
  std::vector<Scalar> counit;
  for (size_t v = 0; v < def.vars.size(); ++v) {
    if (def.comult[v].empty() || def.counit[v].empty() || def.antipode[v].empty())
      throw FormatError("group '" + def.name + "' is missing structure data for '" + def.vars[v] + "'");
    comult.push_back(parse_poly(T2->ring(), def.comult[v]));
    counit.push_back(parse_scalar(ring, def.counit[v]));
    antipode.push_back(parse_poly(A->ring(), def.antipode[v]));
  }
  return HopfAlgebra::make(A, comult, counit, antipode, def.name);
}

HopfPtr resolve_group(const SuiteConfig& cfg, const std::string& name) {
  for (const auto& g : cfg.groups)
    if (g.name == name) return build_group(g, cfg.ring, cfg.cap);
  return builtin_group(name, cfg.ring);
}

CoactionPtr build_action(const ActionDef& def, const HopfPtr& actor, const HopfPtr& acted) {
  auto mixed = mixed_tensor(actor->presentation(), acted->presentation());
  const auto& names = acted->presentation()->ring()->vars();
  if (def.images.size() != names.size())
    throw FormatError("action '" + def.name + "' needs one image per acted generator");
  std::vector<Poly> images(names.size(), Poly());
  std::vector<bool> seen(names.size(), false);
  for (const auto& [gen, expr] : def.images) {
    int v = acted->presentation()->ring()->var_index(gen);
    if (v < 0 || seen[v]) throw FormatError("action '" + def.name + "': bad or repeated generator '" + gen + "'");
    seen[v] = true;
    images[v] = parse_poly(mixed->ring(), expr);
  }
  return Coaction::make(actor, acted, images, def.name);
}

}  // namespace cdf
