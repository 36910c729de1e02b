#include "cdf/eval.hpp"

#include <cctype>
#include <sstream>
#include <variant>

namespace cdf {

namespace {

struct Scan {
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
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    return text.substr(start, pos - start);
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw FormatError("expected a number in '" + text + "'");
    return std::stol(text.substr(start, pos - start));
  }
  // the parenthesized stretch starting at pos (which holds '('), exclusive
  std::string paren_group() {
    size_t start = ++pos;
    int depth = 1;
    while (pos < text.size() && depth) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    if (depth) throw FormatError("missing ')' in '" + text + "'");
    return text.substr(start, pos - 1 - start);
  }
};

// Sum of `coeff dv1^dv2^...` terms; zero-coefficient terms put no
// constraint on the degree, so "0" parses at any hinted degree.
ClassicalForm parse_form_expr(const PresentationPtr& B, const std::string& text, int degree_hint) {
  const PolyRingPtr& R = B->ring();
  Scan lx{text};
  if (lx.done()) throw FormatError("missing form expression");
  int deg = -1;
  ClassicalForm acc;
  for (;;) {
    int sign = lx.eat('-') ? -1 : (lx.eat('+'), 1);
    Poly coeff = Poly::constant(R, sign);
    std::vector<int> dvars;
    bool factor = false;
    for (;;) {
      char c = lx.peek();
      if (c == '(') {
        coeff = coeff * parse_poly(R, lx.paren_group());
        factor = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        long num = lx.integer();
        Scalar s = lx.eat('/') ? Scalar::fraction(R->base(), num, lx.integer()) : Scalar(R->base(), num);
        coeff = coeff * Poly::constant(R, s);
        factor = true;
      } else if (c == '*' || c == '^') {
        ++lx.pos;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string n = lx.name();
        if (n == "d") {
          std::string v = lx.name();
          if (R->var_index(v) < 0) throw FormatError("unknown variable '" + v + "' after d in '" + text + "'");
          dvars.push_back(R->var_index(v));
        } else if (n.size() > 1 && n[0] == 'd' && R->var_index(n.substr(1)) >= 0) {
          dvars.push_back(R->var_index(n.substr(1)));
        } else if (R->var_index(n) >= 0) {
          coeff = coeff * Poly::variable(R, R->var_index(n));
        } else {
          throw FormatError("unknown name '" + n + "' in form expression '" + text + "'");
        }
        factor = true;
      } else {
        break;
      }
    }
    if (!factor) throw FormatError("empty term in form expression '" + text + "'");
    if (!B->reduce(coeff).is_zero()) {
      int termdeg = static_cast<int>(dvars.size());
      if (deg == -1) {
        deg = termdeg;
        acc = ClassicalForm::zero(B, deg);
      } else if (termdeg != deg) {
        throw FormatError("mixed degrees in form expression '" + text + "'");
      }
      acc = acc + ClassicalForm::term(B, coeff, dvars);
    }
    if (lx.done()) break;
    if (lx.peek() != '+' && lx.peek() != '-')
      throw FormatError("unexpected character '" + std::string(1, lx.peek()) + "' in '" + text + "'");
  }
  if (deg == -1) return ClassicalForm::zero(B, degree_hint >= 0 ? degree_hint : 0);
  if (degree_hint >= 0 && deg != degree_hint)
    throw FormatError("form expression '" + text + "' has degree " + std::to_string(deg) + ", expected " +
                      std::to_string(degree_hint));
  return acc;
}

using Value = std::variant<ScalarCombForm, GroupForm, ClassicalRep, ClassicalForm>;

std::string render(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

struct Evaluator {
  SuiteConfig shape;  // ring/vars/rel/inv accumulate here until first use
  bool have_ring = false;
  bool have_vars = false;
  PresentationPtr B;
  SimplexFamilyPtr fam;
  HopfPtr group;
  std::map<std::string, ClassicalRep> forms;
  std::map<std::string, GroupPoint<QuotAlgebra>> points;
  std::map<std::string, SimplexFamilyPtr> group_fams;  // mc lives over the group's own ring

  const PresentationPtr& base() {
    if (!B) {
      if (!have_ring) throw FormatError("missing 'ring' line");
      if (!have_vars) throw FormatError("missing 'vars' line");
      B = config_base(shape);
      fam = group_form_family(B);
    }
    return B;
  }
  const HopfPtr& need_group() {
    if (!group) throw FormatError("no 'group' line before the first form or point");
    return group;
  }
  const SimplexFamilyPtr& family_of(const HopfPtr& G) {
    auto [it, fresh] = group_fams.try_emplace(G->name());
    if (fresh) it->second = group_form_family(G->presentation());
    return it->second;
  }

  GroupForm as_group(const Value& v) {
    if (const auto* g = std::get_if<GroupForm>(&v)) return *g;
    if (const auto* r = std::get_if<ClassicalRep>(&v)) return from_classical(*r, fam);
    throw FormatError("a group-valued operand is required");
  }
  Value as_classical(const Value& v) {
    if (const auto* g = std::get_if<GroupForm>(&v)) return to_classical(*g);
    if (const auto* s = std::get_if<ScalarCombForm>(&v)) return nu_inverse_strong(*s);
    return v;
  }
  const GroupPoint<QuotAlgebra>& point_arg(Scan& lx) {
    std::string n = lx.name();
    auto it = points.find(n);
    if (it == points.end()) throw LookupError("undefined point '" + n + "'");
    return it->second;
  }
  const ClassicalRep& form_rep(const std::string& n) {
    auto it = forms.find(n);
    if (it == forms.end()) throw LookupError("undefined form '" + n + "'");
    return it->second;
  }

  Value expr(Scan& lx) {
    std::string head = lx.name();
    if (head.empty()) throw FormatError("expected an expression in '" + lx.text + "'");
    if (head == "nu") {
      ClassicalForm w = parse_form_expr(base(), lx.text.substr(lx.pos), -1);
      lx.pos = lx.text.size();
      return nu(w, fam);
    }
    if (head == "classical") return as_classical(expr(lx));
    if (head == "mc") {
      bool par = lx.eat('(');
      HopfPtr G = builtin_group(lx.name(), shape.ring);
      if (par && !lx.eat(')')) throw FormatError("missing ')' after mc in '" + lx.text + "'");
      return mc_form(G, family_of(G));
    }
    if (head == "delta0") return delta0(point_arg(lx), fam);
    if (head == "delta1") return delta1(as_group(expr(lx)));
    if (head == "delta2" || head == "delta3") {
      AutForm chi = i_star(from_classical(form_rep(lx.name()), fam));
      GroupForm w = as_group(expr(lx));
      return head == "delta2" ? delta2(chi, w) : delta3(chi, w);
    }
    if (head == "bracket") {
      GroupForm f = as_group(expr(lx));
      return bracket(f, as_group(expr(lx)));
    }
    if (head == "product") {
      GroupForm f = as_group(expr(lx));
      return gf_product(f, as_group(expr(lx)));
    }
    if (head == "inverse") return gf_inverse(as_group(expr(lx)));
    if (head == "square") return square(as_group(expr(lx)));
    if (head == "adjoint") {
      const auto& g = point_arg(lx);
      return adjoint(g, as_group(expr(lx)));
    }
    if (points.count(head)) throw FormatError("'" + head + "' is a point; only delta0/adjoint take points");
    return from_classical(form_rep(head), fam);
  }
};

}  // namespace

std::string run_eval(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  Evaluator ev;
  bool have_header = false;
  std::ostringstream out;
  auto bad = [&](const std::string& what) -> void {
    throw FormatError(what + " (line " + std::to_string(lineno) + ")");
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string tail = raw.substr(std::min(raw.size(), raw.find(kw) + kw.size()));
    if (auto a = tail.find_first_not_of(" \t"); a != std::string::npos)
      tail = tail.substr(a);
    else
      tail.clear();
    while (!tail.empty() && std::isspace(static_cast<unsigned char>(tail.back()))) tail.pop_back();

    if (!have_header) {
      if (kw != "cdfexpr" || tail != "1") throw FormatError("missing 'cdfexpr 1' header");
      have_header = true;
      continue;
    }
    if (kw == "ring" || kw == "vars" || kw == "rel" || kw == "inv") {
      if (ev.B) bad("the base algebra is already in use");
      if (kw == "ring") {
        if (tail == "Q")
          ev.shape.ring = Ring::rationals();
        else if (tail.rfind("Fp ", 0) == 0)
          ev.shape.ring = Ring::prime_field(std::stol(tail.substr(3)));
        else if (tail.rfind("Zmod ", 0) == 0)
          ev.shape.ring = Ring::integers_mod(std::stol(tail.substr(5)));
        else
          bad("ring expects 'Q', 'Fp <p>', or 'Zmod <m>'");
        ev.have_ring = true;
      } else if (kw == "vars") {
        ev.shape.vars.clear();
        std::string v;
        while (ls >> v) ev.shape.vars.push_back(v);
        if (ev.shape.vars.empty()) bad("vars expects at least one name");
        ev.have_vars = true;
      } else if (kw == "rel") {
        ev.shape.relations.push_back(tail);
      } else {
        std::string g, gbar, extra;
        std::istringstream ws(tail);
        if (!(ws >> g >> gbar) || (ws >> extra)) bad("inv expects two generator names");
        ev.shape.inverses.emplace_back(g, gbar);
      }
      continue;
    }
    if (kw == "group") {
      ev.group = builtin_group(tail, ev.shape.ring);
    } else if (kw == "form") {
      // form NAME degree gen = expression
      auto eq = tail.find('=');
      if (eq == std::string::npos) bad("form expects 'NAME degree generator = expression'");
      std::istringstream head(tail.substr(0, eq));
      std::string name, gen, extra;
      int degree = 0;
      if (!(head >> name >> degree >> gen) || (head >> extra))
        bad("form expects 'NAME degree generator = expression'");
      const HopfPtr& G = ev.need_group();
      int v = G->presentation()->ring()->var_index(gen);
      if (v < 0) throw LookupError("'" + gen + "' is not a generator of " + G->name());
      if (!G->presentation()->is_primary(v)) bad("'" + gen + "' is an inverse partner, not a primary generator");
      ClassicalForm w = parse_form_expr(ev.base(), tail.substr(eq + 1), degree);
      auto it = ev.forms.find(name);
      if (it == ev.forms.end()) {
        ev.forms.emplace(name, ClassicalRep(G, ev.base(), degree, {{v, w}}));
      } else {
        if (it->second.group() != G || it->second.degree() != degree)
          bad("form '" + name + "' is already defined with a different group or degree");
        it->second = it->second.with(v, w);
      }
    } else if (kw == "point") {
      auto eq = tail.find('=');
      if (eq == std::string::npos) bad("point expects 'NAME = poly, poly, ...'");
      std::istringstream head(tail.substr(0, eq));
      std::string name, extra;
      if (!(head >> name) || (head >> extra)) bad("point expects a single name before '='");
      const HopfPtr& G = ev.need_group();
      std::vector<Poly> images;
      std::string piece;
      std::istringstream coords(tail.substr(eq + 1));
      while (std::getline(coords, piece, ',')) images.push_back(parse_poly(ev.base()->ring(), piece));
      ev.points.insert_or_assign(name, make_point(G, QuotAlgebra{ev.base()}, std::move(images)));
    } else if (kw == "eval") {
      Scan lx{tail};
      Value v = ev.expr(lx);
      if (!lx.done()) throw FormatError("trailing input in expression '" + tail + "'");
      out << render(v) << "\n";
    } else {
      bad("unknown keyword '" + kw + "'");
    }
  }
  if (!have_header) throw FormatError("missing 'cdfexpr 1' header");
  return out.str();
}

}  // namespace cdf
