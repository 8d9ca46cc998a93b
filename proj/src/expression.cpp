#include "dynorb/expression.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dynorb/error.hpp"

namespace dynorb {

namespace {

RationalExpr reduce(RationalExpr e) {
  if (e.den.is_zero()) throw Error(ErrorKind::ParseError, "division by zero");
  if (e.num.is_zero()) return {MPoly(), MPoly(1)};
  const Int g = gcd_int(e.num.content(), e.den.content());
  if (g > 1) {
    e.num = MPoly::exact_div(e.num, MPoly(g));
    e.den = MPoly::exact_div(e.den, MPoly(g));
  }
  if (!e.den.is_constant() && e.den.divides(e.num)) {
    e.num = MPoly::exact_div(e.num, e.den);
    e.den = MPoly(1);
  }
  if (e.den.terms().back().second < 0) {
    e.num = -e.num;
    e.den = -e.den;
  }
  return e;
}

RationalExpr add(const RationalExpr& a, const RationalExpr& b) {
  if (a.den == b.den) return reduce({a.num + b.num, a.den});
  return reduce({a.num * b.den + b.num * a.den, a.den * b.den});
}
RationalExpr neg(const RationalExpr& a) { return {-a.num, a.den}; }
RationalExpr mul(const RationalExpr& a, const RationalExpr& b) {
  return reduce({a.num * b.num, a.den * b.den});
}
RationalExpr div(const RationalExpr& a, const RationalExpr& b, std::size_t pos) {
  if (b.num.is_zero()) throw dynorb::ParseError(ErrorKind::ParseError, pos, "division by zero");
  return reduce({a.num * b.den, a.den * b.num});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalExpr parse() {
    RationalExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::ParseError) const {
    throw dynorb::ParseError(kind, pos_, msg);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  RationalExpr expr() {
    RationalExpr acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = add(acc, term());
      } else if (peek('-')) {
        ++pos_;
        acc = add(acc, neg(term()));
      } else {
        return acc;
      }
    }
  }

  RationalExpr term() {
    RationalExpr acc = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, unary());
      } else if (peek('/')) {
        const std::size_t at = pos_++;
        acc = div(acc, unary(), at);
      } else if (starts_atom()) {  // juxtaposition: 2x, 3(x+1)
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  RationalExpr unary() {
    if (peek('-')) {
      ++pos_;
      return neg(unary());
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalExpr power() {
    RationalExpr base = atom();
    if (!peek('^')) return base;
    ++pos_;
    const std::size_t at = pos_;
    const RationalExpr ex = unary();
    for (int v = 0; v < kNumVars; ++v)
      if (ex.num.uses(Var(v)) || ex.den.uses(Var(v)))
        throw dynorb::ParseError(ErrorKind::NotRational, at, "exponent must be an integer constant");
    if (!ex.den.is_constant() || ex.den.constant_value() != 1)
      throw dynorb::ParseError(ErrorKind::NotRational, at, "exponent must be an integer");
    const Int e = ex.num.constant_value();
    if (abs_int(e) > kMaxExponent) throw dynorb::ParseError(ErrorKind::ParseError, at, "exponent too large");
    const long k = e.get_si();
    if (k < 0) {
      if (base.num.is_zero()) throw dynorb::ParseError(ErrorKind::ParseError, at, "division by zero");
      return reduce({base.den.pow(static_cast<unsigned>(-k)), base.num.pow(static_cast<unsigned>(-k))});
    }
    return reduce({base.num.pow(static_cast<unsigned>(k)), base.den.pow(static_cast<unsigned>(k))});
  }

  RationalExpr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalExpr e = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported");
      return {MPoly(Int(std::string(text_.substr(start, pos_ - start)))), MPoly(1)};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto it = std::find(kVarNames.begin(), kVarNames.end(), c);
      const bool single = pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]));
      if (it == kVarNames.end() || !single) fail("unknown symbol");
      ++pos_;
      return {MPoly::var(Var(static_cast<int>(it - kVarNames.begin()))), MPoly(1)};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::stringstream ss{std::string(s)};
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

MPoly parse_polynomial_no_x(std::string_view text) {
  const RationalExpr e = parse_expression(text);
  if (!(e.den == MPoly(1))) throw Error(ErrorKind::InvalidInput, "expected a polynomial: " + std::string(text));
  if (e.num.uses(Var::X)) throw Error(ErrorKind::InvalidInput, "coefficient may not contain x");
  return e.num;
}

Var var_from_name(const std::string& name) {
  if (name.size() == 1) {
    const auto it = std::find(kVarNames.begin() + 1, kVarNames.end(), name[0]);
    if (it != kVarNames.end()) return Var(static_cast<int>(it - kVarNames.begin()));
  }
  throw Error(ErrorKind::InvalidInput, "unknown parameter '" + name + "'");
}

std::vector<Var> detect_params(std::initializer_list<const MPoly*> polys) {
  std::vector<Var> out;
  for (Var v : {Var::R, Var::S, Var::T, Var::F})
    for (const MPoly* p : polys)
      if (p->uses(v)) {
        out.push_back(v);
        break;
      }
  return out;
}

bool needs_parens(const MPoly& p) {
  if (p.terms().size() > 1) return true;
  const std::string s = p.to_string();
  return s.find_first_of("*^") != std::string::npos || s[0] == '-';
}

}  // namespace

int BasepointSpec::degree() const {
  int d = 0;
  for (const MPoly* p : {&num, &den})
    for (const auto& [m, c] : p->terms()) {
      int total = 0;
      for (int v = 1; v < kNumVars; ++v) total += exponent_of(m, Var(v));
      d = std::max(d, total);
    }
  return d;
}

RationalExpr parse_expression(std::string_view text) { return Parser(text).parse(); }

FamilySpec family_from_expression(const RationalExpr& e) {
  FamilySpec fam;
  fam.d = std::max(e.num.degree_in(Var::X), e.den.degree_in(Var::X));
  if (fam.d < 1) throw Error(ErrorKind::InvalidInput, "map must have degree at least 1 in x");
  fam.params = detect_params({&e.num, &e.den});
  fam.num = split_by_x(e.num, fam.d);
  fam.den = split_by_x(e.den, fam.d);
  return fam;
}

FamilySpec parse_family(std::string_view text) { return family_from_expression(parse_expression(text)); }

FamilySpec parse_map_or_preset(std::string_view text) {
  const std::string s = trim(text);
  if (s == "phi_t") return parse_family("(x-t)/(x^3+1)");
  if (s == "three_param") return parse_family("(r*s*x^3+s*x+t)/(x^2+1)");
  if (s.rfind("pell(", 0) == 0 && s.back() == ')') {
    const Int D = parse_int(s.substr(5, s.size() - 6));
    return parse_family("x^4/(x^2-(" + to_string(D) + "))^2");
  }
  return parse_family(s);
}

RationalMap to_map(const FamilySpec& family) {
  if (family.arity() != 0) throw Error(ErrorKind::InvalidInput, "expression has free parameters; specialize it first");
  std::vector<Int> num, den;
  for (const auto& c : family.num) num.push_back(c.constant_value());
  for (const auto& c : family.den) den.push_back(c.constant_value());
  return make_map(std::move(num), std::move(den));
}

BasepointSpec parse_basepoint(std::string_view text) {
  const RationalExpr e = parse_expression(text);
  if (e.num.uses(Var::X) || e.den.uses(Var::X)) throw Error(ErrorKind::InvalidInput, "basepoint may not contain x");
  return {e.num, e.den};
}

std::string format_expression(const RationalExpr& e) {
  if (e.den == MPoly(1)) return e.num.to_string();
  std::string num = e.num.to_string();
  if (e.num.terms().size() > 1) num = "(" + num + ")";
  std::string den = e.den.to_string();
  if (needs_parens(e.den)) den = "(" + den + ")";
  return num + "/" + den;
}

std::string format_family(const FamilySpec& family) {
  return format_expression({join_by_x(family.num), join_by_x(family.den)});
}

std::string format_map(const RationalMap& map) {
  std::vector<MPoly> num, den;
  for (const auto& c : map.numerator().coeffs) num.emplace_back(c);
  for (const auto& c : map.denominator().coeffs) den.emplace_back(c);
  return format_expression({join_by_x(num), join_by_x(den)});
}

std::string format_basepoint(const BasepointSpec& b) { return format_expression({b.num, b.den}); }

FamilyFile parse_family_file(std::string_view text) {
  FamilyFile out;
  bool have_d = false, have_num = false, have_den = false;
  std::vector<std::string> num_items, den_items;
  std::stringstream ss{std::string(text)};
  std::string line;
  while (std::getline(ss, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidInput, "family file: expected 'key = value': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "params") {
      out.family.params.clear();
      for (const auto& name : split_commas(value))
        if (!name.empty()) out.family.params.push_back(var_from_name(name));
    } else if (key == "d") {
      out.family.d = static_cast<int>(parse_int(value).get_si());
      have_d = true;
    } else if (key == "num") {
      num_items = split_commas(value);
      have_num = true;
    } else if (key == "den") {
      den_items = split_commas(value);
      have_den = true;
    } else if (key == "beta") {
      out.beta = parse_basepoint(value);
    } else {
      throw Error(ErrorKind::InvalidInput, "family file: unknown key '" + key + "'");
    }
  }
  if (!have_d || !have_num || !have_den) throw Error(ErrorKind::InvalidInput, "family file needs d, num and den");
  auto& fam = out.family;
  if (fam.d < 1 || num_items.size() != static_cast<std::size_t>(fam.d) + 1 || den_items.size() != num_items.size())
    throw Error(ErrorKind::InvalidInput, "family file: num and den need d + 1 coefficients each");
  for (const auto& s : num_items) fam.num.push_back(parse_polynomial_no_x(s));
  for (const auto& s : den_items) fam.den.push_back(parse_polynomial_no_x(s));
  for (const auto& polys : {&fam.num, &fam.den})
    for (const auto& p : *polys)
      for (int v = 1; v < kNumVars; ++v)
        if (p.uses(Var(v)) && std::find(fam.params.begin(), fam.params.end(), Var(v)) == fam.params.end())
          throw Error(ErrorKind::InvalidInput, std::string("family file: undeclared parameter ") + kVarNames[v]);
  return out;
}

std::string format_family_file(const FamilyFile& file) {
  std::string out = "params = ";
  for (std::size_t i = 0; i < file.family.params.size(); ++i) {
    if (i) out += ", ";
    out += kVarNames[static_cast<int>(file.family.params[i])];
  }
  out += "\nd = " + std::to_string(file.family.d) + "\n";
  auto list = [](const std::vector<MPoly>& cs) {
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + cs[i].to_string();
    return s;
  };
  out += "num = " + list(file.family.num) + "\n";
  out += "den = " + list(file.family.den) + "\n";
  if (file.beta) out += "beta = " + format_basepoint(*file.beta) + "\n";
  return out;
}

}  // namespace dynorb
