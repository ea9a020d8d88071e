#include "lindiff/frontend.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace lindiff {

using json = nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> name_list(std::string_view s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  for (auto& x : split(s, ',')) out.push_back(std::move(x));
  return out;
}

std::size_t index_in(const std::vector<std::string>& names, const std::string& x) {
  const auto it = std::find(names.begin(), names.end(), x);
  return it == names.end() ? names.size() : static_cast<std::size_t>(it - names.begin());
}

RatFun reflect_indices(RatFun c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) c = c.reflected(i);
  return c;
}

RatFun user_coeff(const RatFun& c, const RingSpec& ring) {
  return ring.direction == ShiftDirection::Backward ? reflect_indices(c, ring.n()) : c;
}

// ---------------------------------------------------------------- lexer

enum class Tok { Number, Ident, Punct, Sep, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n' || c == ';') {
      out.push_back({Tok::Sep, std::string(1, c), i++});
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()[],=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), i++});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// ---------------------------------------------------------------- values

using RawBody = std::map<RawMonomial, RatFun>;

// Either a shift operator (all monomials use dep 0; a plain coefficient is
// the operator of shift zero) or a linear expression with a constant part.
struct Value {
  bool linear = false;
  RawBody body;
  RatFun constant;
};

void body_add(RawBody& b, const RawMonomial& u, const RatFun& c) {
  if (c.is_zero()) return;
  auto it = b.find(u);
  if (it == b.end()) {
    b.emplace(u, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) b.erase(it);
}

RatFun shift_all(RatFun c, const std::vector<long>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) c = c.shifted(i, s[i]);
  return c;
}

class Parser {
 public:
  Parser(std::string_view text, const RingSpec& ring) : toks_(lex(text)), ring_(ring) {}

  std::vector<RawEquation> system() {
    std::vector<RawEquation> out;
    for (;;) {
      while (peek().kind == Tok::Sep) ++at_;
      if (peek().kind == Tok::End) break;
      out.push_back(equation());
      if (peek().kind != Tok::Sep && peek().kind != Tok::End)
        throw ParseError("expected ';' or end of input, got '" + peek().text + "'", peek().pos);
    }
    return out;
  }

  Value whole_expression() {
    while (peek().kind == Tok::Sep) ++at_;
    const std::size_t start = peek().pos;
    if (peek().kind == Tok::End) throw ParseError("empty expression", start);
    Value v = expr();
    while (peek().kind == Tok::Sep) ++at_;
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return v;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  bool accept(const char* p) {
    if (peek().kind == Tok::Punct && peek().text == p) {
      ++at_;
      return true;
    }
    return false;
  }
  void expect(const char* p) {
    if (!accept(p)) throw ParseError(std::string("expected '") + p + "'" + got(), peek().pos);
  }
  std::string got() const {
    return peek().kind == Tok::End ? ", got end of input" : ", got '" + peek().text + "'";
  }

  RawEquation equation() {
    const std::size_t start = peek().pos;
    Value v = expr();
    if (accept("=")) v = add(v, neg(expr()), start);
    if (!v.linear) {
      const bool plain = v.body.empty() || (v.body.size() == 1 && is_zero_shift(v.body.begin()->first));
      throw ParseError(plain ? "equation without dependent variables" : "shift operator without operand", start);
    }
    return RawEquation{std::move(v.body), -v.constant};
  }

  Value expr() {
    bool negate = false;
    if (accept("-")) {
      negate = true;
    } else {
      accept("+");
    }
    Value v = term();
    if (negate) v = neg(v);
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept("+")) {
        v = add(v, term(), pos);
      } else if (accept("-")) {
        v = add(v, neg(term()), pos);
      } else {
        break;
      }
    }
    return v;
  }

  Value term() {
    Value v = factor();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept("*")) {
        v = mul(v, factor(), pos);
      } else if (accept("/")) {
        const std::size_t dpos = peek().pos;
        Value d = factor();
        auto c = pure_coefficient(d);
        if (!c) throw ParseError("divisor must be a coefficient", dpos);
        if (c->is_zero()) throw ParseError("division by zero", dpos);
        v = mul(v, coefficient(c->inverse()), pos);
      } else {
        break;
      }
    }
    return v;
  }

  Value factor() {
    const std::size_t pos = peek().pos;
    Value v = primary();
    if (accept("^")) {
      const bool negative = accept("-");
      const long e = integer();
      auto c = pure_coefficient(v);
      if (negative) {
        if (!c) throw ParseError("negative power of a non-coefficient", pos);
        if (c->is_zero()) throw ParseError("division by zero", pos);
        return coefficient(c->pow(-e));
      }
      if (v.linear) throw ParseError("power of a dependent variable", pos);
      Value r = coefficient(1);
      for (long i = 0; i < e; ++i) r = mul(r, v, pos);
      return r;
    }
    return v;
  }

  long integer() {
    if (peek().kind != Tok::Number) throw ParseError("expected integer" + got(), peek().pos);
    const auto& t = peek().text;
    if (t.size() > 9) throw ParseError("integer too large", peek().pos);
    ++at_;
    return std::stol(t);
  }

  Value primary() {
    const Token t = peek();
    if (t.kind == Tok::Number) {
      ++at_;
      return coefficient(RatFun(BigRat(BigInt(t.text))));
    }
    if (accept("(")) {
      Value v = expr();
      expect(")");
      return v;
    }
    if (t.kind != Tok::Ident) throw ParseError("expected a term" + got(), t.pos);
    ++at_;
    const auto syms = ring_.symbol_names();
    if (std::size_t k = index_in(syms, t.text); k < syms.size()) return coefficient(RatFun::variable(k));
    if (std::size_t k = index_in(ring_.dependents, t.text); k < ring_.m()) {
      RawMonomial u{k, std::vector<long>(ring_.n(), 0)};
      if (accept("[")) {
        for (std::size_t i = 0; i < ring_.n(); ++i) {
          if (i > 0) expect(",");
          u.shift[i] = argument(i);
        }
        if (peek().kind == Tok::Punct && peek().text == ",")
          throw ParseError("too many arguments for '" + t.text + "'", peek().pos);
        expect("]");
      }
      Value v;
      v.linear = true;
      v.body.emplace(std::move(u), RatFun(1));
      return v;
    }
    if (t.text.rfind("S_", 0) == 0) {
      if (std::size_t i = index_in(ring_.independents, t.text.substr(2)); i < ring_.n()) {
        RawMonomial u{0, std::vector<long>(ring_.n(), 0)};
        u.shift[i] = ring_.direction == ShiftDirection::Backward ? -1 : 1;
        Value v;
        v.body.emplace(std::move(u), RatFun(1));
        return v;
      }
    }
    throw ParseError("unknown symbol '" + t.text + "'", t.pos);
  }

  long argument(std::size_t axis) {
    const Token t = peek();
    if (t.kind != Tok::Ident || t.text != ring_.independents[axis])
      throw ParseError("expected index variable '" + ring_.independents[axis] + "'" + got(), t.pos);
    ++at_;
    if (accept("+")) return integer();
    if (accept("-")) return -integer();
    return 0;
  }

  static bool is_zero_shift(const RawMonomial& u) {
    return std::all_of(u.shift.begin(), u.shift.end(), [](long s) { return s == 0; });
  }

  Value coefficient(const RatFun& c) const {
    Value v;
    body_add(v.body, RawMonomial{0, std::vector<long>(ring_.n(), 0)}, c);
    return v;
  }

  static std::optional<RatFun> pure_coefficient(const Value& v) {
    if (v.linear) return std::nullopt;
    if (v.body.empty()) return RatFun(0);
    if (v.body.size() == 1 && is_zero_shift(v.body.begin()->first)) return v.body.begin()->second;
    return std::nullopt;
  }

  static Value neg(Value v) {
    for (auto& [u, c] : v.body) c = -c;
    v.constant = -v.constant;
    return v;
  }

  Value add(Value a, const Value& b, std::size_t pos) const {
    if (a.linear != b.linear) {
      const Value& op = a.linear ? b : a;
      auto c = pure_coefficient(op);
      if (!c) throw ParseError("cannot add a shift operator to an expression", pos);
      Value lin = a.linear ? a : b;
      lin.constant += *c;
      return lin;
    }
    for (const auto& [u, c] : b.body) body_add(a.body, u, c);
    a.constant += b.constant;
    return a;
  }

  Value mul(const Value& a, const Value& b, std::size_t pos) const {
    if (a.linear && b.linear) throw ParseError("nonlinear dependent product", pos);
    if (a.linear) {
      auto c = pure_coefficient(b);
      if (!c) throw ParseError("shift operator to the right of an expression", pos);
      Value r;
      r.linear = true;
      for (const auto& [u, x] : a.body) body_add(r.body, u, x * *c);
      r.constant = a.constant * *c;
      return r;
    }
    // a is an operator: sum_alpha a_alpha * sigma^alpha(b)
    Value r;
    r.linear = b.linear;
    for (const auto& [alpha, ca] : a.body) {
      for (const auto& [u, cb] : b.body) {
        RawMonomial w = u;
        for (std::size_t i = 0; i < w.shift.size(); ++i) w.shift[i] += alpha.shift[i];
        body_add(r.body, w, ca * shift_all(cb, alpha.shift));
      }
      if (b.linear && !b.constant.is_zero()) r.constant += ca * shift_all(b.constant, alpha.shift);
    }
    return r;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  const RingSpec& ring_;
};

bool is_negative_sign(const RatFun& c) { return c.leading_sign() < 0; }

// Numerator over a constant denominator folds into one polynomial.
std::optional<CoefPoly> as_polynomial(const RatFun& c) {
  if (c.is_polynomial()) return c.num();
  if (c.den().is_constant()) return c.num().scaled(1 / c.den().constant_term());
  return std::nullopt;
}

// Coefficient magnitude text to prepend to a factor ("" for one).
std::string coefficient_prefix(const RatFun& mag, const std::vector<std::string>& names) {
  if (mag.is_one()) return "";
  if (auto p = as_polynomial(mag)) {
    const auto s = p->to_string(names);
    return p->size() == 1 ? s + "*" : "(" + s + ")*";
  }
  const auto num = mag.num().to_string(names);
  return (mag.num().size() == 1 ? num : "(" + num + ")") + "/(" + mag.den().to_string(names) + ")*";
}

// Standalone coefficient magnitude text.
std::string coefficient_alone(const RatFun& mag, const std::vector<std::string>& names, bool wrap) {
  if (auto p = as_polynomial(mag)) {
    const auto s = p->to_string(names);
    return wrap && p->size() > 1 ? "(" + s + ")" : s;
  }
  return "(" + mag.num().to_string(names) + ")/(" + mag.den().to_string(names) + ")";
}

void append_signed(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += (negative ? " - " : " + ") + body;
  }
}

std::string shift_text(const ExpVec& mu, const RingSpec& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.n(); ++i) {
    if (mu[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "S_" + ring.independents[i];
    if (mu[i] > 1) s += "^" + std::to_string(mu[i]);
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------- options

RingSpec parse_ring(std::string_view text, ShiftDirection dir) {
  const auto parts = split(text, ';');
  if (parts.size() < 2 || parts.size() > 3)
    throw std::invalid_argument("ring must look like \"x,y; u,v; p,q\"");
  return RingSpec(name_list(parts[0]), name_list(parts[1]),
                  parts.size() == 3 ? name_list(parts[2]) : std::vector<std::string>{}, dir);
}

Ranking make_ranking(const RingSpec& ring, const SessionOptions& opts) {
  std::vector<std::vector<std::size_t>> blocks;
  if (!trim(opts.blocks).empty()) {
    for (const auto& b : split(opts.blocks, '|')) {
      std::vector<std::size_t> block;
      for (const auto& x : name_list(b)) {
        const auto i = index_in(ring.independents, x);
        if (i == ring.n()) throw std::invalid_argument("unknown index variable '" + x + "' in blocks");
        block.push_back(i);
      }
      blocks.push_back(std::move(block));
    }
  }
  std::vector<std::size_t> order;
  for (const auto& y : name_list(opts.dependent_order)) {
    const auto k = index_in(ring.dependents, y);
    if (k == ring.m()) throw std::invalid_argument("unknown dependent '" + y + "' in dependent order");
    order.push_back(k);
  }
  return Ranking(ring.n(), ring.m(), opts.order, opts.priority, std::move(blocks), std::move(order));
}

CriteriaSet parse_criteria(std::string_view text) {
  const auto t = trim(text);
  if (t.empty() || t == "none") return CriteriaSet::none();
  if (t == "all") return CriteriaSet::all();
  CriteriaSet s;
  for (const auto& x : split(t, ',')) {
    std::string v = x;
    if (!v.empty() && (v[0] == 'C' || v[0] == 'c')) v = v.substr(1);
    if (v.size() != 1 || v[0] < '1' || v[0] > '4') throw std::invalid_argument("unknown criterion '" + x + "'");
    s.enable(static_cast<Criterion>(v[0] - '1'));
  }
  return s;
}

void apply_session_json(SessionOptions& opts, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("session file: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("session file must hold a JSON object");
  auto str = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    if (j[key].is_string()) return j[key].get<std::string>();
    if (j[key].is_array()) {
      std::string s;
      for (const auto& x : j[key]) s += (s.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      return s;
    }
    return j[key].dump();
  };
  if (auto v = str("mode")) {
    if (*v == "janet") opts.mode = DivisionMode::Janet;
    else if (*v == "janet-like") opts.mode = DivisionMode::JanetLike;
    else throw std::invalid_argument("unknown mode '" + *v + "'");
  }
  if (auto v = str("criteria")) opts.criteria = parse_criteria(*v);
  if (auto v = str("direction")) {
    if (*v == "forward") opts.direction = ShiftDirection::Forward;
    else if (*v == "backward") opts.direction = ShiftDirection::Backward;
    else throw std::invalid_argument("unknown direction '" + *v + "'");
  }
  if (auto v = str("ranking")) {
    if (*v == "degrevlex") opts.order = MonomialOrder::DegRevLex;
    else if (*v == "lex") opts.order = MonomialOrder::Lex;
    else throw std::invalid_argument("unknown ranking '" + *v + "'");
  }
  if (auto v = str("priority")) {
    if (*v == "top") opts.priority = Priority::TOP;
    else if (*v == "pot") opts.priority = Priority::POT;
    else throw std::invalid_argument("unknown priority '" + *v + "'");
  }
  if (auto v = str("blocks")) opts.blocks = *v;
  if (auto v = str("dependent_order")) opts.dependent_order = *v;
  if (auto v = str("format")) {
    if (*v == "text") opts.format = OutputFormat::Text;
    else if (*v == "json") opts.format = OutputFormat::Json;
    else throw std::invalid_argument("unknown format '" + *v + "'");
  }
}

// ---------------------------------------------------------------- parsing

std::vector<RawEquation> parse_raw_system(std::string_view text, const RingSpec& ring) {
  return Parser(text, ring).system();
}

std::vector<Equation> normalize_direction(const std::vector<RawEquation>& raw, const RingSpec& ring) {
  const std::size_t n = ring.n();
  const bool backward = ring.direction == ShiftDirection::Backward;
  std::vector<Equation> out;
  for (const auto& eq : raw) {
    std::vector<long> low(n, 0);
    for (const auto& [u, c] : eq.terms)
      for (std::size_t i = 0; i < n; ++i) low[i] = std::min(low[i], backward ? -u.shift[i] : u.shift[i]);
    std::vector<long> lift(n);
    for (std::size_t i = 0; i < n; ++i) lift[i] = -low[i];
    Equation e;
    for (const auto& [u, c] : eq.terms) {
      ExpVec mu{};
      for (std::size_t i = 0; i < n; ++i) {
        const long s = (backward ? -u.shift[i] : u.shift[i]) + lift[i];
        if (s > std::numeric_limits<std::uint16_t>::max()) throw MathError("shift too large");
        mu[i] = static_cast<std::uint16_t>(s);
      }
      RatFun x = backward ? reflect_indices(c, n) : c;
      e.lhs.add_term(Monomial(mu, u.dep), shift_all(x, lift));
    }
    RatFun r = backward ? reflect_indices(eq.rhs, n) : eq.rhs;
    e.rhs = shift_all(r, lift);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Equation> parse_system(std::string_view text, const RingSpec& ring) {
  return normalize_direction(parse_raw_system(text, ring), ring);
}

std::vector<DiffPoly> parse_homogeneous(std::string_view text, const RingSpec& ring) {
  std::vector<DiffPoly> out;
  for (auto& e : parse_system(text, ring)) {
    if (!e.rhs.is_zero()) throw ParseError("affine equation where a homogeneous one is required", 0);
    out.push_back(std::move(e.lhs));
  }
  return out;
}

DiffPoly parse_poly(std::string_view text, const RingSpec& ring) {
  Value v = Parser(text, ring).whole_expression();
  if (!v.linear) throw ParseError("expression without dependent variables", 0);
  if (!v.constant.is_zero()) throw ParseError("constant term in a linear expression", 0);
  const bool backward = ring.direction == ShiftDirection::Backward;
  DiffPoly p;
  for (const auto& [u, c] : v.body) {
    ExpVec mu{};
    for (std::size_t i = 0; i < ring.n(); ++i) {
      const long s = backward ? -u.shift[i] : u.shift[i];
      if (s < 0) throw ParseError("shift against the ring direction in '" + std::string(text) + "'", 0);
      mu[i] = static_cast<std::uint16_t>(s);
    }
    p.add_term(Monomial(mu, u.dep), backward ? reflect_indices(c, ring.n()) : c);
  }
  return p;
}

// ---------------------------------------------------------------- operators

std::vector<ShiftOperator> shift2pol(const DiffPoly& p, std::size_t m) {
  std::vector<ShiftOperator> row(m);
  for (const auto& [u, c] : p.terms()) {
    if (u.dep >= m) throw std::invalid_argument("dependent index out of range");
    row[u.dep].add_term(Monomial(u.exps, 0), c);
  }
  return row;
}

DiffPoly pol2shift(const std::vector<ShiftOperator>& row, const std::vector<DiffPoly>& targets, std::size_t n) {
  if (row.size() != targets.size()) throw std::invalid_argument("one target per dependent is required");
  DiffPoly out;
  for (std::size_t k = 0; k < row.size(); ++k)
    for (const auto& [alpha, c] : row[k].terms()) out += targets[k].prolonged(alpha.exps, n).scaled(c);
  return out;
}

ShiftOperator operator_product(const ShiftOperator& a, const ShiftOperator& b, std::size_t n) {
  return pol2shift({a}, {b}, n);
}

ShiftOperator parse_operator(std::string_view text, const RingSpec& ring) {
  Value v = Parser(text, ring).whole_expression();
  if (v.linear) throw ParseError("operator expected, found a dependent variable", 0);
  const bool backward = ring.direction == ShiftDirection::Backward;
  ShiftOperator op;
  for (const auto& [u, c] : v.body) {
    ExpVec mu{};
    for (std::size_t i = 0; i < ring.n(); ++i) mu[i] = static_cast<std::uint16_t>(backward ? -u.shift[i] : u.shift[i]);
    op.add_term(Monomial(mu, 0), backward ? reflect_indices(c, ring.n()) : c);
  }
  return op;
}

// ---------------------------------------------------------------- output

std::string format_monomial(const Monomial& u, const RingSpec& ring) {
  std::string s = ring.dependents.at(u.dep) + "[";
  const bool backward = ring.direction == ShiftDirection::Backward;
  for (std::size_t i = 0; i < ring.n(); ++i) {
    if (i > 0) s += ",";
    s += ring.independents[i];
    if (u.exps[i] != 0) s += (backward ? "-" : "+") + std::to_string(u.exps[i]);
  }
  return s + "]";
}

std::string format_coefficient(const RatFun& c, const RingSpec& ring) {
  return user_coeff(c, ring).to_string(ring.symbol_names());
}

std::string format_poly(const DiffPoly& p, const RingSpec& ring, const Ranking& rk) {
  if (p.is_zero()) return "0";
  const auto names = ring.symbol_names();
  std::string out;
  for (const auto& t : p.sorted_terms(rk)) {
    RatFun c = user_coeff(t.coeff, ring);
    const bool negative = is_negative_sign(c);
    if (negative) c = -c;
    append_signed(out, negative, coefficient_prefix(c, names) + format_monomial(t.mono, ring));
  }
  return out;
}

std::string format_equation(const Equation& e, const RingSpec& ring, const Ranking& rk) {
  std::string s = format_poly(e.lhs, ring, rk);
  if (!e.rhs.is_zero()) s += " = " + coefficient_alone(user_coeff(e.rhs, ring), ring.symbol_names(), false);
  return s;
}

std::string format_operator(const ShiftOperator& op, const RingSpec& ring, const Ranking& rk) {
  if (op.is_zero()) return "0";
  const auto names = ring.symbol_names();
  std::string out;
  for (const auto& t : op.sorted_terms(rk)) {
    RatFun c = user_coeff(t.coeff, ring);
    const bool negative = is_negative_sign(c);
    if (negative) c = -c;
    const auto s = shift_text(t.mono.exps, ring);
    append_signed(out, negative, s.empty() ? coefficient_alone(c, names, op.size() > 1) : coefficient_prefix(c, names) + s);
  }
  return out;
}

std::string format_operator_form(const DiffPoly& p, const RingSpec& ring, const Ranking& rk) {
  if (p.is_zero()) return "0";
  const auto row = shift2pol(p, ring.m());
  // dependents in order of their highest-ranked term
  std::vector<std::size_t> deps;
  for (const auto& t : p.sorted_terms(rk))
    if (std::find(deps.begin(), deps.end(), t.mono.dep) == deps.end()) deps.push_back(t.mono.dep);
  const auto names = ring.symbol_names();
  const Ranking single(ring.n(), 1, rk.order(), rk.priority(), rk.blocks());
  std::string out;
  for (const auto k : deps) {
    const auto& op = row[k];
    const std::string& y = ring.dependents[k];
    if (op.size() == 1) {
      const auto& [mu, c0] = *op.terms().begin();
      RatFun c = user_coeff(c0, ring);
      const bool negative = is_negative_sign(c);
      if (negative) c = -c;
      const auto s = shift_text(mu.exps, ring);
      append_signed(out, negative, coefficient_prefix(c, names) + (s.empty() ? "" : s + "*") + y);
    } else {
      append_signed(out, false, "(" + format_operator(op, ring, single) + ")*" + y);
    }
  }
  return out;
}

std::string format_pattern(const RelationPattern& p, const RingSpec& ring) {
  std::string s = ring.dependents.at(p.dep) + "[";
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    if (i > 0) s += ",";
    if (!p.entries[i]) {
      s += "*";
    } else {
      const long v = static_cast<long>(*p.entries[i]);
      s += std::to_string(ring.direction == ShiftDirection::Backward ? -v : v);
    }
  }
  return s + "]";
}

RelationPattern parse_pattern(std::string_view text, const RingSpec& ring) {
  const auto t = trim(text);
  const auto open = t.find('[');
  if (open == std::string::npos || t.back() != ']') throw ParseError("relation must look like f[0,*]", 0);
  RelationPattern p;
  const auto name = trim(std::string_view(t).substr(0, open));
  p.dep = index_in(ring.dependents, name);
  if (p.dep == ring.m()) throw ParseError("unknown dependent '" + name + "'", 0);
  const auto inner = std::string_view(t).substr(open + 1, t.size() - open - 2);
  const auto entries = split(inner, ',');
  if (entries.size() != ring.n())
    throw ParseError("relation needs " + std::to_string(ring.n()) + " entries", open + 1);
  const bool backward = ring.direction == ShiftDirection::Backward;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e == "*") {
      p.entries.push_back(std::nullopt);
      continue;
    }
    long v = 0;
    std::string rest = e;
    if (rest.rfind(ring.independents[i], 0) == 0) {
      rest = trim(std::string_view(rest).substr(ring.independents[i].size()));
      if (!rest.empty()) {
        const char sign = rest[0];
        rest = trim(std::string_view(rest).substr(1));
        if ((sign != '+' && sign != '-') || rest.empty()) throw ParseError("bad relation entry '" + e + "'", open + 1);
        v = sign == '-' ? -1 : 1;
      }
    }
    if (!rest.empty()) {
      long mag = 0;
      std::size_t k = 0;
      const bool neg = rest[0] == '-';
      if (neg) k = 1;
      if (k == rest.size()) throw ParseError("bad relation entry '" + e + "'", open + 1);
      for (; k < rest.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(rest[k])) || mag > 100000)
          throw ParseError("bad relation entry '" + e + "'", open + 1);
        mag = mag * 10 + (rest[k] - '0');
      }
      v = (v == 0 ? 1 : v) * (neg ? -mag : mag);
    }
    if (backward) v = -v;
    if (v < 0) throw ParseError("relation entry '" + e + "' lies against the shift direction", open + 1);
    p.entries.push_back(static_cast<unsigned>(v));
  }
  return p;
}

RelationSet parse_relations(std::string_view text, const RingSpec& ring) {
  RelationSet set;
  for (const auto& line : split(text, '\n')) {
    if (line.empty() || line[0] == '#') continue;
    set.add(parse_pattern(line, ring));
  }
  return set;
}

std::string ranking_name(const Ranking& rk) {
  return std::string(rk.order() == MonomialOrder::DegRevLex ? "degrevlex" : "lex") +
         (rk.priority() == Priority::TOP ? "/top" : "/pot");
}

Report make_report(const Basis& J) {
  Report r;
  r.ring = &J.ring();
  r.ranking = &J.ranking();
  r.mode = J.mode();
  for (const auto& e : J.elements()) r.elements.push_back(format_poly(e.poly, J.ring(), J.ranking()));
  return r;
}

std::string serialize(const Report& r, OutputFormat format) {
  if (format == OutputFormat::Text) {
    std::string out;
    auto line = [&](const std::string& s) { out += s + "\n"; };
    for (const auto& e : r.elements) line(e);
    if (r.finite) line(std::string("finite: ") + (*r.finite ? "true" : "false"));
    if (!r.masters.empty() || r.finite) {
      std::string s;
      for (const auto& m : r.masters) s += (s.empty() ? "" : ", ") + m;
      line("masters: " + s);
    }
    if (!r.series.empty()) line("series: " + r.series);
    for (const auto& c : r.conditions) line(c);
    for (const auto& x : r.reduced) line(x);
    for (const auto& [k, v] : r.extras) {
      const json j = json::parse(v);
      line(k + ": " + (j.is_string() ? j.get<std::string>() : j.dump()));
    }
    return out;
  }
  json j;
  if (r.ring) {
    j["ring"] = {{"independents", r.ring->independents},
                 {"dependents", r.ring->dependents},
                 {"parameters", r.ring->parameters},
                 {"direction", r.ring->direction == ShiftDirection::Forward ? "forward" : "backward"}};
  } else {
    j["ring"] = nullptr;
  }
  if (r.ranking && r.ring) {
    json blocks = json::array();
    for (const auto& b : r.ranking->blocks()) {
      json names = json::array();
      for (auto i : b) names.push_back(r.ring->independents.at(i));
      blocks.push_back(names);
    }
    json deps = json::array();
    for (auto k : r.ranking->dependent_order()) deps.push_back(k < r.ring->m() ? r.ring->dependents[k] : "");
    j["ranking"] = {{"order", r.ranking->order() == MonomialOrder::DegRevLex ? "degrevlex" : "lex"},
                    {"priority", r.ranking->priority() == Priority::TOP ? "top" : "pot"},
                    {"blocks", blocks},
                    {"dependent_order", deps}};
  } else {
    j["ranking"] = nullptr;
  }
  j["mode"] = r.mode == DivisionMode::Janet ? "janet" : "janet-like";
  j["elements"] = r.elements;
  j["masters"] = r.masters;
  j["series"] = r.series;
  j["conditions"] = r.conditions;
  if (r.finite) j["finite"] = *r.finite;
  if (!r.reduced.empty()) j["reduced"] = r.reduced;
  for (const auto& [k, v] : r.extras) j[k] = json::parse(v);
  return j.dump(2) + "\n";
}

}  // namespace lindiff
