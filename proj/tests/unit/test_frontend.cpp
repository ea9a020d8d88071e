#include <doctest.h>

#include "support.hpp"

#include <json.hpp>

using namespace lindiff;
using namespace lindiff::testing;

namespace {

const RingSpec kXY({"x", "y"}, {"u"});
const RingSpec kN({"n"}, {"f"});

std::size_t error_position(const std::string& text, const RingSpec& ring) {
  try {
    parse_system(text, ring);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parse_system examples") {
  const auto a = parse_system("u[x+1,y] - u[x,y]", kXY);
  REQUIRE(a.size() == 1);
  CHECK(a[0].lhs.coeff(Monomial{1, 0}) == RatFun(1));
  CHECK(a[0].lhs.coeff(Monomial{0, 0}) == RatFun(-1));
  CHECK(a[0].rhs.is_zero());

  const auto b = parse_system("(n+1)*f[n+1] - f[n]", kN);
  CHECK(b[0].lhs.coeff(Monomial{1}) == RatFun::variable(0) + RatFun(1));

  const auto c = parse_system("f[n+1] = n^2; f[n+2] - f[n]\nf", kN);
  CHECK(c.size() == 3);
  CHECK(c[0].rhs == RatFun::variable(0) * RatFun::variable(0));

  // operator notation with the twisted product
  CHECK(parse_poly("S_n*n*f", kN) == parse_poly("(n+1)*f[n+1]", kN));
  CHECK(parse_poly("(S_n - 1)^2*f", kN) == parse_poly("f[n+2] - 2*f[n+1] + f[n]", kN));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_system("u[x*2,y]", kXY), ParseError);
  CHECK(error_position("u[x*2,y]", kXY) == 3);
  CHECK_THROWS_WITH_AS(parse_system("u[x,y] + w[x,y]", kXY), doctest::Contains("unknown symbol"), ParseError);
  CHECK_THROWS_WITH_AS(parse_system("u[x,y]*u[x+1,y]", kXY), doctest::Contains("nonlinear"), ParseError);
  CHECK_THROWS_WITH_AS(parse_system("x + 1", kXY), doctest::Contains("without dependent"), ParseError);
  CHECK_THROWS_AS(parse_system("u[y,x]", kXY), ParseError);
  CHECK_THROWS_AS(parse_system("u[x+1]", kXY), ParseError);
  CHECK_THROWS_AS(parse_system("u[x,y] / u[x,y]", kXY), ParseError);
  CHECK_THROWS_AS(parse_homogeneous("u[x,y] = 1", kXY), ParseError);
}

TEST_CASE("normalize_direction examples") {
  CHECK(parse_homogeneous("f[n+1] - f[n] - f[n-1]", kN)[0] == parse_poly("f[n+2] - f[n+1] - f[n]", kN));
  CHECK(parse_homogeneous("f[n+2] - f[n]", kN)[0] == parse_poly("f[n+2] - f[n]", kN));
  CHECK(parse_homogeneous("1/n*f[n-1]", kN)[0] == parse_poly("1/(n+1)*f[n]", kN));
  // shifts are normalized per axis
  CHECK(parse_homogeneous("u[x-1,y+1] - u[x,y-2]", kXY)[0] == parse_poly("u[x,y+3] - u[x+1,y]", kXY));
}

TEST_CASE("backward direction") {
  const RingSpec back({"n"}, {"f"}, {}, ShiftDirection::Backward);
  // f(n-1) - n f(n): with m = -n this is g(m+1) + m g(m)
  const auto e = parse_homogeneous("f[n-1] - n*f[n]", back);
  CHECK(e[0] == parse_poly("f[n+1] + n*f[n]", kN));
  const Ranking rk = Ranking::degrevlex(1, 1);
  CHECK(format_poly(e[0], back, rk) == "f[n-1] - n*f[n]");
}

TEST_CASE("shift2pol and pol2shift") {
  const Ranking rk = Ranking::degrevlex(2, 1);
  const DiffPoly p = parse_poly("u[x+1,y] - u[x,y]", kXY);
  const auto row = shift2pol(p, 1);
  REQUIRE(row.size() == 1);
  CHECK(format_operator(row[0], kXY, rk) == "S_x - 1");
  CHECK(pol2shift(row, {parse_poly("u", kXY)}, 2) == p);

  const DiffPoly q = parse_poly("n*f[n+1]", kN);
  const auto r2 = shift2pol(q, 1);
  CHECK(r2[0] == parse_operator("n*S_n", kN));
  CHECK(pol2shift(r2, {parse_poly("f", kN)}, 1) == q);
  CHECK(format_operator_form(parse_poly("n*f[n+1] - f[n]", kN), kN, Ranking::degrevlex(1, 1)) == "(n*S_n - 1)*f");

  // Ore product: S_n * n = (n + 1) * S_n
  CHECK(operator_product(parse_operator("S_n", kN), parse_operator("n", kN), 1) == parse_operator("(n+1)*S_n", kN));
}

TEST_CASE("serialize examples") {
  const System f = fibonacci();
  const Basis J = janet_basis(f.ring, f.F, f.rk);
  Report r = make_report(J);
  CHECK(r.elements == std::vector<std::string>{"f[n+2] - f[n+1] - f[n]"});
  for (const auto& u : residue_class_basis(J).monomials) r.masters.push_back(format_monomial(u, f.ring));
  CHECK(r.masters == std::vector<std::string>{"f[n]", "f[n+1]"});

  const auto j = nlohmann::json::parse(serialize(r, OutputFormat::Json));
  for (const char* key : {"ring", "ranking", "mode", "elements", "masters", "series", "conditions"})
    CHECK(j.contains(key));
  CHECK(j["masters"] == nlohmann::json::array({"f[n]", "f[n+1]"}));
  CHECK(j["mode"] == "janet");
  CHECK(serialize(r, OutputFormat::Json) == serialize(r, OutputFormat::Json));
}

TEST_CASE("parse and serialize round trip") {
  for (const System& s : {fibonacci(), index_coefficient(), laplace(), cross_shift(), feynman()}) {
    const Basis J = janet_basis(s.ring, s.F, s.rk);
    for (const auto& p : J.polys()) {
      const std::string text = format_poly(p, s.ring, s.rk);
      CHECK(parse_poly(text, s.ring) == p);
      CHECK(format_poly(parse_poly(text, s.ring), s.ring, s.rk) == text);
    }
  }
}

TEST_CASE("options") {
  CHECK(parse_criteria("1,2,4") == CriteriaSet{0b1011});
  CHECK(parse_criteria("none") == CriteriaSet::none());
  CHECK(parse_criteria("all") == CriteriaSet::all());
  CHECK_THROWS(parse_criteria("5"));

  const RingSpec r = parse_ring("x,y; u,ux,uy; d,m2");
  CHECK(r.independents == std::vector<std::string>{"x", "y"});
  CHECK(r.dependents == std::vector<std::string>{"u", "ux", "uy"});
  CHECK(r.parameters == std::vector<std::string>{"d", "m2"});
  CHECK_THROWS(parse_ring("x; x"));

  SessionOptions o;
  o.priority = Priority::POT;
  o.dependent_order = "ux,uy,u";
  const Ranking rk = make_ranking(r, o);
  CHECK(rk.dependent_order() == std::vector<std::size_t>{1, 2, 0});

  apply_session_json(o, R"({"mode": "janet-like", "criteria": "1,3", "ranking": "lex"})");
  CHECK(o.mode == DivisionMode::JanetLike);
  CHECK(o.criteria == CriteriaSet{0b101});
  CHECK(o.order == MonomialOrder::Lex);
}

TEST_CASE("relation patterns") {
  const RingSpec kn({"k", "n"}, {"f"});
  const RelationPattern p = parse_pattern("f[0,*]", kn);
  CHECK(p == RelationPattern{0, {0u, std::nullopt}});
  CHECK(format_pattern(p, kn) == "f[0,*]");
  const RelationSet s = parse_relations("# zeroed\nf[0,*]\n\nf[*,1]\nf[0,*]\n", kn);
  CHECK(s.list().size() == 2);
  CHECK_THROWS_AS(parse_pattern("g[0,*]", kn), ParseError);
}
