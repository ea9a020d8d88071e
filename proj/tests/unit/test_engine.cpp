#include <doctest.h>

#include "support.hpp"

using namespace lindiff;
using namespace lindiff::testing;

namespace {

DiffPoly P(const System& s, const char* text) { return parse_poly(text, s.ring); }

}  // namespace

TEST_CASE("inv_reduce with an index coefficient") {
  const System s = index_coefficient();
  const Basis J = janet_basis(s.ring, s.F, s.rk);
  REQUIRE(J.size() == 1);
  CHECK(inv_reduce(P(s, "f[n+2]"), J) == P(s, "1/((n+1)*(n+2))*f[n]"));
  CHECK(inv_reduce(P(s, "f[n+1]"), J) == P(s, "1/(n+1)*f[n]"));
  CHECK(inv_reduce(P(s, "f[n]"), J) == P(s, "f[n]"));
}

TEST_CASE("inv_reduce checks ring and ranking") {
  const System s = fibonacci();
  const Basis J = janet_basis(s.ring, s.F, s.rk);
  const RingSpec other({"m"}, {"f"});
  CHECK_THROWS(inv_reduce(P(s, "f[n+3]"), other, s.rk, J));
  CHECK_THROWS(inv_reduce(P(s, "f[n+3]"), s.ring, Ranking::lex(2, 1), J));
  CHECK(inv_reduce(P(s, "f[n+3]"), s.ring, s.rk, J) == P(s, "2*f[n+1] + f[n]"));
}

TEST_CASE("janet_basis examples") {
  const System c = cross_shift();
  const Basis J = janet_basis(c.ring, c.F, c.rk);
  auto input = autoreduce(c.F, c.rk);
  auto out = J.polys();
  const auto by_lm = [&](const DiffPoly& a, const DiffPoly& b) {
    return c.rk.less(a.leading_monomial(c.rk), b.leading_monomial(c.rk));
  };
  std::sort(input.begin(), input.end(), by_lm);
  std::sort(out.begin(), out.end(), by_lm);
  CHECK(out == input);
  CHECK(J.leading_monomials() == std::vector<Monomial>{Monomial{0, 1}, Monomial{1, 0}});

  const System f = fibonacci();
  const Basis F = janet_basis(f.ring, f.F, f.rk);
  CHECK(F.polys() == f.F);

  const System l = laplace();
  const Basis L = janet_basis(l.ring, l.F, l.rk);
  const DiffPoly five = P(l, "u[x+2,y] + u[x,y+2] - 2*u[x+1,y] - 2*u[x,y+1] + 2*u[x,y]");
  CHECK(inv_reduce(five, L).is_zero());
  bool present = false;
  for (const auto& e : L.elements())
    if (e.poly == five) present = true;
  CHECK(present);
}

TEST_CASE("zero ideal input") {
  const System f = fibonacci();
  CHECK_THROWS_WITH_AS(janet_basis(f.ring, {DiffPoly()}, f.rk), "zero ideal input", MathError);
  CHECK_THROWS_AS(janet_basis(f.ring, {}, f.rk), MathError);
}

TEST_CASE("basis elements are monic, minimal and tail reduced") {
  const auto suite = admitted_suite(40);
  for (const auto& c : suite.cases)
    for (const Basis* J : {&c.janet, &c.janet_like}) {
      const auto lms = J->leading_monomials();
      CHECK(std::is_sorted(lms.begin(), lms.end(),
                           [&](const Monomial& a, const Monomial& b) { return J->ranking().less(a, b); }));
      for (const auto& e : J->elements()) {
        const Term t = e.poly.leading_term(J->ranking());
        CHECK(t.coeff == RatFun(1));
        for (const auto& [u, coef] : e.poly.terms())
          if (u != t.mono) CHECK_FALSE(J->divisor(u).has_value());
      }
      CHECK(prolongations_vanish(*J));
    }
}

TEST_CASE("criteria never apply on fibonacci and when disabled") {
  const System f = fibonacci();
  CompletionStats st;
  janet_basis(f.ring, f.F, f.rk, {}, &st);
  for (auto k : st.skipped) CHECK(k == 0);

  const System c = cross_shift();
  CompletionOptions off;
  off.criteria = CriteriaSet::none();
  CompletionStats st2;
  janet_basis(c.ring, c.F, c.rk, off, &st2);
  for (auto k : st2.skipped) CHECK(k == 0);
}

TEST_CASE("autoreduce examples") {
  const System f = fibonacci();
  const DiffPoly p = P(f, "2*f[n+1] - 3*f[n]");
  CHECK(autoreduce({p, p}, f.rk) == std::vector<DiffPoly>{P(f, "f[n+1] - 3/2*f[n]")});
  CHECK(autoreduce({P(f, "f[n+1] - f[n]"), P(f, "2*f[n+1] - 2*f[n]")}, f.rk).size() == 1);

  const System c = cross_shift();
  const auto r = autoreduce({P(c, "u[x+1,y]"), P(c, "u[x+2,y] - u[x,y]")}, c.rk);
  CHECK(r == std::vector<DiffPoly>{P(c, "u[x,y]")});
  CHECK(autoreduce({DiffPoly()}, c.rk).empty());
}

TEST_CASE("normal form is idempotent and linear") {
  const auto suite = admitted_suite(30);
  std::mt19937_64 rng(17);
  for (const auto& c : suite.cases) {
    const std::size_t n = c.sys.ring.n();
    for (int k = 0; k < 5; ++k) {
      const DiffPoly p = random_combination(rng, c.sys) + DiffPoly::monomial(Monomial(ExpVec{}, 0), 1);
      const DiffPoly q = DiffPoly::monomial(Monomial(ExpVec{}, 0), random_coefficient(rng, n));
      const RatFun a = random_coefficient(rng, n), b = random_coefficient(rng, n);
      const DiffPoly rp = inv_reduce(p, c.janet), rq = inv_reduce(q, c.janet);
      CHECK(inv_reduce(rp, c.janet) == rp);
      CHECK(inv_reduce(poly_combine(a, p, b, q), c.janet) == poly_combine(a, rp, b, rq));
      CHECK(inv_reduce(random_combination(rng, c.sys), c.janet_like).is_zero());
    }
  }
}

TEST_CASE("janet-like basis elements reduce to zero modulo the janet basis") {
  const auto suite = admitted_suite(60);
  for (const auto& c : suite.cases)
    for (const auto& p : c.janet_like.polys()) CHECK(inv_reduce(p, c.janet).is_zero());
}
