#include <doctest.h>

#include "support.hpp"

using namespace lindiff;
using namespace lindiff::testing;

namespace {

Basis basis_of(const std::string& ring, const std::string& text) {
  const System s = make_system("t", ring, text);
  return janet_basis(s.ring, s.F, s.rk);
}

// lm set {(2,0),(1,1),(0,2)}
Basis staircase() { return basis_of("x,y; u", "u[x+2,y]; u[x+1,y+1]; u[x,y+2]"); }
Basis diagonal() { return basis_of("x,y; u", "u[x+1,y+1]"); }

}  // namespace

TEST_CASE("residue_class_basis examples") {
  const auto a = residue_class_basis(staircase());
  CHECK(a.finite);
  CHECK(a.monomials == std::vector<Monomial>{Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}});

  const System f = fibonacci();
  const auto b = residue_class_basis(janet_basis(f.ring, f.F, f.rk));
  CHECK(b.finite);
  CHECK(b.monomials == std::vector<Monomial>{Monomial{0}, Monomial{1}});

  const auto c = residue_class_basis(diagonal(), 4u);
  CHECK_FALSE(c.finite);
  CHECK(c.count_in_degree(0, 2) == 1);
  for (unsigned d = 1; d < 10; ++d) CHECK(c.count_in_degree(d, 2) == 2);
  CHECK(c.monomials.size() == 9);
}

TEST_CASE("complement cones partition the standard monomials") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<ExpVec> leaders;
    std::vector<Monomial> ms;
    for (std::size_t k = 0, size = 1 + rng() % 4; k < size; ++k) {
      ExpVec e{};
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(rng() % 4);
      leaders.push_back(e);
      ms.emplace_back(e, 0);
    }
    const auto cones = complement_cones(leaders, 0, n);
    for (const auto& w : brute_standard({}, n, 1, 7)) {
      std::size_t hits = 0;
      for (const auto& c : cones) hits += c.contains(w, n);
      const bool standard = std::none_of(ms.begin(), ms.end(), [&](const Monomial& u) { return u.divides(w); });
      CHECK(hits == (standard ? 1u : 0u));
    }
  }
}

TEST_CASE("hilbert_series examples") {
  CHECK(hilbert_series(staircase()) == HilbertSeries({1, 2}, 0));
  CHECK(hilbert_series(staircase()).to_string() == "1 + 2*t");
  // 1 + 2t/(1-t) = (1 + t)/(1 - t)
  const HilbertSeries d = hilbert_series(diagonal());
  CHECK(d == HilbertSeries({1, 1}, 1));
  CHECK(d.to_string() == "(1 + t)/(1 - t)");
  CHECK(hilbert_series_of({{}}, 1) == HilbertSeries({1}, 1));
  CHECK(hilbert_series_of({{}}, 1).to_string() == "1/(1 - t)");
  // the constructor cancels common (1 - t) factors
  CHECK(HilbertSeries({1, -1}, 2) == HilbertSeries({1}, 1));
}

TEST_CASE("hilbert function and polynomial") {
  const Basis D = diagonal();
  CHECK(hilbert_function(D, 0) == 1);
  for (unsigned d = 1; d < 12; ++d) CHECK(hilbert_function(D, d) == 2);
  const auto hp = hilbert_polynomial(D);
  CHECK(hp(7) == 2);
  CHECK(hp.regularity == 1);

  const Basis S = staircase();
  CHECK(hilbert_function(S, 0) == 1);
  CHECK(hilbert_function(S, 1) == 2);
  CHECK(hilbert_function(S, 2) == 0);
  const auto hs = hilbert_polynomial(S);
  CHECK(hs(5) == 0);
  CHECK(hs.regularity == 2);

  const auto free2 = hilbert_polynomial(hilbert_series_of({{}}, 2));
  for (long d = 0; d < 10; ++d) CHECK(free2(d) == d + 1);
  CHECK(free2.regularity == 0);
}

TEST_CASE("comp_cond examples") {
  const System c = cross_shift();
  const auto r = comp_cond(c.ring, c.F, c.rk);
  REQUIRE(r.conditions.size() == 1);
  const DiffPoly expect = parse_poly("r1[x,y+1] - r1[x,y] - r2[x+1,y] + r2[x,y]", r.ring);
  CHECK((r.conditions[0] == expect || r.conditions[0] == -expect));
  CHECK(r.first_tag == 1);
  CHECK(r.ring.dependents == std::vector<std::string>{"u", "r1", "r2"});

  const System f = fibonacci();
  CHECK(comp_cond(f.ring, f.F, f.rk).conditions.empty());

  const System s = make_system("dep", "x,y; u", "u[x,y+1] - u[x,y]; u[x+1,y+1] - u[x+1,y]");
  const auto d = comp_cond(s.ring, s.F, s.rk);
  REQUIRE(d.conditions.size() == 1);
  const DiffPoly e2 = parse_poly("r2[x,y] - r1[x+1,y]", d.ring);
  CHECK((d.conditions[0] == e2 || d.conditions[0] == -e2));
}

TEST_CASE("relations") {
  const RingSpec xy({"k", "n"}, {"f"});
  RelationSet rel;
  const RelationPattern a{0, {0u, std::nullopt}};
  const RelationPattern b{0, {std::nullopt, 1u}};
  add_relation(rel, a);
  CHECK(list_relations(rel) == std::vector<RelationPattern>{a});
  add_relation(rel, a);
  CHECK(list_relations(rel).size() == 1);
  add_relation(rel, b);
  CHECK(list_relations(rel) == std::vector<RelationPattern>{a, b});
  CHECK(rel.matches(Monomial{0, 5}));
  CHECK(rel.matches(Monomial{3, 1}));
  CHECK_FALSE(rel.matches(Monomial{3, 2}));
}

TEST_CASE("reduce_with_relations") {
  const System f = fibonacci();
  const Basis J = janet_basis(f.ring, f.F, f.rk);
  RelationSet rel;
  add_relation(rel, RelationPattern{0, {0u}});
  const DiffPoly p = parse_poly("f[n+2]", f.ring);
  CHECK(reduce_with_relations(p, J, rel) == parse_poly("f[n+1]", f.ring));
  CHECK(reduce_with_relations(p, J, RelationSet{}) == inv_reduce(p, J));

  RelationSet none;
  add_relation(none, RelationPattern{0, {7u}});
  CHECK(reduce_with_relations(p, J, none) == inv_reduce(p, J));

  const auto masters = residue_class_basis(J, std::nullopt, &rel);
  CHECK(masters.monomials == std::vector<Monomial>{Monomial{1}});
}
