#include "support.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

namespace lindiff::testing {

System make_system(std::string name, const std::string& ring, const std::string& text, SessionOptions opts) {
  System s;
  s.name = std::move(name);
  s.ring = parse_ring(ring, opts.direction);
  s.rk = make_ranking(s.ring, opts);
  s.F = parse_homogeneous(text, s.ring);
  return s;
}

System fibonacci() { return make_system("fibonacci", "n; f", "f[n+2] - f[n+1] - f[n]"); }

System index_coefficient() { return make_system("index", "n; f", "f[n+1] - 1/(n+1)*f[n]"); }

System laplace() {
  SessionOptions o;
  o.priority = Priority::POT;
  o.dependent_order = "ux,uy,u";
  return make_system("laplace", "x,y; u,ux,uy",
                     "ux[x,y] - u[x+1,y] + u[x,y];"
                     "uy[x,y] - u[x,y+1] + u[x,y];"
                     "ux[x+1,y] - ux[x,y] + uy[x,y+1] - uy[x,y]",
                     o);
}

System cross_shift() { return make_system("cross", "x,y; u", "u[x+1,y] - u[x,y]; u[x,y+1] - u[x,y]"); }

std::string feynman_text() {
  return "(d - 2*k - n)*f[k,n] - 2*k*m2*f[k+1,n] - n*f[k-1,n+1] - n*(m2 - q2)*f[k,n+1];"
         "(d - k - 2*n)*f[k,n] - k*(m2 - q2)*f[k+1,n] - k*f[k+1,n-1]";
}

System feynman() { return make_system("feynman", "k,n; f; d,m2,q2", feynman_text()); }

// ---------------------------------------------------------------- random

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

long nonzero(std::mt19937_64& rng, long mag) {
  long v = 0;
  while (v == 0) v = uniform(rng, -mag, mag);
  return v;
}

ExpVec random_exps(std::mt19937_64& rng, std::size_t n, unsigned max_degree) {
  ExpVec e{};
  unsigned left = static_cast<unsigned>(uniform(rng, 0, max_degree));
  std::vector<std::size_t> axes(n);
  std::iota(axes.begin(), axes.end(), 0);
  std::shuffle(axes.begin(), axes.end(), rng);
  for (std::size_t k = 0; k < n; ++k) {
    const unsigned take = k + 1 == n ? left : static_cast<unsigned>(uniform(rng, 0, left));
    e[axes[k]] = static_cast<std::uint16_t>(take);
    left -= take;
  }
  return e;
}

}  // namespace

RatFun random_coefficient(std::mt19937_64& rng, std::size_t n, bool allow_index) {
  const long kind = uniform(rng, 0, allow_index ? 3 : 1);
  const auto x = [&] { return RatFun::variable(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))); };
  switch (kind) {
    case 0:
      return RatFun(nonzero(rng, 3));
    case 1:
      return RatFun(BigRat(nonzero(rng, 5), uniform(rng, 1, 4)));
    case 2:
      return x() * RatFun(nonzero(rng, 2)) + RatFun(uniform(rng, -2, 2));
    default:
      return RatFun(nonzero(rng, 2)) / (x() + RatFun(uniform(rng, 1, 3)));
  }
}

System random_system(std::mt19937_64& rng, const GeneratorLimits& lim) {
  System s;
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(lim.max_n)));
  const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(lim.max_m)));
  static const char* axes[] = {"x", "y", "z"};
  static const char* deps[] = {"u", "v"};
  for (std::size_t i = 0; i < n; ++i) s.ring.independents.emplace_back(axes[i]);
  for (std::size_t k = 0; k < m; ++k) s.ring.dependents.emplace_back(deps[k]);

  const auto order = uniform(rng, 0, 1) == 0 ? MonomialOrder::DegRevLex : MonomialOrder::Lex;
  const auto priority = uniform(rng, 0, 1) == 0 ? Priority::TOP : Priority::POT;
  std::vector<std::vector<std::size_t>> blocks;
  if (n >= 2 && uniform(rng, 0, 3) == 0) {
    const std::size_t cut = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(n) - 1));
    blocks.resize(2);
    for (std::size_t i = 0; i < n; ++i) blocks[i < cut ? 0 : 1].push_back(i);
  }
  std::vector<std::size_t> dep_order(m);
  std::iota(dep_order.begin(), dep_order.end(), 0);
  std::shuffle(dep_order.begin(), dep_order.end(), rng);
  s.rk = Ranking(n, m, order, priority, blocks, dep_order);

  const bool index_coeffs = uniform(rng, 0, 1) == 0;
  const std::size_t gens = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(lim.max_generators)));
  while (s.F.size() < gens) {
    DiffPoly f;
    const std::size_t terms = static_cast<std::size_t>(uniform(rng, 2, static_cast<long>(lim.max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
      const std::size_t dep = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(m) - 1));
      f.add_term(Monomial(random_exps(rng, n, lim.max_degree), dep), random_coefficient(rng, n, index_coeffs));
    }
    if (!f.is_zero()) s.F.push_back(std::move(f));
  }
  s.name = "random";
  return s;
}

std::vector<System> random_suite(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<System> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_system(rng));
    out.back().name = "random#" + std::to_string(i);
  }
  return out;
}

Suite admitted_suite(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Suite suite;
  CompletionOptions o;
  o.criteria = CriteriaSet::none();
  o.max_coefficient_terms = kSuiteCoefficientTerms;
  o.max_normal_forms = kSuiteNormalForms;
  while (suite.cases.size() < count) {
    System s = random_system(rng);
    s.name = "random#" + std::to_string(suite.cases.size());
    try {
      o.mode = DivisionMode::Janet;
      Basis j = janet_basis(s.ring, s.F, s.rk, o);
      o.mode = DivisionMode::JanetLike;
      Basis jl = janet_basis(s.ring, s.F, s.rk, o);
      suite.cases.push_back({std::move(s), std::move(j), std::move(jl)});
    } catch (const BudgetExceeded&) {
      ++suite.rejected;
    }
  }
  return suite;
}

DiffPoly lower(const DiffPoly& f, std::size_t n) {
  ExpVec low{};
  for (std::size_t i = 0; i < n; ++i) low[i] = std::numeric_limits<std::uint16_t>::max();
  for (const auto& [u, c] : f.terms())
    for (std::size_t i = 0; i < n; ++i) low[i] = std::min(low[i], u.exps[i]);
  DiffPoly out;
  for (const auto& [u, c] : f.terms()) {
    RatFun x = c;
    for (std::size_t i = 0; i < n; ++i) x = x.shifted(i, -static_cast<long>(low[i]));
    out.add_term(Monomial(exp_sub(u.exps, low), u.dep), x);
  }
  return out;
}

std::string negative_shift_text(std::mt19937_64& rng, const System& s) {
  const std::size_t n = s.ring.n();
  const bool backward = s.ring.direction == ShiftDirection::Backward;
  const auto names = s.ring.symbol_names();
  std::string text;
  for (const auto& f : s.F) {
    std::vector<long> off(n);
    for (auto& o : off) o = uniform(rng, 0, 2);
    std::string eq;
    for (const auto& [u, c] : f.terms()) {
      // c(x) y(x + mu) == c(x - off) y(x + mu - off)
      RatFun x = c;
      for (std::size_t i = 0; i < n; ++i) x = x.shifted(i, -off[i]);
      if (backward)
        for (std::size_t i = 0; i < n; ++i) x = x.reflected(i);
      std::string arg;
      for (std::size_t i = 0; i < n; ++i) {
        long sft = static_cast<long>(u.exps[i]) - off[i];
        if (backward) sft = -sft;
        arg += (i ? "," : "") + s.ring.independents[i];
        if (sft > 0) arg += "+" + std::to_string(sft);
        if (sft < 0) arg += std::to_string(sft);
      }
      eq += (eq.empty() ? "" : " + ") + std::string("(") + x.to_string(names) + ")*" + s.ring.dependents[u.dep] +
            "[" + arg + "]";
    }
    text += eq + ";\n";
  }
  return text;
}

DiffPoly random_combination(std::mt19937_64& rng, const System& s, unsigned max_shift) {
  const std::size_t n = s.ring.n();
  DiffPoly q;
  const long terms = uniform(rng, 1, 3);
  for (long t = 0; t < terms; ++t) {
    const auto& f = s.F[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(s.F.size()) - 1))];
    q += f.prolonged(random_exps(rng, n, max_shift), n).scaled(random_coefficient(rng, n));
  }
  return q;
}

// ---------------------------------------------------------------- oracles

std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t dep, unsigned d) {
  std::vector<Monomial> out;
  ExpVec e{};
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t axis, unsigned left) {
    if (axis + 1 == n) {
      e[axis] = static_cast<std::uint16_t>(left);
      out.emplace_back(e, dep);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[axis] = static_cast<std::uint16_t>(v);
      rec(axis + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

std::vector<Monomial> brute_standard(const std::vector<Monomial>& leaders, std::size_t n, std::size_t m,
                                     unsigned max_degree) {
  std::vector<Monomial> out;
  for (std::size_t dep = 0; dep < m; ++dep)
    for (unsigned d = 0; d <= max_degree; ++d)
      for (const auto& w : monomials_of_degree(n, dep, d))
        if (std::none_of(leaders.begin(), leaders.end(), [&](const Monomial& u) { return u.divides(w); }))
          out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

bool prolongations_vanish(const Basis& J) {
  for (std::size_t i = 0; i < J.size(); ++i)
    for (const auto& p : J.prolongations(i))
      if (!inv_reduce(p, J).is_zero()) return false;
  return true;
}

}  // namespace lindiff::testing
