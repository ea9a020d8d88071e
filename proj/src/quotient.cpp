#include "lindiff/quotient.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace lindiff {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void complement_rec(const std::vector<ExpVec>& gens, std::size_t axis, std::size_t n, ExpVec base,
                    std::uint32_t free, std::size_t dep, std::vector<Cone>& out) {
  for (const auto& g : gens) {
    bool zero = true;
    for (std::size_t i = axis; i < n; ++i) zero = zero && g[i] == 0;
    if (zero) return;
  }
  if (axis == n) {
    out.push_back({Monomial(base, dep), free});
    return;
  }
  unsigned top = 0;
  for (const auto& g : gens) top = std::max<unsigned>(top, g[axis]);
  for (unsigned j = 0; j <= top; ++j) {
    std::vector<ExpVec> slice;
    for (const auto& g : gens)
      if (g[axis] <= j) {
        ExpVec s = g;
        s[axis] = 0;
        slice.push_back(s);
      }
    ExpVec b = base;
    b[axis] = static_cast<std::uint16_t>(j);
    complement_rec(slice, axis + 1, n, b, j == top ? (free | (1U << axis)) : free, dep, out);
  }
}

void for_each_up_to(std::size_t n, unsigned max_degree, const std::function<void(const ExpVec&)>& f) {
  ExpVec e{};
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t axis, unsigned left) {
    if (axis == n) {
      f(e);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[axis] = static_cast<std::uint16_t>(v);
      rec(axis + 1, left - v);
    }
    e[axis] = 0;
  };
  rec(0, max_degree);
}

std::vector<std::int64_t> one_minus_t_pow(unsigned k) {
  std::vector<std::int64_t> p{1};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::int64_t> q(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j];
      q[j + 1] -= p[j];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------- cones

bool Cone::contains(const Monomial& w, std::size_t n) const {
  if (w.dep != base.dep) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.exps[i] < base.exps[i]) return false;
    if (w.exps[i] != base.exps[i] && !((free_axes >> i) & 1U)) return false;
  }
  return true;
}

std::vector<Cone> complement_cones(const std::vector<ExpVec>& leaders, std::size_t dep, std::size_t n) {
  std::vector<Cone> out;
  complement_rec(minimal_generators(leaders), 0, n, ExpVec{}, 0, dep, out);
  return out;
}

std::uint64_t StandardMonomialSet::count_in_degree(unsigned d, std::size_t /*n*/) const {
  std::uint64_t total = 0;
  for (const auto& c : cones) {
    const unsigned b = c.base.total_degree();
    if (d < b) continue;
    const unsigned f = static_cast<unsigned>(std::popcount(c.free_axes));
    if (f == 0) {
      total += d == b ? 1 : 0;
    } else {
      total += binomial(d - b + f - 1, f - 1);
    }
  }
  return total;
}

// ---------------------------------------------------------------- relations

bool RelationPattern::matches(const Monomial& u) const {
  if (u.dep != dep) return false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] && u.exps[i] != *entries[i]) return false;
  return true;
}

void RelationSet::add(RelationPattern p) {
  if (std::find(patterns_.begin(), patterns_.end(), p) == patterns_.end()) patterns_.push_back(std::move(p));
}

bool RelationSet::matches(const Monomial& u) const {
  return std::any_of(patterns_.begin(), patterns_.end(), [&](const auto& p) { return p.matches(u); });
}

DiffPoly RelationSet::filter(const DiffPoly& p) const {
  if (patterns_.empty()) return p;
  DiffPoly out;
  for (const auto& [u, c] : p.terms())
    if (!matches(u)) out.add_term(u, c);
  return out;
}

DiffPoly reduce_with_relations(const DiffPoly& p, const Basis& J, const RelationSet& relations) {
  return relations.filter(inv_reduce(p, J));
}

// ---------------------------------------------------------------- masters

StandardMonomialSet residue_class_basis(const Basis& J, std::optional<unsigned> degree_bound,
                                        const RelationSet* relations) {
  const std::size_t n = J.ring().n();
  const std::size_t m = J.ring().m();
  StandardMonomialSet out;
  out.degree_bound = degree_bound;
  out.finite = true;
  std::vector<ExpVec> box(m);
  for (std::size_t dep = 0; dep < m; ++dep) {
    const auto leaders = J.class_leaders(dep);
    auto cones = complement_cones(leaders, dep, n);
    out.cones.insert(out.cones.end(), cones.begin(), cones.end());
    // Finite iff each axis carries a pure power among this class's leaders.
    for (std::size_t i = 0; i < n; ++i) {
      unsigned best = 0;
      bool found = false;
      for (const auto& u : leaders) {
        bool pure = true;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i && u[j] != 0) pure = false;
        if (pure && (!found || u[i] < best)) {
          best = u[i];
          found = true;
        }
      }
      if (!found) out.finite = false;
      box[dep][i] = static_cast<std::uint16_t>(best);
    }
  }

  auto keep = [&](const Monomial& w) {
    return !J.divisor(w) && (relations == nullptr || !relations->matches(w));
  };
  if (out.finite) {
    for (std::size_t dep = 0; dep < m; ++dep) {
      ExpVec e{};
      std::function<void(std::size_t)> rec = [&](std::size_t axis) {
        if (axis == n) {
          Monomial w(e, dep);
          if (keep(w)) out.monomials.push_back(w);
          return;
        }
        for (unsigned v = 0; v < box[dep][axis]; ++v) {
          e[axis] = static_cast<std::uint16_t>(v);
          rec(axis + 1);
        }
        e[axis] = 0;
      };
      rec(0);
    }
  } else if (degree_bound) {
    for (std::size_t dep = 0; dep < m; ++dep)
      for_each_up_to(n, *degree_bound, [&](const ExpVec& e) {
        Monomial w(e, dep);
        if (keep(w)) out.monomials.push_back(w);
      });
  }
  const Ranking& rk = J.ranking();
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return rk.less(a, b); });
  return out;
}

// ---------------------------------------------------------------- Hilbert

HilbertSeries::HilbertSeries(std::vector<std::int64_t> numerator, unsigned power)
    : num_(std::move(numerator)), power_(power) {
  auto trim = [this] {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
  };
  trim();
  while (power_ > 0 && !num_.empty()) {
    std::int64_t s = 0;
    for (auto c : num_) s += c;
    if (s != 0) break;
    // divide by (1 - t): prefix sums
    std::vector<std::int64_t> q(num_.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < num_.size(); ++i) {
      acc += num_[i];
      q[i] = acc;
    }
    num_ = std::move(q);
    trim();
    --power_;
  }
  if (num_.empty()) power_ = 0;
}

std::int64_t HilbertSeries::coefficient(unsigned d) const {
  if (power_ == 0) return d < num_.size() ? num_[d] : 0;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < num_.size() && i <= d; ++i)
    total += num_[i] * static_cast<std::int64_t>(binomial(d - i + power_ - 1, power_ - 1));
  return total;
}

std::string HilbertSeries::to_string() const {
  std::string num;
  std::size_t terms = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    const auto c = num_[i];
    if (c == 0) continue;
    const auto mag = c < 0 ? -c : c;
    if (terms == 0) {
      if (c < 0) num += "-";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    ++terms;
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty()) {
      num += std::to_string(mag);
    } else if (mag == 1) {
      num += mono;
    } else {
      num += std::to_string(mag) + "*" + mono;
    }
  }
  if (terms == 0) num = "0";
  if (power_ == 0) return num;
  if (terms > 1) num = "(" + num + ")";
  return num + "/(1 - t)" + (power_ > 1 ? "^" + std::to_string(power_) : "");
}

HilbertSeries hilbert_series_of(const std::vector<std::vector<ExpVec>>& class_leaders, std::size_t n) {
  std::vector<std::int64_t> num(1, static_cast<std::int64_t>(class_leaders.size()));
  for (const auto& leaders : class_leaders) {
    if (leaders.empty()) continue;
    const auto a = janet_assign(leaders, n);
    for (std::size_t k = 0; k < leaders.size(); ++k) {
      const unsigned deg = exp_total(leaders[k]);
      const unsigned mult = static_cast<unsigned>(std::popcount(a.multiplicative[k]));
      const auto f = one_minus_t_pow(static_cast<unsigned>(n) - mult);
      if (num.size() < deg + f.size()) num.resize(deg + f.size(), 0);
      for (std::size_t j = 0; j < f.size(); ++j) num[deg + j] -= f[j];
    }
  }
  return HilbertSeries(std::move(num), static_cast<unsigned>(n));
}

HilbertSeries hilbert_series(const Basis& J) {
  const std::size_t n = J.ring().n();
  std::vector<std::vector<ExpVec>> leaders;
  for (std::size_t dep = 0; dep < J.ring().m(); ++dep) {
    auto u = J.class_leaders(dep);
    if (J.mode() == DivisionMode::JanetLike && !u.empty()) u = janet_complete(u, n);
    leaders.push_back(std::move(u));
  }
  return hilbert_series_of(leaders, n);
}

std::uint64_t hilbert_function(const Basis& J, unsigned d) {
  return static_cast<std::uint64_t>(hilbert_series(J).coefficient(d));
}

BigRat HilbertPolynomial::operator()(long d) const {
  BigRat acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * d + *it;
  return acc;
}

std::string HilbertPolynomial::to_string() const {
  std::vector<std::string> names{"d"};
  std::vector<CoefPoly::Term> terms;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    ExpVec e{};
    e[0] = static_cast<std::uint16_t>(i);
    terms.emplace_back(e, coefficients[i]);
  }
  return CoefPoly::from_terms(std::move(terms)).to_string(names);
}

HilbertPolynomial hilbert_polynomial(const HilbertSeries& s) {
  HilbertPolynomial hp;
  const unsigned k = s.denominator_power();
  const auto& num = s.numerator();
  if (k > 0) {
    hp.coefficients.assign(k, 0);
    BigRat fact = 1;
    for (unsigned j = 2; j < k; ++j) fact *= j;
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (num[i] == 0) continue;
      // prod_{j=1}^{k-1} (d - i + j)
      std::vector<BigRat> p{1};
      for (unsigned j = 1; j < k; ++j) {
        const BigRat c = BigRat(static_cast<long>(j)) - BigRat(static_cast<long>(i));
        std::vector<BigRat> q(p.size() + 1, 0);
        for (std::size_t t = 0; t < p.size(); ++t) {
          q[t] += p[t] * c;
          q[t + 1] += p[t];
        }
        p = std::move(q);
      }
      for (std::size_t t = 0; t < p.size(); ++t) hp.coefficients[t] += p[t] * num[i] / fact;
    }
  }
  while (!hp.coefficients.empty() && hp.coefficients.back() == 0) hp.coefficients.pop_back();
  const long start = std::max<long>(0, static_cast<long>(num.size()) - 1 - static_cast<long>(k) + 1);
  long r = start;
  while (r > 0 && hp(r - 1) == BigRat(s.coefficient(static_cast<unsigned>(r - 1)))) --r;
  hp.regularity = static_cast<unsigned>(r);
  return hp;
}

HilbertPolynomial hilbert_polynomial(const Basis& J) { return hilbert_polynomial(hilbert_series(J)); }

// ---------------------------------------------------------------- compatibility

CompatibilityResult comp_cond(const RingSpec& ring, const std::vector<DiffPoly>& F, const Ranking& rk,
                              const CompletionOptions& opts) {
  const std::size_t m = ring.m();
  const std::size_t s = F.size();
  if (s == 0) throw std::invalid_argument("compatibility conditions need at least one equation");
  CompatibilityResult res;
  res.first_tag = m;
  res.ring = ring;
  for (std::size_t i = 0; i < s; ++i) {
    std::string name = "r" + std::to_string(i + 1);
    auto taken = [&](const std::string& x) {
      for (const auto* l : {&ring.independents, &ring.dependents, &ring.parameters})
        if (std::find(l->begin(), l->end(), x) != l->end()) return true;
      return false;
    };
    while (taken(name)) name += "_";
    res.ring.dependents.push_back(name);
  }
  std::vector<std::size_t> order = rk.dependent_order();
  for (std::size_t i = 0; i < s; ++i) order.push_back(m + i);
  std::vector<std::size_t> groups = rk.dependent_groups();
  groups.push_back(s);
  res.ranking = Ranking(ring.n(), m + s, rk.order(), rk.priority(), rk.blocks(), order, groups);

  std::vector<DiffPoly> gens;
  for (std::size_t i = 0; i < s; ++i) {
    DiffPoly g = F[i];
    g.add_term(Monomial(ExpVec{}, m + i), -RatFun(1));
    gens.push_back(std::move(g));
  }
  const Basis J = janet_basis(res.ring, gens, res.ranking, opts);
  for (const auto& e : J.elements()) {
    const bool tags_only = std::all_of(e.poly.terms().begin(), e.poly.terms().end(),
                                       [&](const auto& t) { return t.first.dep >= m; });
    if (tags_only) res.conditions.push_back(e.poly);
  }
  return res;
}

}  // namespace lindiff
