#include "lindiff/diffring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lindiff {

// ---------------------------------------------------------------- RingSpec

RingSpec::RingSpec(std::vector<std::string> indep, std::vector<std::string> dep,
                   std::vector<std::string> params, ShiftDirection dir)
    : independents(std::move(indep)),
      dependents(std::move(dep)),
      parameters(std::move(params)),
      direction(dir) {
  validate();
}

std::vector<std::string> RingSpec::symbol_names() const {
  std::vector<std::string> out = independents;
  out.insert(out.end(), parameters.begin(), parameters.end());
  return out;
}

void RingSpec::validate() const {
  if (independents.empty()) throw std::invalid_argument("ring needs at least one independent variable");
  if (dependents.empty()) throw std::invalid_argument("ring needs at least one dependent variable");
  if (independents.size() + parameters.size() > kMaxSymbols)
    throw std::invalid_argument("too many coefficient symbols (limit " + std::to_string(kMaxSymbols) + ")");
  std::set<std::string> seen;
  for (const auto* list : {&independents, &dependents, &parameters})
    for (const auto& s : *list) {
      if (s.empty()) throw std::invalid_argument("empty symbol name");
      if (!seen.insert(s).second) throw std::invalid_argument("symbol '" + s + "' declared twice");
    }
}

// ---------------------------------------------------------------- ExpVec

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exp_divides(const ExpVec& d, const ExpVec& m) {
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

unsigned exp_total(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0U); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<int> mu, std::size_t k) : dep(static_cast<std::uint16_t>(k)) {
  if (mu.size() > kMaxSymbols) throw std::invalid_argument("too many axes");
  std::size_t i = 0;
  for (int v : mu) {
    if (v < 0) throw std::invalid_argument("negative shift in monomial");
    exps[i++] = static_cast<std::uint16_t>(v);
  }
}

unsigned Monomial::total_degree() const { return exp_total(exps); }

bool Monomial::divides(const Monomial& other) const {
  return dep == other.dep && exp_divides(exps, other.exps);
}

Monomial Monomial::shifted(std::size_t axis, unsigned k) const {
  Monomial r = *this;
  r.exps[axis] = static_cast<std::uint16_t>(r.exps[axis] + k);
  return r;
}

// ---------------------------------------------------------------- Ranking

Ranking::Ranking(std::size_t n, std::size_t m, MonomialOrder order, Priority priority,
                 std::vector<std::vector<std::size_t>> blocks, std::vector<std::size_t> dependent_order,
                 std::vector<std::size_t> dependent_groups)
    : n_(n),
      m_(m),
      order_(order),
      priority_(priority),
      blocks_(std::move(blocks)),
      dependent_order_(std::move(dependent_order)),
      dependent_groups_(std::move(dependent_groups)) {
  if (n_ == 0 || m_ == 0) throw std::invalid_argument("ranking needs n >= 1 and m >= 1");
  if (n_ > kMaxSymbols) throw std::invalid_argument("too many axes");
  if (blocks_.empty()) {
    blocks_.emplace_back(n_);
    std::iota(blocks_[0].begin(), blocks_[0].end(), 0);
  }
  std::vector<int> hit(n_, 0);
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty ranking block");
    for (auto a : b) {
      if (a >= n_ || hit[a]++) throw std::invalid_argument("ranking blocks must partition the axes");
    }
  }
  if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(n_))
    throw std::invalid_argument("ranking blocks must partition the axes");

  if (dependent_order_.empty()) {
    dependent_order_.resize(m_);
    std::iota(dependent_order_.begin(), dependent_order_.end(), 0);
  }
  if (dependent_order_.size() != m_) throw std::invalid_argument("dependent order must be a permutation");
  position_.assign(m_, m_);
  for (std::size_t i = 0; i < m_; ++i) {
    const auto d = dependent_order_[i];
    if (d >= m_ || position_[d] != m_) throw std::invalid_argument("dependent order must be a permutation");
    position_[d] = i;
  }
  if (dependent_groups_.empty()) dependent_groups_.push_back(m_);
  if (std::accumulate(dependent_groups_.begin(), dependent_groups_.end(), std::size_t{0}) != m_ ||
      std::find(dependent_groups_.begin(), dependent_groups_.end(), 0U) != dependent_groups_.end())
    throw std::invalid_argument("dependent groups must partition the dependent order");
  group_.assign(m_, 0);
  std::size_t at = 0;
  for (std::size_t g = 0; g < dependent_groups_.size(); ++g)
    for (std::size_t j = 0; j < dependent_groups_[g]; ++j) group_[dependent_order_[at++]] = g;
}

std::strong_ordering Ranking::compare_theta(const ExpVec& a, const ExpVec& b) const {
  for (const auto& block : blocks_) {
    if (order_ == MonomialOrder::Lex) {
      for (auto ax : block)
        if (a[ax] != b[ax]) return a[ax] <=> b[ax];
    } else {
      unsigned da = 0;
      unsigned db = 0;
      for (auto ax : block) {
        da += a[ax];
        db += b[ax];
      }
      if (da != db) return da <=> db;
      for (auto it = block.rbegin(); it != block.rend(); ++it)
        if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering Ranking::compare(const Monomial& u, const Monomial& v) const {
  if (u.dep != v.dep) {
    const auto gu = group_[u.dep];
    const auto gv = group_[v.dep];
    if (gu != gv) return gv <=> gu;
    if (priority_ == Priority::POT) return position_[v.dep] <=> position_[u.dep];
  }
  auto c = compare_theta(u.exps, v.exps);
  if (c != 0) return c;
  return position_[v.dep] <=> position_[u.dep];
}

std::strong_ordering rank_compare(const Monomial& u, const Monomial& v, const Ranking& rk) {
  return rk.compare(u, v);
}

// ---------------------------------------------------------------- DiffPoly

DiffPoly DiffPoly::monomial(const Monomial& u, RatFun c) {
  DiffPoly p;
  if (!c.is_zero()) p.terms_.emplace(u, std::move(c));
  return p;
}

RatFun DiffPoly::coeff(const Monomial& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? RatFun() : it->second;
}

void DiffPoly::add_term(const Monomial& u, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Term DiffPoly::leading_term(const Ranking& rk) const {
  if (terms_.empty()) throw MathError("no leading term");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (rk.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

std::vector<Term> DiffPoly::sorted_terms(const Ranking& rk) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [u, c] : terms_) out.push_back({u, c});
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return rk.greater(a.mono, b.mono); });
  return out;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& [u, c] : r.terms_) c = -c;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [u, c] : o.terms_) add_term(u, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [u, c] : o.terms_) add_term(u, -c);
  return *this;
}

DiffPoly DiffPoly::scaled(const RatFun& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  DiffPoly r = *this;
  for (auto& [u, v] : r.terms_) v = v * c;
  return r;
}

DiffPoly DiffPoly::prolonged(std::size_t axis, unsigned k) const {
  if (k == 0) return *this;
  DiffPoly r;
  for (const auto& [u, c] : terms_)
    r.terms_.emplace_hint(r.terms_.end(), u.shifted(axis, k), c.shifted(axis, static_cast<long>(k)));
  return r;
}

DiffPoly DiffPoly::prolonged(const ExpVec& steps, std::size_t n) const {
  DiffPoly r;
  for (const auto& [u, c] : terms_) {
    RatFun s = c;
    for (std::size_t i = 0; i < n; ++i)
      if (steps[i] != 0) s = s.shifted(i, steps[i]);
    r.terms_.emplace(Monomial(exp_add(u.exps, steps), u.dep), std::move(s));
  }
  return r;
}

std::size_t DiffPoly::dependent_span() const {
  std::size_t s = 0;
  for (const auto& [u, c] : terms_) s = std::max<std::size_t>(s, u.dep + 1U);
  return s;
}

std::size_t DiffPoly::axis_span() const {
  std::size_t s = 0;
  for (const auto& [u, c] : terms_)
    for (std::size_t i = 0; i < kMaxSymbols; ++i)
      if (u.exps[i] != 0) s = std::max(s, i + 1);
  return s;
}

bool DiffPoly::has_shift_invariant_coefficients(std::size_t index_count) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.second.is_shift_invariant(index_count); });
}

bool DiffPoly::is_single_dependent() const {
  return terms_.empty() || terms_.begin()->first.dep == terms_.rbegin()->first.dep;
}

DiffPoly poly_combine(const RatFun& a, const DiffPoly& p, const RatFun& b, const DiffPoly& q) {
  DiffPoly r = p.scaled(a);
  r += q.scaled(b);
  return r;
}

}  // namespace lindiff
