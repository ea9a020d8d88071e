#include "lindiff/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace lindiff {

namespace {

ExpVec unit_steps(std::size_t axis, unsigned power) {
  ExpVec e{};
  e[axis] = static_cast<std::uint16_t>(power);
  return e;
}

DiffPoly make_monic(const DiffPoly& p, const Ranking& rk, Monomial* lm) {
  const Term lt = p.leading_term(rk);
  if (lm != nullptr) *lm = lt.mono;
  return lt.coeff.is_one() ? p : p.scaled(lt.coeff.inverse());
}

void check_fits(const DiffPoly& p, std::size_t n, std::size_t m) {
  if (p.dependent_span() > m || p.axis_span() > n)
    throw std::invalid_argument("ring/ranking mismatch: polynomial does not belong to the basis ring");
}

}  // namespace

// ---------------------------------------------------------------- InvolutiveSet

InvolutiveSet::InvolutiveSet(const Ranking& rk, DivisionMode mode) : rk_(rk), mode_(mode) {}

std::optional<std::size_t> InvolutiveSet::index_of_id(std::uint64_t id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t InvolutiveSet::insert(BasisElement e, std::uint64_t id) {
  const auto dep = e.lm.dep;
  elems_.push_back(std::move(e));
  ids_.push_back(id);
  reassign(dep);
  return elems_.size() - 1;
}

BasisElement InvolutiveSet::erase(std::size_t i) {
  BasisElement e = std::move(elems_[i]);
  elems_.erase(elems_.begin() + static_cast<long>(i));
  ids_.erase(ids_.begin() + static_cast<long>(i));
  reassign(e.lm.dep);
  return e;
}

void InvolutiveSet::reassign(std::uint16_t dep) {
  std::vector<std::size_t> members;
  std::vector<ExpVec> lms;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].lm.dep == dep) {
      members.push_back(i);
      lms.push_back(elems_[i].lm.exps);
    }
  if (members.empty()) return;
  const auto a = assign(lms, rk_.n(), mode_);
  for (std::size_t k = 0; k < members.size(); ++k) {
    auto& e = elems_[members[k]];
    if (mode_ == DivisionMode::Janet) {
      e.multiplicative = a.multiplicative[k];
      e.nmp = ExpVec{};
    } else {
      e.nmp = a.nmp[k];
      e.multiplicative = 0;
      for (std::size_t i = 0; i < rk_.n(); ++i)
        if (e.nmp[i] == 0) e.multiplicative |= 1U << i;
    }
  }
}

std::optional<std::size_t> InvolutiveSet::divisor(const Monomial& w) const {
  const std::size_t n = rk_.n();
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    const auto& e = elems_[k];
    if (e.lm.dep != w.dep) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (e.lm.exps[i] > w.exps[i]) {
        ok = false;
        break;
      }
      const unsigned q = w.exps[i] - e.lm.exps[i];
      if (q == 0) continue;
      if (mode_ == DivisionMode::Janet) {
        ok = (e.multiplicative >> i) & 1U;
      } else {
        ok = e.nmp[i] == 0 || q < e.nmp[i];
      }
    }
    if (ok) return k;
  }
  return std::nullopt;
}

const DiffPoly& InvolutiveSet::prolongation(std::size_t i, const ExpVec& steps) const {
  const auto key = std::make_pair(ids_[i], steps);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(key, elems_[i].poly.prolonged(steps, rk_.n())).first->second;
}

DiffPoly InvolutiveSet::normal_form(const DiffPoly& p) const {
  std::map<Monomial, RatFun, RankGreater> work(RankGreater{&rk_});
  for (const auto& [u, c] : p.terms()) work.emplace(u, c);
  DiffPoly result;
  while (!work.empty()) {
    auto top = work.begin();
    const Monomial w = top->first;
    const auto g = divisor(w);
    if (!g) {
      result.add_term(w, top->second);
      work.erase(top);
      continue;
    }
    const RatFun c = std::move(top->second);
    work.erase(top);
    const DiffPoly& q = prolongation(*g, exp_sub(w.exps, elems_[*g].lm.exps));
    for (const auto& [u, d] : q.terms()) {
      if (u == w) continue;
      RatFun delta = c * d;
      auto [it, inserted] = work.try_emplace(u, -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second.is_zero()) {
          work.erase(it);
          continue;
        }
      }
      if (budget_ != 0 && it->second.num().size() + it->second.den().size() > budget_)
        throw BudgetExceeded("coefficient budget exceeded");
    }
  }
  return result;
}

std::vector<std::pair<std::size_t, unsigned>> InvolutiveSet::nonmultiplicative(std::size_t i) const {
  std::vector<std::pair<std::size_t, unsigned>> out;
  const auto& e = elems_[i];
  for (std::size_t ax = 0; ax < rk_.n(); ++ax) {
    if (mode_ == DivisionMode::Janet) {
      if (!((e.multiplicative >> ax) & 1U)) out.emplace_back(ax, 1);
    } else if (e.nmp[ax] != 0) {
      out.emplace_back(ax, e.nmp[ax]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Basis

Basis::Basis(RingSpec ring, Ranking rk, DivisionMode mode, std::vector<BasisElement> elems)
    : ring_(std::move(ring)), set_(rk, mode) {
  std::uint64_t id = 1;
  for (auto& e : elems) set_.insert(std::move(e), id++);
}

std::vector<DiffPoly> Basis::polys() const {
  std::vector<DiffPoly> out;
  for (const auto& e : set_.elements()) out.push_back(e.poly);
  return out;
}

std::vector<Monomial> Basis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : set_.elements()) out.push_back(e.lm);
  return out;
}

std::vector<ExpVec> Basis::class_leaders(std::size_t dep) const {
  std::vector<ExpVec> out;
  for (const auto& e : set_.elements())
    if (e.lm.dep == dep) out.push_back(e.lm.exps);
  return out;
}

std::vector<DiffPoly> Basis::prolongations(std::size_t i) const {
  std::vector<DiffPoly> out;
  for (auto [axis, power] : set_.nonmultiplicative(i))
    out.push_back(set_.prolongation(i, unit_steps(axis, power)));
  return out;
}

// ---------------------------------------------------------------- autoreduce

std::vector<DiffPoly> autoreduce(std::vector<DiffPoly> F, const Ranking& rk) {
  std::vector<std::pair<DiffPoly, Monomial>> G;
  for (auto& f : F) {
    if (f.is_zero()) continue;
    Monomial lm;
    DiffPoly g = make_monic(f, rk, &lm);
    G.emplace_back(std::move(g), lm);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < G.size() && !changed; ++i) {
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i == j || !G[j].second.divides(G[i].second)) continue;
        DiffPoly r = G[i].first - G[j].first.prolonged(exp_sub(G[i].second.exps, G[j].second.exps), rk.n());
        if (r.is_zero()) {
          G.erase(G.begin() + static_cast<long>(i));
        } else {
          Monomial lm;
          G[i].first = make_monic(r, rk, &lm);
          G[i].second = lm;
        }
        changed = true;
        break;
      }
    }
  }
  std::vector<DiffPoly> out;
  out.reserve(G.size());
  for (auto& [g, lm] : G) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------- criteria

bool criterion_applies(const Prolongation& p, const CompletionState& st, Criterion which) {
  if (p.ancestor_id == 0) return false;
  const auto gi = st.T.divisor(p.lm);
  if (!gi) return false;
  const auto ai = st.T.index_of_id(p.ancestor_id);
  const auto bi = st.T.index_of_id(st.ancestor_ids[*gi]);
  if (!ai || !bi) return false;

  const ExpVec& w = p.lm.exps;
  const ExpVec& a = p.ancestor_lm.exps;
  const ExpVec& b = st.ancestors[*gi].exps;

  switch (which) {
    case Criterion::C1: {
      if (exp_add(a, b) != w) return false;
      const DiffPoly& A = st.T[*ai].poly;
      const DiffPoly& B = st.T[*bi].poly;
      return A.is_single_dependent() && B.is_single_dependent() &&
             A.has_shift_invariant_coefficients(st.index_count) &&
             B.has_shift_invariant_coefficients(st.index_count);
    }
    case Criterion::C2:
      return exp_lcm(a, b) != w;
    case Criterion::C3:
      for (std::size_t t = 0; t < st.T.size(); ++t) {
        const Monomial& c = st.T[t].lm;
        if (c.dep != p.lm.dep || !exp_divides(c.exps, w)) continue;
        if (exp_lcm(a, c.exps) != w && exp_lcm(b, c.exps) != w) return true;
      }
      return false;
    case Criterion::C4:
      for (std::size_t t = 0; t < st.T.size(); ++t) {
        const Monomial& c = st.ancestors[t];
        if (c.dep != p.lm.dep || !exp_divides(c.exps, w)) continue;
        if (exp_lcm(a, c.exps) != w && exp_lcm(b, c.exps) != w) return true;
      }
      return false;
  }
  return false;
}

// ---------------------------------------------------------------- completion

namespace {

class Completion {
 public:
  Completion(const Ranking& rk, const CompletionOptions& opts, std::size_t index_count, CompletionStats* stats)
      : rk_(rk), opts_(opts), st_(rk, opts.mode), stats_(stats ? stats : &local_) {
    st_.index_count = index_count;
    st_.T.set_coefficient_budget(opts.max_coefficient_terms);
  }

  std::vector<BasisElement> run(std::vector<DiffPoly> G) {
    std::vector<std::pair<DiffPoly, Monomial>> start;
    for (auto& g : G) {
      const Monomial lm = g.leading_monomial(rk_);
      start.emplace_back(std::move(g), lm);
    }
    std::stable_sort(start.begin(), start.end(),
                     [&](const auto& x, const auto& y) { return rk_.less(x.second, y.second); });
    insert(Prolongation{std::move(start[0].first), start[0].second, 0, start[0].second, {}, 0});
    for (std::size_t i = 1; i < start.size(); ++i)
      push(Prolongation{std::move(start[i].first), start[i].second, 0, start[i].second, {}, 0});
    enqueue_prolongations();

    while (!queue_.empty()) {
      Prolongation p = pop();
      if (skipped(p)) continue;
      if (opts_.max_normal_forms != 0 && stats_->normal_forms >= opts_.max_normal_forms)
        throw BudgetExceeded("normal form budget exceeded");
      DiffPoly h = st_.T.normal_form(p.poly);
      ++stats_->normal_forms;
      if (h.is_zero()) {
        ++stats_->zero_reductions;
        continue;
      }
      Monomial lm;
      h = make_monic(h, rk_, &lm);
      Prolongation fresh;
      fresh.poly = std::move(h);
      fresh.lm = lm;
      if (lm == p.lm) {
        fresh.ancestor_id = p.ancestor_id;
        fresh.ancestor_lm = p.ancestor_lm;
        fresh.processed = std::move(p.processed);
      } else {
        fresh.ancestor_lm = lm;
      }
      demote_multiples_of(lm);
      insert(std::move(fresh));
      enqueue_prolongations();
    }

    std::vector<BasisElement> out;
    for (std::size_t i = 0; i < st_.T.size(); ++i) {
      BasisElement e = st_.T[i];
      DiffPoly tail = e.poly;
      tail.add_term(e.lm, -RatFun(1));
      DiffPoly reduced = st_.T.normal_form(tail);
      reduced.add_term(e.lm, 1);
      e.poly = std::move(reduced);
      e.ancestor = st_.ancestors[i];
      out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return rk_.less(x.lm, y.lm); });
    return out;
  }

 private:
  void push(Prolongation p) {
    p.seq = seq_++;
    queue_.push_back(std::move(p));
  }

  Prolongation pop() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < queue_.size(); ++i) {
      const auto c = rk_.compare(queue_[i].lm, queue_[best].lm);
      if (c < 0) {
        best = i;
      } else if (c == 0) {
        const bool earlier = queue_[i].seq < queue_[best].seq;
        if (earlier == (opts_.tie_break == TieBreak::Fifo)) best = i;
      }
    }
    Prolongation p = std::move(queue_[best]);
    queue_.erase(queue_.begin() + static_cast<long>(best));
    return p;
  }

  bool skipped(const Prolongation& p) {
    if (opts_.criteria.mask == 0) return false;
    for (unsigned c = 0; c < 4; ++c) {
      const auto which = static_cast<Criterion>(c);
      if (opts_.criteria.has(which) && criterion_applies(p, st_, which)) {
        ++stats_->skipped[c];
        return true;
      }
    }
    return false;
  }

  void insert(Prolongation p) {
    const std::uint64_t id = next_id_++;
    if (p.ancestor_id == 0) {
      p.ancestor_id = id;
      p.ancestor_lm = p.lm;
    }
    BasisElement e;
    e.poly = std::move(p.poly);
    e.lm = p.lm;
    e.ancestor = p.ancestor_lm;
    st_.T.insert(std::move(e), id);
    st_.ancestors.push_back(p.ancestor_lm);
    st_.ancestor_ids.push_back(p.ancestor_id);
    st_.processed.push_back(std::move(p.processed));
    ++stats_->insertions;
  }

  void demote_multiples_of(const Monomial& lm) {
    for (std::size_t i = st_.T.size(); i-- > 0;) {
      const Monomial& q = st_.T[i].lm;
      if (q == lm || !lm.divides(q)) continue;
      Prolongation back;
      back.lm = q;
      back.ancestor_id = st_.ancestor_ids[i] == st_.T.id(i) ? 0 : st_.ancestor_ids[i];
      back.ancestor_lm = st_.ancestors[i];
      back.processed = std::move(st_.processed[i]);
      back.poly = st_.T.erase(i).poly;
      st_.ancestors.erase(st_.ancestors.begin() + static_cast<long>(i));
      st_.ancestor_ids.erase(st_.ancestor_ids.begin() + static_cast<long>(i));
      st_.processed.erase(st_.processed.begin() + static_cast<long>(i));
      push(std::move(back));
      ++stats_->demotions;
    }
  }

  void enqueue_prolongations() {
    for (std::size_t i = 0; i < st_.T.size(); ++i) {
      for (auto step : st_.T.nonmultiplicative(i)) {
        auto& done = st_.processed[i];
        if (std::find(done.begin(), done.end(), step) != done.end()) continue;
        done.push_back(step);
        Prolongation p;
        p.poly = st_.T.prolongation(i, unit_steps(step.first, step.second));
        p.lm = st_.T[i].lm.shifted(step.first, step.second);
        p.ancestor_id = st_.ancestor_ids[i];
        p.ancestor_lm = st_.ancestors[i];
        push(std::move(p));
      }
    }
  }

  const Ranking& rk_;
  CompletionOptions opts_;
  CompletionState st_;
  CompletionStats local_;
  CompletionStats* stats_;
  std::vector<Prolongation> queue_;
  std::uint64_t seq_ = 0;
  std::uint64_t next_id_ = 1;
};

}  // namespace

Basis janet_basis(const RingSpec& ring, const std::vector<DiffPoly>& F, const Ranking& rk,
                  const CompletionOptions& opts, CompletionStats* stats) {
  ring.validate();
  if (rk.n() != ring.n() || rk.m() != ring.m())
    throw std::invalid_argument("ranking does not match the ring dimensions");
  for (const auto& f : F) check_fits(f, ring.n(), ring.m());
  auto G = autoreduce(F, rk);
  if (G.empty()) throw MathError("zero ideal input");
  Completion c(rk, opts, ring.n(), stats);
  return Basis(ring, rk, opts.mode, c.run(std::move(G)));
}

DiffPoly inv_reduce(const DiffPoly& p, const Basis& J) {
  check_fits(p, J.ring().n(), J.ring().m());
  return J.reduce(p);
}

DiffPoly inv_reduce(const DiffPoly& p, const RingSpec& ring, const Ranking& rk, const Basis& J) {
  if (!(ring == J.ring()) || !(rk == J.ranking()))
    throw std::invalid_argument("ring/ranking mismatch between polynomial and basis");
  return inv_reduce(p, J);
}

}  // namespace lindiff
