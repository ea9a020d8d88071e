#pragma once

// Linear difference polynomials: finite K-linear combinations of shifted
// dependent variables theta^mu o y^k, mu in Z_{>=0}^n, with rankings and the
// twisted shift action sigma_i (c * theta^mu y) = sigma_i(c) * theta^(mu+e_i) y.

#include "lindiff/scalars.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lindiff {

enum class ShiftDirection { Forward, Backward };

/// Names of index variables, dependent variables and parameters. Coefficient
/// symbol slots are laid out as indices first, then parameters.
struct RingSpec {
  std::vector<std::string> independents;
  std::vector<std::string> dependents;
  std::vector<std::string> parameters;
  ShiftDirection direction = ShiftDirection::Forward;

  RingSpec() = default;
  RingSpec(std::vector<std::string> indep, std::vector<std::string> dep,
           std::vector<std::string> params = {},
           ShiftDirection dir = ShiftDirection::Forward);

  std::size_t n() const { return independents.size(); }
  std::size_t m() const { return dependents.size(); }
  /// Coefficient symbol names in slot order.
  std::vector<std::string> symbol_names() const;
  /// Throws std::invalid_argument when the invariants do not hold.
  void validate() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// theta^exps o y^dep. Only the first n entries of `exps` are meaningful; the
/// rest stay zero.
struct Monomial {
  std::uint16_t dep = 0;
  ExpVec exps{};

  Monomial() = default;
  Monomial(std::initializer_list<int> mu, std::size_t k = 0);
  Monomial(const ExpVec& e, std::size_t k) : dep(static_cast<std::uint16_t>(k)), exps(e) {}

  unsigned total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial shifted(std::size_t axis, unsigned k) const;

  /// Structural order: dependent first, then exponents lexicographically.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
/// a - b; caller guarantees b <= a componentwise.
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
ExpVec exp_lcm(const ExpVec& a, const ExpVec& b);
bool exp_divides(const ExpVec& d, const ExpVec& m);
unsigned exp_total(const ExpVec& e);

enum class MonomialOrder { DegRevLex, Lex };
enum class Priority { TOP, POT };

/// Admissible total order on monomials.
///
/// Dependents are first compared by group (see `dependent_groups`); inside a
/// group POT compares dependent position before the shift part while TOP
/// compares the shift part first. The shift part is compared block by block,
/// left to right; inside a block:
///   lex       : first differing axis, larger exponent wins;
///   degrevlex : larger block degree wins, ties broken at the last differing
///               axis where the smaller exponent wins.
/// So in degrevlex (2,0) > (1,1) > (0,2), and (1,1,0) > (1,0,1).
class Ranking {
 public:
  Ranking() = default;
  /// blocks: ordered partition of 0..n-1 (empty = one block in natural order).
  /// dependent_order: dependents from highest to lowest (empty = 0..m-1).
  /// dependent_groups: sizes of consecutive groups of dependent_order that
  /// are ranked strictly before anything else (empty = one group).
  Ranking(std::size_t n, std::size_t m, MonomialOrder order, Priority priority,
          std::vector<std::vector<std::size_t>> blocks = {},
          std::vector<std::size_t> dependent_order = {},
          std::vector<std::size_t> dependent_groups = {});

  static Ranking degrevlex(std::size_t n, std::size_t m, Priority p = Priority::TOP) {
    return {n, m, MonomialOrder::DegRevLex, p};
  }
  static Ranking lex(std::size_t n, std::size_t m, Priority p = Priority::TOP) {
    return {n, m, MonomialOrder::Lex, p};
  }

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  MonomialOrder order() const { return order_; }
  Priority priority() const { return priority_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& dependent_order() const { return dependent_order_; }
  const std::vector<std::size_t>& dependent_groups() const { return dependent_groups_; }

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.order_ == b.order_ && a.priority_ == b.priority_ &&
           a.blocks_ == b.blocks_ && a.dependent_order_ == b.dependent_order_ &&
           a.dependent_groups_ == b.dependent_groups_;
  }

 private:
  std::strong_ordering compare_theta(const ExpVec& a, const ExpVec& b) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  MonomialOrder order_ = MonomialOrder::DegRevLex;
  Priority priority_ = Priority::TOP;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> dependent_order_;
  std::vector<std::size_t> dependent_groups_;
  std::vector<std::size_t> position_;  // dependent -> rank position (0 = highest)
  std::vector<std::size_t> group_;     // dependent -> group index
};

/// Comparator for containers ordered from the highest-ranked monomial down.
struct RankGreater {
  const Ranking* rk;
  bool operator()(const Monomial& a, const Monomial& b) const { return rk->greater(a, b); }
};

struct Term {
  Monomial mono;
  RatFun coeff;
};

/// Element of R_L. Terms are stored in structural monomial order; the
/// ranking only matters for leading-term queries.
class DiffPoly {
 public:
  using Map = std::map<Monomial, RatFun>;

  DiffPoly() = default;
  static DiffPoly monomial(const Monomial& u, RatFun c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  /// Coefficient of u (zero when absent).
  RatFun coeff(const Monomial& u) const;

  /// Adds c * u, dropping the term when it cancels.
  void add_term(const Monomial& u, const RatFun& c);

  /// Throws MathError("no leading term") on the zero polynomial.
  Term leading_term(const Ranking& rk) const;
  Monomial leading_monomial(const Ranking& rk) const { return leading_term(rk).mono; }
  /// Terms sorted from highest to lowest rank.
  std::vector<Term> sorted_terms(const Ranking& rk) const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  /// Left multiplication by a coefficient (no twist).
  DiffPoly scaled(const RatFun& c) const;

  /// sigma_axis^k applied with the coefficient twist.
  DiffPoly prolonged(std::size_t axis, unsigned k) const;
  /// theta^steps applied with the coefficient twist.
  DiffPoly prolonged(const ExpVec& steps, std::size_t n) const;

  /// Largest dependent index used plus one, and largest axis used plus one.
  std::size_t dependent_span() const;
  std::size_t axis_span() const;
  /// True iff every coefficient is fixed by all shifts.
  bool has_shift_invariant_coefficients(std::size_t index_count) const;
  /// True iff every term lives in one dependent.
  bool is_single_dependent() const;

  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  Map terms_;
};

/// sigma_axis^power p.
inline DiffPoly prolong(const DiffPoly& p, std::size_t axis, unsigned power) {
  return p.prolonged(axis, power);
}
/// a*p + b*q.
DiffPoly poly_combine(const RatFun& a, const DiffPoly& p, const RatFun& b, const DiffPoly& q);

std::strong_ordering rank_compare(const Monomial& u, const Monomial& v, const Ranking& rk);

}  // namespace lindiff
