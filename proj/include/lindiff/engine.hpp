#pragma once

// Involutive normal forms and the completion algorithm producing minimal
// Janet bases and Janet-like Groebner bases of linear difference ideals.

#include "lindiff/diffring.hpp"
#include "lindiff/division.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace lindiff {

/// The four reduction-avoidance criteria, selectable individually.
enum class Criterion : unsigned { C1 = 0, C2 = 1, C3 = 2, C4 = 3 };

struct CriteriaSet {
  unsigned mask = 0;

  static CriteriaSet none() { return {0}; }
  static CriteriaSet all() { return {0xF}; }
  bool has(Criterion c) const { return (mask >> static_cast<unsigned>(c)) & 1U; }
  CriteriaSet& enable(Criterion c) {
    mask |= 1U << static_cast<unsigned>(c);
    return *this;
  }
  friend bool operator==(CriteriaSet, CriteriaSet) = default;
};

/// Order in which queue entries with equal leading monomials are taken.
enum class TieBreak { Fifo, Lifo };

struct CompletionOptions {
  DivisionMode mode = DivisionMode::Janet;
  CriteriaSet criteria = CriteriaSet::all();
  TieBreak tie_break = TieBreak::Fifo;
  /// Work limits; 0 means unlimited. Exceeding one throws BudgetExceeded.
  std::size_t max_coefficient_terms = 0;
  std::size_t max_normal_forms = 0;
};

class BudgetExceeded : public MathError {
 public:
  using MathError::MathError;
};

struct CompletionStats {
  std::size_t normal_forms = 0;
  std::size_t zero_reductions = 0;
  std::size_t insertions = 0;
  std::size_t demotions = 0;
  std::size_t skipped[4] = {0, 0, 0, 0};
};

struct BasisElement {
  DiffPoly poly;  // monic
  Monomial lm;
  Monomial ancestor;
  std::uint32_t multiplicative = 0;  // Janet mode
  ExpVec nmp{};                      // Janet-like mode
};

/// Set of monic polynomials with pairwise distinct leading monomials and the
/// division data of each leading monomial within its dependent class.
/// Supports involutive divisor search and involutive normal forms.
class InvolutiveSet {
 public:
  InvolutiveSet() = default;
  InvolutiveSet(const Ranking& rk, DivisionMode mode);

  std::size_t size() const { return elems_.size(); }
  const BasisElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<BasisElement>& elements() const { return elems_; }
  std::uint64_t id(std::size_t i) const { return ids_[i]; }
  std::optional<std::size_t> index_of_id(std::uint64_t id) const;

  /// Adds a monic polynomial; returns its index. Assignments of its class are
  /// recomputed.
  std::size_t insert(BasisElement e, std::uint64_t id);
  BasisElement erase(std::size_t i);

  /// First element (in insertion order) whose leading monomial involutively
  /// divides w.
  std::optional<std::size_t> divisor(const Monomial& w) const;
  /// Full involutive normal form, reducing the rank-highest reducible term
  /// first.
  DiffPoly normal_form(const DiffPoly& p) const;
  /// theta^steps applied to element i, cached.
  const DiffPoly& prolongation(std::size_t i, const ExpVec& steps) const;

  /// Nonmultiplicative prolongation steps (axis, power) of element i.
  std::vector<std::pair<std::size_t, unsigned>> nonmultiplicative(std::size_t i) const;

  const Ranking& ranking() const { return rk_; }
  DivisionMode mode() const { return mode_; }
  /// Largest numerator plus denominator term count tolerated in normal forms.
  void set_coefficient_budget(std::size_t terms) { budget_ = terms; }

 private:
  void reassign(std::uint16_t dep);

  Ranking rk_;
  DivisionMode mode_ = DivisionMode::Janet;
  std::vector<BasisElement> elems_;
  std::vector<std::uint64_t> ids_;
  std::size_t budget_ = 0;
  mutable std::map<std::pair<std::uint64_t, ExpVec>, DiffPoly> cache_;
};

/// Completed basis with its ring, ranking and division.
class Basis {
 public:
  Basis(RingSpec ring, Ranking rk, DivisionMode mode, std::vector<BasisElement> elems);

  const RingSpec& ring() const { return ring_; }
  const Ranking& ranking() const { return set_.ranking(); }
  DivisionMode mode() const { return set_.mode(); }
  const std::vector<BasisElement>& elements() const { return set_.elements(); }
  std::size_t size() const { return set_.size(); }
  std::vector<DiffPoly> polys() const;
  std::vector<Monomial> leading_monomials() const;
  /// Leading exponent vectors of the given dependent class.
  std::vector<ExpVec> class_leaders(std::size_t dep) const;

  std::optional<std::size_t> divisor(const Monomial& w) const { return set_.divisor(w); }
  DiffPoly reduce(const DiffPoly& p) const { return set_.normal_form(p); }
  /// Nonmultiplicative (Janet) or NMP (Janet-like) prolongations of element i.
  std::vector<DiffPoly> prolongations(std::size_t i) const;

  friend bool operator==(const Basis& a, const Basis& b) { return a.polys() == b.polys(); }

 private:
  RingSpec ring_;
  InvolutiveSet set_;
};

/// Leading-term ordinary head autoreduction; results monic, zeros dropped.
std::vector<DiffPoly> autoreduce(std::vector<DiffPoly> F, const Ranking& rk);

/// Queue entry of the completion: a polynomial together with the identity and
/// leading monomial of the basis element it descends from.
struct Prolongation {
  DiffPoly poly;
  Monomial lm;
  std::uint64_t ancestor_id = 0;  // 0: the entry is its own ancestor
  Monomial ancestor_lm;
  std::vector<std::pair<std::size_t, unsigned>> processed;
  std::uint64_t seq = 0;
};

/// Intermediate state of a completion: the partial basis T plus bookkeeping
/// needed by the criteria.
struct CompletionState {
  CompletionState(const Ranking& rk, DivisionMode mode) : T(rk, mode) {}

  InvolutiveSet T;
  std::vector<Monomial> ancestors;  // parallel to T: ancestor lm
  std::vector<std::uint64_t> ancestor_ids;
  std::vector<std::vector<std::pair<std::size_t, unsigned>>> processed;
  std::size_t index_count = 0;
};

/// True only when the involutive normal form of p modulo T is provably zero
/// by the given criterion:
///   C1  lm(anc(p)) * lm(anc(g)) = lm(p), where g is the involutive divisor of
///       lm(p); only for ancestors with shift-invariant coefficients in a
///       single dependent (the product identity needs commuting operators).
///   C2  lcm(lm(anc(p)), lm(anc(g))) properly divides lm(p).
///   C3  some t in T has lm(t) | lm(p) while lcm(lm(anc(p)), lm(t)) and
///       lcm(lm(anc(g)), lm(t)) both properly divide lm(p).
///   C4  as C3 with lm(anc(t)) in place of lm(t).
/// Ancestors must still be present in T.
bool criterion_applies(const Prolongation& p, const CompletionState& state, Criterion which);

/// Computes the minimal monic tail-reduced Janet basis (or Janet-like
/// Groebner basis) of the ideal generated by F. Throws MathError("zero ideal
/// input") if every generator vanishes.
Basis janet_basis(const RingSpec& ring, const std::vector<DiffPoly>& F, const Ranking& rk,
                  const CompletionOptions& opts = {}, CompletionStats* stats = nullptr);

/// Involutive normal form of p modulo J.
DiffPoly inv_reduce(const DiffPoly& p, const Basis& J);
/// As above, checking that p belongs to the same ring and ranking as J.
DiffPoly inv_reduce(const DiffPoly& p, const RingSpec& ring, const Ranking& rk, const Basis& J);

}  // namespace lindiff
