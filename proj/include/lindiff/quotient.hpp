#pragma once

// The linear quotient R_L / (I ∩ R_L): standard monomials (masters), Hilbert
// combinatorics, compatibility conditions and user relations on masters.
//
// Grading is the total shift degree |mu|, summed over dependent classes.

#include "lindiff/engine.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lindiff {

/// { base + sum of nonnegative multiples of the free axes }.
struct Cone {
  Monomial base;
  std::uint32_t free_axes = 0;

  bool contains(const Monomial& w, std::size_t n) const;
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Disjoint cones covering exactly the monomials outside the monomial ideal
/// generated by `leaders` in one dependent class.
std::vector<Cone> complement_cones(const std::vector<ExpVec>& leaders, std::size_t dep, std::size_t n);

struct StandardMonomialSet {
  bool finite = false;
  /// Finite case: every standard monomial. Infinite case: those of total
  /// degree <= degree_bound (empty when no bound was requested).
  std::vector<Monomial> monomials;
  std::optional<unsigned> degree_bound;
  /// Disjoint decomposition of all standard monomials.
  std::vector<Cone> cones;

  std::uint64_t count_in_degree(unsigned d, std::size_t n) const;
};

/// Pattern over one dependent: each axis entry is a fixed shift or a wildcard.
struct RelationPattern {
  std::size_t dep = 0;
  std::vector<std::optional<unsigned>> entries;

  bool matches(const Monomial& u) const;
  friend bool operator==(const RelationPattern&, const RelationPattern&) = default;
};

/// Relations imposed on masters: every matching monomial is set to zero.
class RelationSet {
 public:
  /// Stores the pattern unless an identical one is present.
  void add(RelationPattern p);
  const std::vector<RelationPattern>& list() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  bool matches(const Monomial& u) const;
  DiffPoly filter(const DiffPoly& p) const;

 private:
  std::vector<RelationPattern> patterns_;
};

inline void add_relation(RelationSet& state, RelationPattern pat) { state.add(std::move(pat)); }
inline const std::vector<RelationPattern>& list_relations(const RelationSet& state) { return state.list(); }

/// Masters of J. Monomials matching a relation are left out.
StandardMonomialSet residue_class_basis(const Basis& J, std::optional<unsigned> degree_bound = std::nullopt,
                                        const RelationSet* relations = nullptr);

/// inv_reduce followed by deletion of terms matching a relation.
DiffPoly reduce_with_relations(const DiffPoly& p, const Basis& J, const RelationSet& relations);

/// numerator(t) / (1 - t)^denominator_power with the numerator not divisible
/// by (1 - t) unless the power is already zero.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(std::vector<std::int64_t> numerator, unsigned power);

  const std::vector<std::int64_t>& numerator() const { return num_; }
  unsigned denominator_power() const { return power_; }
  /// Coefficient of t^d in the expansion.
  std::int64_t coefficient(unsigned d) const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  std::vector<std::int64_t> num_;
  unsigned power_ = 0;
};

struct HilbertPolynomial {
  std::vector<BigRat> coefficients;  // in powers of d, constant first
  /// HF(d) = HP(d) for every d >= regularity, and regularity is minimal.
  unsigned regularity = 0;

  BigRat operator()(long d) const;
  std::string to_string() const;
};

/// Series from per-class leading exponent sets via Janet cone decomposition
/// of the ideal side: m/(1-t)^n - sum_u t^|u| / (1-t)^#mult(u).
HilbertSeries hilbert_series_of(const std::vector<std::vector<ExpVec>>& class_leaders, std::size_t n);
HilbertSeries hilbert_series(const Basis& J);
std::uint64_t hilbert_function(const Basis& J, unsigned d);
HilbertPolynomial hilbert_polynomial(const HilbertSeries& s);
HilbertPolynomial hilbert_polynomial(const Basis& J);

struct CompatibilityResult {
  RingSpec ring;      // input ring plus the tag dependents r1..rs
  Ranking ranking;    // y-dependents ranked above the tags
  std::size_t first_tag = 0;
  std::vector<DiffPoly> conditions;  // operator identities in the tags only
};

/// Generating set of compatibility conditions for F(y) = r.
CompatibilityResult comp_cond(const RingSpec& ring, const std::vector<DiffPoly>& F, const Ranking& rk,
                              const CompletionOptions& opts = {});

}  // namespace lindiff
