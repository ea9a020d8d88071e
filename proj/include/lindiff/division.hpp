#pragma once

// Janet and Janet-like monomial divisions on finite sets of exponent vectors.
// All functions here act on one dependent-variable class at a time; callers
// split module elements by dependent first.

#include "lindiff/diffring.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lindiff {

enum class DivisionMode { Janet, JanetLike };

/// Per-element data for a set U: Janet mode uses `multiplicative` (bit i set
/// iff axis i is multiplicative); Janet-like mode uses `nmp` (nmp[i] = k > 0
/// means sigma_i^k is a nonmultiplicative power, 0 means none on that axis).
struct DivisionAssignment {
  DivisionMode mode = DivisionMode::Janet;
  std::vector<std::uint32_t> multiplicative;
  std::vector<ExpVec> nmp;

  std::size_t size() const {
    return mode == DivisionMode::Janet ? multiplicative.size() : nmp.size();
  }
  bool is_multiplicative(std::size_t elem, std::size_t axis) const {
    return (multiplicative[elem] >> axis) & 1U;
  }
};

/// Janet division. Axis 0 is multiplicative for u iff deg_0(u) is maximal in U;
/// axis i > 0 iff deg_i(u) is maximal among the v in U agreeing with u on
/// axes 0..i-1.
DivisionAssignment janet_assign(std::span<const ExpVec> U, std::size_t n);

/// Janet-like division. With [u]_i the elements agreeing with u on axes
/// 0..i-1, axis i gets the power k_i = min{deg_i(v) - deg_i(u) : v in [u]_i,
/// deg_i(v) > deg_i(u)} whenever such v exist.
DivisionAssignment janet_like_assign(std::span<const ExpVec> U, std::size_t n);

DivisionAssignment assign(std::span<const ExpVec> U, std::size_t n, DivisionMode mode);

/// Whether U[elem] involutively divides w under the given assignment.
bool inv_divides(const ExpVec& u, std::size_t elem, const ExpVec& w,
                 const DivisionAssignment& a, std::size_t n);

/// First element of U (in index order) that involutively divides w.
std::optional<std::size_t> inv_divisor(const ExpVec& w, std::span<const ExpVec> U,
                                       const DivisionAssignment& a, std::size_t n);

/// Minimal generators of the monomial ideal spanned by U, sorted.
std::vector<ExpVec> minimal_generators(std::span<const ExpVec> U);

/// Janet completion of a monomial set: the smallest superset of the minimal
/// generators whose Janet cones cover the ideal. Returned sorted.
std::vector<ExpVec> janet_complete(std::span<const ExpVec> U, std::size_t n);

/// True iff every nonmultiplicative (or NMP) prolongation of every element
/// has an involutive divisor in U.
bool is_complete(std::span<const ExpVec> U, std::size_t n, DivisionMode mode);

}  // namespace lindiff
