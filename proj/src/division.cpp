#include "lindiff/division.hpp"

#include <algorithm>

namespace lindiff {

namespace {

bool same_prefix(const ExpVec& a, const ExpVec& b, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j)
    if (a[j] != b[j]) return false;
  return true;
}

}  // namespace

DivisionAssignment janet_assign(std::span<const ExpVec> U, std::size_t n) {
  DivisionAssignment a;
  a.mode = DivisionMode::Janet;
  a.multiplicative.assign(U.size(), 0);
  for (std::size_t k = 0; k < U.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      unsigned top = 0;
      for (const auto& v : U)
        if (same_prefix(v, U[k], i)) top = std::max<unsigned>(top, v[i]);
      if (U[k][i] == top) a.multiplicative[k] |= 1U << i;
    }
  }
  return a;
}

DivisionAssignment janet_like_assign(std::span<const ExpVec> U, std::size_t n) {
  DivisionAssignment a;
  a.mode = DivisionMode::JanetLike;
  a.nmp.assign(U.size(), ExpVec{});
  for (std::size_t k = 0; k < U.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      unsigned gap = 0;
      for (const auto& v : U) {
        if (!same_prefix(v, U[k], i) || v[i] <= U[k][i]) continue;
        const unsigned d = v[i] - U[k][i];
        if (gap == 0 || d < gap) gap = d;
      }
      a.nmp[k][i] = static_cast<std::uint16_t>(gap);
    }
  }
  return a;
}

DivisionAssignment assign(std::span<const ExpVec> U, std::size_t n, DivisionMode mode) {
  return mode == DivisionMode::Janet ? janet_assign(U, n) : janet_like_assign(U, n);
}

bool inv_divides(const ExpVec& u, std::size_t elem, const ExpVec& w, const DivisionAssignment& a,
                 std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] > w[i]) return false;
    const unsigned q = w[i] - u[i];
    if (q == 0) continue;
    if (a.mode == DivisionMode::Janet) {
      if (!a.is_multiplicative(elem, i)) return false;
    } else if (a.nmp[elem][i] != 0 && q >= a.nmp[elem][i]) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> inv_divisor(const ExpVec& w, std::span<const ExpVec> U,
                                       const DivisionAssignment& a, std::size_t n) {
  for (std::size_t k = 0; k < U.size(); ++k)
    if (inv_divides(U[k], k, w, a, n)) return k;
  return std::nullopt;
}

std::vector<ExpVec> minimal_generators(std::span<const ExpVec> U) {
  std::vector<ExpVec> sorted(U.begin(), U.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<ExpVec> out;
  for (const auto& u : sorted) {
    const bool redundant = std::any_of(sorted.begin(), sorted.end(), [&](const ExpVec& v) {
      return v != u && exp_divides(v, u);
    });
    if (!redundant) out.push_back(u);
  }
  return out;
}

std::vector<ExpVec> janet_complete(std::span<const ExpVec> U, std::size_t n) {
  std::vector<ExpVec> set = minimal_generators(U);
  for (;;) {
    const auto a = janet_assign(set, n);
    bool grew = false;
    for (std::size_t k = 0; k < set.size() && !grew; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (a.is_multiplicative(k, i)) continue;
        ExpVec w = set[k];
        ++w[i];
        if (!inv_divisor(w, set, a, n)) {
          set.push_back(w);
          grew = true;
          break;
        }
      }
    }
    if (!grew) break;
  }
  std::sort(set.begin(), set.end());
  return set;
}

bool is_complete(std::span<const ExpVec> U, std::size_t n, DivisionMode mode) {
  const auto a = assign(U, n, mode);
  for (std::size_t k = 0; k < U.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      ExpVec w = U[k];
      if (mode == DivisionMode::Janet) {
        if (a.is_multiplicative(k, i)) continue;
        ++w[i];
      } else {
        if (a.nmp[k][i] == 0) continue;
        w[i] = static_cast<std::uint16_t>(w[i] + a.nmp[k][i]);
      }
      if (!inv_divisor(w, U, a, n)) return false;
    }
  }
  return true;
}

}  // namespace lindiff
