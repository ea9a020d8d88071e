#pragma once

// Exact coefficient arithmetic: the field Q(x_1..x_n, p_1..p_r) of rational
// functions in index variables and parameters, with the shift action
// x_i -> x_i + k on index variables.
//
// Symbols are positional. Index variables occupy slots 0..n-1 and parameters
// follow; the caller supplies names only when rendering. Slot 0 is the
// highest variable of the internal lexicographic order.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lindiff {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline constexpr std::size_t kMaxSymbols = 16;

/// Dense exponent vector over the fixed symbol capacity.
using ExpVec = std::array<std::uint16_t, kMaxSymbols>;

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted by descending
/// lexicographic exponent order and never carry a zero coefficient.
class CoefPoly {
 public:
  using Term = std::pair<ExpVec, BigRat>;

  CoefPoly() = default;
  explicit CoefPoly(const BigRat& c);
  explicit CoefPoly(long c) : CoefPoly(BigRat(c)) {}

  static CoefPoly variable(std::size_t slot);
  static CoefPoly monomial(const ExpVec& e, const BigRat& c);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static CoefPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const Term& leading() const { return terms_.front(); }
  const BigRat& leading_coeff() const { return terms_.front().second; }
  /// Constant term value; zero if absent.
  BigRat constant_term() const;

  unsigned degree(std::size_t slot) const;
  unsigned total_degree() const;
  /// True iff the polynomial mentions the given slot.
  bool uses(std::size_t slot) const { return degree(slot) > 0; }
  /// True iff any slot in [0, count) occurs.
  bool uses_any_below(std::size_t count) const;
  /// Highest slot index in use plus one.
  std::size_t symbol_span() const;

  CoefPoly operator-() const;
  CoefPoly& operator+=(const CoefPoly& o);
  CoefPoly& operator-=(const CoefPoly& o);
  friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
  friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
  friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
  CoefPoly scaled(const BigRat& c) const;
  CoefPoly pow(unsigned e) const;

  friend bool operator==(const CoefPoly& a, const CoefPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<CoefPoly> divide_exact(const CoefPoly& a, const CoefPoly& b);

  /// Substitutes slot -> slot + steps.
  CoefPoly shifted(std::size_t slot, long steps) const;
  /// Substitutes slot -> -slot.
  CoefPoly reflected(std::size_t slot) const;
  /// Substitutes slot -> value (a rational constant).
  CoefPoly evaluated(std::size_t slot, const BigRat& value) const;

  /// Scales by a positive rational so that all coefficients are coprime
  /// integers; returns the factor that was applied.
  BigRat make_primitive();

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Term> terms_;
};

/// gcd over Z[symbols] of two polynomials with integer coefficients; the result
/// includes the integer content and has a positive leading coefficient.
/// gcd(0, 0) = 0.
CoefPoly poly_gcd(const CoefPoly& a, const CoefPoly& b);

/// Element of K = Q(symbols) in canonical form: numerator and denominator
/// have coprime integer coefficients, share no common factor, and the
/// denominator has a positive leading coefficient. Zero is 0/1. Equality is
/// structural.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatFun(const BigRat& c);
  explicit RatFun(const CoefPoly& poly);

  /// Canonicalizes num/den. Throws MathError on a zero denominator.
  static RatFun make(CoefPoly num, CoefPoly den);
  static RatFun variable(std::size_t slot) { return RatFun(CoefPoly::variable(slot)); }

  const CoefPoly& num() const { return num_; }
  const CoefPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// No symbol occurs at all.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// No index variable (slot < index_count) occurs: fixed by every shift.
  bool is_shift_invariant(std::size_t index_count) const;
  /// Sign of the leading numerator coefficient (0 for zero).
  int leading_sign() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  /// Throws MathError when b is zero.
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun inverse() const;
  RatFun pow(long e) const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// The shift action: slot -> slot + steps on both numerator and denominator.
  RatFun shifted(std::size_t slot, long steps) const;
  /// slot -> -slot; used to realize backward shift direction.
  RatFun reflected(std::size_t slot) const;
  /// slot -> value. Throws MathError if the denominator vanishes there.
  RatFun evaluated(std::size_t slot, const BigRat& value) const;

  /// Fully parenthesized canonical text, e.g. "(n + 1)/(n^2 + 2)".
  std::string to_string(std::span<const std::string> names) const;

 private:
  RatFun(CoefPoly num, CoefPoly den, int /*trusted*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  CoefPoly num_;
  CoefPoly den_;
};

RatFun ratfun_normalize(CoefPoly num, CoefPoly den);
/// shift_coeff: sigma_axis^steps applied to a coefficient.
inline RatFun shift_coeff(const RatFun& c, std::size_t axis, long steps) {
  return c.shifted(axis, steps);
}

}  // namespace lindiff
