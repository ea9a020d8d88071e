#pragma once

// Shared fixtures, random system generator and brute-force oracles for the
// unit tests and the acceptance runner.

#include "lindiff/frontend.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lindiff::testing {

struct System {
  std::string name;
  RingSpec ring;
  Ranking rk;
  std::vector<DiffPoly> F;
};

System make_system(std::string name, const std::string& ring, const std::string& text,
                   SessionOptions opts = {});

System fibonacci();
System index_coefficient();
System laplace();
System cross_shift();
/// Integration-by-parts pair for the one-loop propagator family
/// F(k,n) = int d^dp / (D1^k D2^n), D1 = p^2 - m2, D2 = (p-q)^2.
System feynman();

std::string feynman_text();

struct GeneratorLimits {
  std::size_t max_n = 3;
  std::size_t max_m = 2;
  std::size_t max_generators = 4;
  unsigned max_degree = 3;
  std::size_t max_terms = 3;
};

/// Random system with small integer, rational, or index-dependent
/// coefficients and a random ranking.
System random_system(std::mt19937_64& rng, const GeneratorLimits& lim = {});
/// The suite used by the randomized properties: `count` systems from `seed`.
std::vector<System> random_suite(std::size_t count, std::uint64_t seed = 20240611);

/// Work limits under which a generated system is admitted to the suite.
inline constexpr std::size_t kSuiteCoefficientTerms = 200;
inline constexpr std::size_t kSuiteNormalForms = 3000;

struct SuiteCase {
  System sys;
  Basis janet;       // criteria off, FIFO
  Basis janet_like;  // criteria off, FIFO
};

struct Suite {
  std::vector<SuiteCase> cases;
  std::size_t rejected = 0;  // draws that exceeded the work limits
};

/// First `count` generated systems whose criteria-off completions (both
/// divisions) stay within the work limits.
Suite admitted_suite(std::size_t count, std::uint64_t seed = 20240611);

/// Text of s.F with every equation written shifted back by a random offset
/// per axis (coefficients substituted accordingly) so that negative shifts
/// appear; for a backward ring the text uses backward notation. s.F must
/// have, per equation and axis, a term of shift zero.
std::string negative_shift_text(std::mt19937_64& rng, const System& s);
/// Moves every equation down so that each axis has a term of shift zero.
DiffPoly lower(const DiffPoly& f, std::size_t n);

RatFun random_coefficient(std::mt19937_64& rng, std::size_t n, bool allow_index = true);

/// sum_i a_i * theta^alpha_i f_i with random coefficients and shifts of
/// total degree <= max_shift.
DiffPoly random_combination(std::mt19937_64& rng, const System& s, unsigned max_shift = 2);

/// Monomials of dependent `dep` with total degree exactly d.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t dep, unsigned d);

/// Standard monomials by ordinary divisibility against the leading monomials.
std::vector<Monomial> brute_standard(const std::vector<Monomial>& leaders, std::size_t n, std::size_t m,
                                     unsigned max_degree);

/// True iff J is involutive: every prolongation reduces to zero.
bool prolongations_vanish(const Basis& J);

}  // namespace lindiff::testing
