#pragma once

// Text front end: ring and option parsing, the equation grammar, shift
// direction normalization, operator form conversion and serializers.
//
// Grammar (whitespace insignificant, ';' or newline separates equations):
//   system   := equation (";" equation)*
//   equation := expr ("=" expr)?
//   expr     := ["+"|"-"] term (("+"|"-") term)*
//   term     := factor (("*"|"/") factor)*
//   factor   := primary ("^" ["-"] integer)?
//   primary  := number | symbol | dep "[" arg ("," arg)* "]" | dep | S_x | "(" expr ")"
//   arg      := indep (("+"|"-") integer)?
// A bare dependent name means the unshifted dependent. S_x is the shift
// operator on axis x; operator products follow the twisted rule
// S_x * c = sigma_x(c) * S_x.

#include "lindiff/engine.hpp"
#include "lindiff/quotient.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lindiff {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class OutputFormat { Text, Json };

struct SessionOptions {
  DivisionMode mode = DivisionMode::Janet;
  CriteriaSet criteria = CriteriaSet::all();
  ShiftDirection direction = ShiftDirection::Forward;
  MonomialOrder order = MonomialOrder::DegRevLex;
  Priority priority = Priority::TOP;
  std::string blocks;            // "x,y|z"; empty = one block
  std::string dependent_order;   // "ux,uy,u"; empty = ring order
  OutputFormat format = OutputFormat::Text;

  CompletionOptions completion() const { return {mode, criteria, TieBreak::Fifo}; }
};

/// "x,y; u,ux,uy; d,m2" (parameters optional).
RingSpec parse_ring(std::string_view text, ShiftDirection dir = ShiftDirection::Forward);
Ranking make_ranking(const RingSpec& ring, const SessionOptions& opts);
/// "1,2,4" -> {C1, C2, C4}; "none" or "" -> no criteria; "all" -> all.
CriteriaSet parse_criteria(std::string_view text);
/// Reads option overrides from a JSON object (keys as in the CLI flags).
void apply_session_json(SessionOptions& opts, std::string_view json);

/// theta^shift o y^dep with shifts of either sign, as written by the user.
struct RawMonomial {
  std::size_t dep = 0;
  std::vector<long> shift;

  friend auto operator<=>(const RawMonomial&, const RawMonomial&) = default;
};

/// Parsed linear equation sum c*u = rhs before direction normalization.
struct RawEquation {
  std::map<RawMonomial, RatFun> terms;
  RatFun rhs;
};

/// Equation in canonical form: lhs(y) = rhs with all shifts nonnegative.
struct Equation {
  DiffPoly lhs;
  RatFun rhs;
};

std::vector<RawEquation> parse_raw_system(std::string_view text, const RingSpec& ring);

/// Per equation and per axis, prolongs by the largest negative shift so that
/// every shift becomes nonnegative. With backward direction the shifts are
/// negated and index variables reflected (x -> -x) first.
std::vector<Equation> normalize_direction(const std::vector<RawEquation>& raw, const RingSpec& ring);

/// parse_raw_system followed by normalize_direction.
std::vector<Equation> parse_system(std::string_view text, const RingSpec& ring);
/// Left hand sides only; throws ParseError when any equation is affine.
std::vector<DiffPoly> parse_homogeneous(std::string_view text, const RingSpec& ring);
/// A single expression without "=".
DiffPoly parse_poly(std::string_view text, const RingSpec& ring);

/// Shift operator polynomial sum c_mu * S^mu, stored as a polynomial in
/// dependent 0.
using ShiftOperator = DiffPoly;

/// The operator row of p: entry k is the operator acting on dependent k.
std::vector<ShiftOperator> shift2pol(const DiffPoly& p, std::size_t m);
/// sum_k row[k] applied to targets[k].
DiffPoly pol2shift(const std::vector<ShiftOperator>& row, const std::vector<DiffPoly>& targets,
                   std::size_t n);
/// Ore product a * b.
ShiftOperator operator_product(const ShiftOperator& a, const ShiftOperator& b, std::size_t n);
/// Operator text like "n*S_n^2 - 1".
ShiftOperator parse_operator(std::string_view text, const RingSpec& ring);

// ---------------------------------------------------------------- output

std::string format_monomial(const Monomial& u, const RingSpec& ring);
/// Terms by descending rank, mirroring the input grammar.
std::string format_poly(const DiffPoly& p, const RingSpec& ring, const Ranking& rk);
std::string format_equation(const Equation& e, const RingSpec& ring, const Ranking& rk);
std::string format_coefficient(const RatFun& c, const RingSpec& ring);
/// "(S_x - 1)*u + n*S_n*f".
std::string format_operator_form(const DiffPoly& p, const RingSpec& ring, const Ranking& rk);
std::string format_operator(const ShiftOperator& op, const RingSpec& ring, const Ranking& rk);

std::string format_pattern(const RelationPattern& p, const RingSpec& ring);
RelationPattern parse_pattern(std::string_view text, const RingSpec& ring);
/// One pattern per line; blank lines and lines starting with '#' are skipped.
RelationSet parse_relations(std::string_view text, const RingSpec& ring);

std::string ranking_name(const Ranking& rk);

/// Everything a command can report. Unset parts are omitted in text output
/// and rendered empty in JSON.
struct Report {
  const RingSpec* ring = nullptr;
  const Ranking* ranking = nullptr;
  DivisionMode mode = DivisionMode::Janet;
  std::vector<std::string> elements;
  std::vector<std::string> masters;
  std::optional<bool> finite;
  std::string series;
  std::vector<std::string> conditions;
  std::vector<std::string> reduced;
  std::vector<std::pair<std::string, std::string>> extras;  // key, JSON-encoded value
};

Report make_report(const Basis& J);
std::string serialize(const Report& r, OutputFormat format);

}  // namespace lindiff
