#pragma once

// Closed-form weight distributions for the three code families, the
// Gauss-sum count of trace zeros over the coset representatives, the Griesmer
// bound and the optimality thresholds on m.
//
// All closed-form weights are evaluated in exact rational arithmetic. A
// non-integral weight is a precondition failure, never rounded.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "chaincode/defining_sets.hpp"
#include "chaincode/field.hpp"

namespace chaincode {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Checked integer power; throws std::overflow_error.
std::int64_t ipow(std::int64_t base, std::uint64_t exp);

enum class PredictionKind { two_weight, three_weight, bounds_only, not_applicable };

std::string to_string(PredictionKind k);

struct BoundsReport {
  // The lower bound is irrational for odd m; lower_exact is set when m is even.
  double lower = 0.0;
  std::optional<Rational> lower_exact;
  Rational upper;
  std::uint64_t max_weight_count = 0;
};

struct Prediction {
  bool applicable = false;
  std::string reason;
  std::string family;  // e.g. "d1/m-even", "d3/n2=1", "d3/three-weight-b"
  PredictionKind kind = PredictionKind::not_applicable;
  // Nonzero (weight, frequency), strictly increasing weights.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> weights;
  std::uint64_t length = 0;      // Gray length N_i
  std::uint64_t dimension = 0;   // km
  std::optional<BoundsReport> bounds;
};

// N_i = p^{k-1} |D_i|.
std::uint64_t gray_code_length(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k,
                               std::uint64_t nprime = 0);

// Requires odd p.
Prediction predict_d1(std::uint32_t p, std::uint32_t m, std::uint32_t k);
Prediction predict_d2(std::uint32_t p, std::uint32_t m, std::uint32_t k);
// Requires N' | p^m - 1.
Prediction predict_d3(std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime);
Prediction predict(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime = 0);

// Lower/upper bounds on the weights of a'u^{k-1} codewords of the D3 code
// when 1 < N'_2 < p^{m/2} + 1 (and m even, or p = 3 mod 4). nullopt when the
// hypotheses fail.
std::optional<BoundsReport> d3_weight_bounds(std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime);

// Smallest k' >= 1 with p^{k'} = -1 mod n, if any.
std::optional<std::uint64_t> minus_one_exponent(std::uint32_t p, std::uint64_t n);

// |{j : tr(b d_j) = 0}| from the Gauss-sum formula. Throws VerificationError
// when the formula value is not an integer within 1e-6.
std::uint64_t eq1_count(const Field& f, FieldElement b, std::uint64_t nprime);
// The same count by direct enumeration of the representatives.
std::uint64_t direct_trace_zero_count(const Field& f, FieldElement b, std::uint64_t nprime);

// sum_{i=0}^{K-1} ceil(d / p^i). Requires K >= 1.
std::uint64_t griesmer_sum(std::uint64_t p, std::uint64_t K, std::uint64_t d);
// An [n, K, d] code meets the bound and no [n, K, d+1] code can exist.
bool is_griesmer_optimal(std::uint64_t n, std::uint64_t K, std::uint64_t d, std::uint64_t p);

struct OptimalityThreshold {
  std::int64_t min_m = 0;        // max{k, floor(.) + 1}
  std::int64_t floor_term = 0;   // the floor(.) + 1 part alone
  std::string side_condition;
};

// Throws std::invalid_argument for k < 2.
OptimalityThreshold optimality_threshold(SetKind kind, std::uint32_t p, std::uint32_t k);
// m >= min_m and the family's side condition at this m (N' used for D3).
bool optimality_conditions_hold(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k,
                                std::uint64_t nprime = 0);
// First m >= min_m meeting the side condition; D1 only needs p = 3 mod 4 and
// odd m. nullopt when no m qualifies.
std::optional<std::int64_t> smallest_usable_m(SetKind kind, std::uint32_t p, std::uint32_t k);

// k = 2 comparison against the earlier F_p + uF_p construction, which uses
// the same ring and defining set but an order-p Gray map: weights of both,
// listed in the same order, and the length ratio.
struct K2Comparison {
  std::vector<Rational> weights;          // this construction
  std::vector<Rational> earlier_weights;  // F_p + uF_p construction
  Rational length;                        // (p^m - 1) p^{m+1} / 2
  Rational earlier_length;                // p^{2m} - p^m
};
// Requires odd p and k = 2; m even gives three weights, m odd two.
K2Comparison k2_comparison(std::uint32_t p, std::uint32_t m);

// Claimed dual homogeneous distance 2(p-1)p^{k-2}.
std::uint64_t claimed_dual_distance(std::uint32_t p, std::uint32_t k);

}  // namespace chaincode
