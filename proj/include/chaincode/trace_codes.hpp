#pragma once

// Trace codes C_D = {(Tr(a d))_{d in D} : a in the extension ring}, their
// homogeneous / Gray-Hamming weight enumerators and structural checks.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaincode/chain_ring.hpp"
#include "chaincode/defining_sets.hpp"
#include "chaincode/kernels.hpp"

namespace chaincode {

struct WeightEnumerator {
  // Sorted by weight, zero frequencies omitted.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;

  static WeightEnumerator from_histogram(const kernels::Histogram& h);

  std::uint64_t total() const;
  std::uint64_t frequency(std::uint64_t weight) const;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nonzero() const;
  std::optional<std::uint64_t> min_nonzero() const;
  std::optional<std::uint64_t> max_nonzero() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

std::string to_string(const WeightEnumerator& e);

using Codeword = std::vector<RingElement>;

class TraceCode {
 public:
  // Hard cap on |code| * |D| coordinate evaluations.
  static constexpr std::uint64_t kEvaluationBudget = 100'000'000;

  // Throws BudgetExceeded beyond kEvaluationBudget.
  TraceCode(ChainRing ext, DefiningSet set);

  const ChainRing& ext() const { return ext_; }
  const ChainRing& base() const { return base_; }
  const DefiningSet& set() const { return set_; }
  const kernels::EvalTables& tables() const { return tables_; }

  std::uint64_t length() const { return set_.size(); }
  std::uint64_t gray_length() const;
  std::uint64_t code_size() const { return ext_.size(); }
  std::uint64_t dimension() const { return std::uint64_t{ext_.field().m()} * ext_.k(); }

  // Coordinates Tr(a d_j) through the generic ring arithmetic.
  Codeword evaluate(const RingElement& a) const;
  // Same codeword through the flat kernel tables, as packed base-ring values.
  std::vector<std::uint32_t> evaluate_packed(std::uint64_t a_index) const;

 private:
  ChainRing ext_;
  ChainRing base_;
  DefiningSet set_;
  kernels::EvalTables tables_;
};

// Exact histogram of hom weights over every a; parallel over a.
WeightEnumerator hom_weight_enumerator(const TraceCode& code, int threads = 0);
// Gray-image Hamming weights through the per-element Gray tables; parallel.
WeightEnumerator gray_weight_enumerator(const TraceCode& code, int threads = 0);

// Serial references through the public ring API: generic multiplication and
// trace, then hom_weight_vector / concatenated gray_map respectively.
WeightEnumerator reference_hom_weight_enumerator(const TraceCode& code);
WeightEnumerator reference_gray_weight_enumerator(const TraceCode& code);

struct CodeSummary {
  std::uint32_t alphabet = 0;  // p
  std::uint64_t length = 0;        // |D| over R
  std::uint64_t gray_length = 0;   // p^{k-1} |D|
  std::uint64_t code_size = 0;     // p^{km}
  std::uint64_t gray_dimension = 0;  // km
  std::uint64_t min_distance = 0;
  WeightEnumerator enumerator;
};

// Runs both enumerators and insists they agree (isometry) and that only a = 0
// maps to the zero word (injectivity, by additivity of evaluation). Throws
// VerificationError otherwise.
CodeSummary gray_image_summary(const TraceCode& code, int threads = 0);

// Theta(y) = sum_j omega^{y_j}.
Complex theta(std::span<const std::uint32_t> y, std::uint32_t p);
// Theta of the Gray image of evaluate(a).
Complex theta_sum(const TraceCode& code, const RingElement& a);

// sum over x_1..x_{k-2} in F_q of omega^{tr(B)}, B = sum_{i=1}^{k-2} a_i x_{k-1-i}.
Complex fiber_character_sum(const ChainRing& ext, const RingElement& a);

struct RegularActionReport {
  bool ok = true;
  std::uint64_t trials = 0;
  std::optional<std::string> witness;
};

// For random u', v' in D (D1 or D2), checks that x -> (u'/v') x permutes D and
// that the induced coordinate permutation maps the code onto itself.
RegularActionReport regular_action_check(const TraceCode& code, std::uint64_t trials, std::uint64_t seed = 1);
// Every ordered pair (u', v') in D x D.
RegularActionReport regular_action_exhaustive(const TraceCode& code);

// "a0|a1|...|a(k-1)" per coordinate, comma separated, one codeword per line,
// a in lexicographic order.
void write_ring_dump(const TraceCode& code, std::ostream& out, int threads = 0);
// One digit string of length gray_length per codeword (digits 0-9a-z).
void write_gray_dump(const TraceCode& code, std::ostream& out, int threads = 0);

}  // namespace chaincode
