#pragma once

// Low-support search for dual codewords under the homogeneous weight, and the
// minimal-codeword scan of the Gray image.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincode/trace_codes.hpp"

namespace chaincode {

struct DualWitness {
  std::vector<std::uint64_t> positions;  // indices into D
  std::vector<RingElement> values;       // nonzero elements of R
  std::uint64_t weight = 0;
};

struct DualSearchReport {
  bool support1_found = false;
  std::optional<std::uint64_t> min_weight_support1;
  std::optional<std::uint64_t> min_weight_support2;
  std::optional<DualWitness> witness;  // lightest over supports 1 and 2
  std::uint64_t claimed = 0;           // 2(p-1)p^{k-2}
  // Upper bound from the search, the lightest witness found.
  std::optional<std::uint64_t> computed;
  // computed <= 3 (p-1) p^{k-2}: no word of support >= 3 can be lighter.
  bool exact = false;
  bool witness_verified = false;  // checked against every codeword
  std::string label;
};

// Throws BudgetExceeded when |D|^2 p^{2k} km > kDualBudget or the packed
// column signatures do not fit 63 bits.
inline constexpr std::uint64_t kDualBudget = 1'000'000'000;
DualSearchReport dual_low_weight_search(const TraceCode& code, int threads = 0);

struct MinimalityReport {
  bool all_minimal = true;
  // (covering, covered) as indices a of the extension ring; representatives
  // of F_p^* classes.
  std::vector<kernels::CoverPair> violations;
  std::uint64_t violation_count = 0;
  std::uint64_t classes = 0;  // nonzero codewords up to F_p^* scaling
  std::uint64_t w_min = 0;
  std::uint64_t w_max = 0;
  bool ab_ratio_ok = false;
};

inline constexpr std::uint64_t kMinimalityBudget = 10'000;
inline constexpr std::size_t kMaxViolations = 10;
// Throws BudgetExceeded when p^{km} > kMinimalityBudget.
MinimalityReport minimal_codewords_check(const TraceCode& code, int threads = 0);

// q w_min > (q - 1) w_max. Throws std::invalid_argument unless
// 0 < w_min <= w_max and q >= 2.
bool ashikhmin_barg(std::uint64_t w_min, std::uint64_t w_max, std::uint64_t q);

}  // namespace chaincode
