#pragma once

// Flat, table-driven enumeration kernels. Every kernel exists twice: an OpenMP
// version (namespace omp) and a plain serial loop (namespace serial) kept as
// the reference for tests and benchmarks. Both must return identical results
// for every thread count.
//
// Packed conventions:
//   - an element of the extension ring is indexed a_0 q^{k-1} + ... + a_{k-1};
//   - an element of the base ring R is packed the same way with q = p;
//   - coefficients of the defining set are stored as discrete logs, kZeroLog
//     for zero.

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace chaincode {
class ChainRing;
struct DefiningSet;
}  // namespace chaincode

namespace chaincode::kernels {

inline constexpr std::uint32_t kZeroLog = std::numeric_limits<std::uint32_t>::max();

struct EvalTables {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::uint32_t order = 0;  // q - 1
  std::uint64_t length = 0;     // |D|
  std::uint64_t code_size = 0;  // q^k
  std::vector<std::uint32_t> trace_exp2;  // tr(alpha^t) for t < 2(q-1)
  std::vector<std::uint32_t> field_log;   // per packed F_q element
  std::vector<std::uint32_t> set_logs;    // length * k
  std::vector<std::uint32_t> hom_weight;  // per packed R element
  std::vector<std::uint32_t> gray_weight;  // Hamming weight of the Gray image, per packed R element
};

EvalTables make_tables(const ChainRing& ext, const DefiningSet& set);

inline void decode_logs(const EvalTables& t, std::uint64_t a_index, std::uint32_t* a_logs) {
  for (std::uint32_t i = t.k; i-- > 0;) {
    a_logs[i] = t.field_log[a_index % t.q];
    a_index /= t.q;
  }
}

// Packed Tr(a d) for one coordinate. Uses tr(sum) = sum tr, so no field
// additions are needed.
inline std::uint32_t eval_coord(const EvalTables& t, const std::uint32_t* a_logs, const std::uint32_t* d_logs) {
  std::uint32_t packed = 0;
  for (std::uint32_t l = 0; l < t.k; ++l) {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i <= l; ++i) {
      const std::uint32_t x = a_logs[i], y = d_logs[l - i];
      if (x != kZeroLog && y != kZeroLog) s += t.trace_exp2[x + y];
    }
    packed = packed * t.p + s % t.p;
  }
  return packed;
}

enum class WeightTable { homogeneous, gray_hamming };

using Histogram = std::map<std::uint64_t, std::uint64_t>;

// One entry of the covering scan: codeword `covering` covers `covered`.
struct CoverPair {
  std::uint64_t covering = 0;
  std::uint64_t covered = 0;
  friend auto operator<=>(const CoverPair&, const CoverPair&) = default;
};

struct CoverScan {
  std::uint64_t violations = 0;    // total number of covering pairs
  std::vector<CoverPair> witnesses;  // first max_witnesses in (covering, covered) order
};

// Support-2 dual search result. Weights are hom weights of the two values.
struct PairHit {
  std::uint64_t weight = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t x = 0, y = 0;        // positions, x < y
  std::uint32_t alpha = 0, beta = 0;  // packed R values
  friend auto operator<=>(const PairHit&, const PairHit&) = default;
};

// Signature of a position: code of gamma * column(x) for every gamma in R,
// indexed [x * ring_size + gamma].
struct DualTables {
  std::uint64_t positions = 0;
  std::uint32_t ring_size = 0;
  std::vector<std::uint64_t> product_code;  // gamma * column(x)
  std::vector<std::uint64_t> negated_code;  // -(gamma * column(x))
  std::vector<std::uint32_t> hom_weight;    // per packed R element
};

namespace omp {
Histogram weight_histogram(const EvalTables& t, WeightTable which, int threads);
// Writes the packed codewords for a in [first, first + count), row-major.
void materialize(const EvalTables& t, std::uint64_t first, std::uint64_t count, std::span<std::uint32_t> out,
                 int threads);
// rows: bitsets, words_per_row 64-bit words each; weights: popcounts.
CoverScan covering_scan(std::span<const std::uint64_t> rows, std::size_t words_per_row,
                        std::span<const std::uint64_t> weights, std::span<const std::uint64_t> labels,
                        std::size_t max_witnesses, int threads);
PairHit dual_pair_scan(const DualTables& d, int threads);
}  // namespace omp

namespace serial {
Histogram weight_histogram(const EvalTables& t, WeightTable which);
void materialize(const EvalTables& t, std::uint64_t first, std::uint64_t count, std::span<std::uint32_t> out);
CoverScan covering_scan(std::span<const std::uint64_t> rows, std::size_t words_per_row,
                        std::span<const std::uint64_t> weights, std::span<const std::uint64_t> labels,
                        std::size_t max_witnesses);
PairHit dual_pair_scan(const DualTables& d);
}  // namespace serial

}  // namespace chaincode::kernels
