#include <stdexcept>

#include "chaincode/kernels.hpp"

namespace chaincode::kernels::serial {

Histogram weight_histogram(const EvalTables& t, WeightTable which) {
  const auto& table = which == WeightTable::homogeneous ? t.hom_weight : t.gray_weight;
  Histogram hist;
  std::vector<std::uint32_t> a_logs(t.k);
  for (std::uint64_t a = 0; a < t.code_size; ++a) {
    decode_logs(t, a, a_logs.data());
    std::uint64_t w = 0;
    for (std::uint64_t j = 0; j < t.length; ++j) w += table[eval_coord(t, a_logs.data(), &t.set_logs[j * t.k])];
    ++hist[w];
  }
  return hist;
}

void materialize(const EvalTables& t, std::uint64_t first, std::uint64_t count, std::span<std::uint32_t> out) {
  if (out.size() < count * t.length) throw std::invalid_argument("output buffer too small");
  std::vector<std::uint32_t> a_logs(t.k);
  for (std::uint64_t r = 0; r < count; ++r) {
    decode_logs(t, first + r, a_logs.data());
    for (std::uint64_t j = 0; j < t.length; ++j)
      out[r * t.length + j] = eval_coord(t, a_logs.data(), &t.set_logs[j * t.k]);
  }
}

CoverScan covering_scan(std::span<const std::uint64_t> rows, std::size_t words_per_row,
                        std::span<const std::uint64_t> weights, std::span<const std::uint64_t> labels,
                        std::size_t max_witnesses) {
  const std::size_t n = weights.size();
  CoverScan scan;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* ri = &rows[i * words_per_row];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || weights[j] > weights[i]) continue;
      const std::uint64_t* rj = &rows[j * words_per_row];
      bool subset = true;
      for (std::size_t w = 0; w < words_per_row; ++w) {
        if (rj[w] & ~ri[w]) {
          subset = false;
          break;
        }
      }
      if (!subset) continue;
      ++scan.violations;
      if (scan.witnesses.size() < max_witnesses) scan.witnesses.push_back({labels[i], labels[j]});
    }
  }
  return scan;
}

PairHit dual_pair_scan(const DualTables& d) {
  PairHit best;
  const std::uint32_t rs = d.ring_size;
  for (std::uint64_t x = 0; x < d.positions; ++x) {
    for (std::uint64_t y = x + 1; y < d.positions; ++y) {
      for (std::uint32_t a = 1; a < rs; ++a) {
        const std::uint64_t lhs = d.product_code[x * rs + a];
        for (std::uint32_t b = 1; b < rs; ++b) {
          if (lhs != d.negated_code[y * rs + b]) continue;
          const PairHit hit{std::uint64_t{d.hom_weight[a]} + d.hom_weight[b], x, y, a, b};
          if (hit < best) best = hit;
        }
      }
    }
  }
  return best;
}

}  // namespace chaincode::kernels::serial
