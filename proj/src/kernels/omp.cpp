#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "chaincode/kernels.hpp"

namespace chaincode::kernels::omp {

namespace {

int resolve(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

}  // namespace

Histogram weight_histogram(const EvalTables& t, WeightTable which, int threads) {
  const auto& table = which == WeightTable::homogeneous ? t.hom_weight : t.gray_weight;
  Histogram hist;
  const auto total = static_cast<std::int64_t>(t.code_size);
#pragma omp parallel num_threads(resolve(threads))
  {
    Histogram local;
    std::vector<std::uint32_t> a_logs(t.k);
#pragma omp for schedule(static)
    for (std::int64_t a = 0; a < total; ++a) {
      decode_logs(t, static_cast<std::uint64_t>(a), a_logs.data());
      std::uint64_t w = 0;
      for (std::uint64_t j = 0; j < t.length; ++j) w += table[eval_coord(t, a_logs.data(), &t.set_logs[j * t.k])];
      ++local[w];
    }
#pragma omp critical(chaincode_histogram_merge)
    for (const auto& [w, c] : local) hist[w] += c;
  }
  return hist;
}

void materialize(const EvalTables& t, std::uint64_t first, std::uint64_t count, std::span<std::uint32_t> out,
                 int threads) {
  if (out.size() < count * t.length) throw std::invalid_argument("output buffer too small");
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(resolve(threads))
  {
    std::vector<std::uint32_t> a_logs(t.k);
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
      decode_logs(t, first + static_cast<std::uint64_t>(r), a_logs.data());
      std::uint32_t* row = &out[static_cast<std::uint64_t>(r) * t.length];
      for (std::uint64_t j = 0; j < t.length; ++j) row[j] = eval_coord(t, a_logs.data(), &t.set_logs[j * t.k]);
    }
  }
}

CoverScan covering_scan(std::span<const std::uint64_t> rows, std::size_t words_per_row,
                        std::span<const std::uint64_t> weights, std::span<const std::uint64_t> labels,
                        std::size_t max_witnesses, int threads) {
  const auto n = static_cast<std::int64_t>(weights.size());
  // Per-row results merged in row order keep the witness list independent of
  // the schedule.
  std::vector<std::uint64_t> counts(weights.size(), 0);
  std::vector<std::vector<CoverPair>> found(weights.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve(threads))
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t* ri = &rows[static_cast<std::size_t>(i) * words_per_row];
    for (std::int64_t j = 0; j < n; ++j) {
      if (j == i || weights[j] > weights[i]) continue;
      const std::uint64_t* rj = &rows[static_cast<std::size_t>(j) * words_per_row];
      bool subset = true;
      for (std::size_t w = 0; w < words_per_row; ++w) {
        if (rj[w] & ~ri[w]) {
          subset = false;
          break;
        }
      }
      if (!subset) continue;
      ++counts[i];
      if (found[i].size() < max_witnesses) found[i].push_back({labels[i], labels[j]});
    }
  }
  CoverScan scan;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    scan.violations += counts[i];
    for (const auto& c : found[i]) {
      if (scan.witnesses.size() >= max_witnesses) break;
      scan.witnesses.push_back(c);
    }
  }
  return scan;
}

PairHit dual_pair_scan(const DualTables& d, int threads) {
  PairHit best;
  const std::uint32_t rs = d.ring_size;
  const auto n = static_cast<std::int64_t>(d.positions);
#pragma omp parallel num_threads(resolve(threads))
  {
    PairHit local;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t xi = 0; xi < n; ++xi) {
      const auto x = static_cast<std::uint64_t>(xi);
      for (std::uint64_t y = x + 1; y < d.positions; ++y) {
        for (std::uint32_t a = 1; a < rs; ++a) {
          const std::uint64_t lhs = d.product_code[x * rs + a];
          for (std::uint32_t b = 1; b < rs; ++b) {
            if (lhs != d.negated_code[y * rs + b]) continue;
            const PairHit hit{std::uint64_t{d.hom_weight[a]} + d.hom_weight[b], x, y, a, b};
            if (hit < local) local = hit;
          }
        }
      }
    }
#pragma omp critical(chaincode_pair_merge)
    if (local < best) best = local;
  }
  return best;
}

}  // namespace chaincode::kernels::omp
