#include "chaincode/analysis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "chaincode/errors.hpp"
#include "chaincode/theory.hpp"

namespace chaincode {

namespace {

struct BaseTables {
  std::uint32_t size = 0;
  std::vector<std::uint32_t> mul, add, neg;  // packed R arithmetic
};

BaseTables base_tables(const ChainRing& base) {
  BaseTables t;
  t.size = static_cast<std::uint32_t>(base.size());
  t.mul.resize(std::size_t{t.size} * t.size);
  t.add.resize(std::size_t{t.size} * t.size);
  t.neg.resize(t.size);
  std::vector<RingElement> elems;
  for (std::uint32_t r = 0; r < t.size; ++r) elems.push_back(base.element(r));
  for (std::uint32_t a = 0; a < t.size; ++a) {
    t.neg[a] = static_cast<std::uint32_t>(base.index(base.neg(elems[a])));
    for (std::uint32_t b = 0; b < t.size; ++b) {
      t.mul[a * t.size + b] = static_cast<std::uint32_t>(base.index(base.mul(elems[a], elems[b])));
      t.add[a * t.size + b] = static_cast<std::uint32_t>(base.index(base.add(elems[a], elems[b])));
    }
  }
  return t;
}

// Runs fn(row) over every codeword, in chunks.
template <typename Fn>
void for_each_codeword(const TraceCode& code, int threads, Fn fn) {
  constexpr std::uint64_t chunk_rows = 1024;
  const std::uint64_t n = code.length();
  std::vector<std::uint32_t> buf;
  for (std::uint64_t first = 0; first < code.code_size(); first += chunk_rows) {
    const std::uint64_t count = std::min(chunk_rows, code.code_size() - first);
    buf.resize(count * n);
    kernels::omp::materialize(code.tables(), first, count, buf, threads);
    for (std::uint64_t r = 0; r < count; ++r)
      if (!fn(first + r, &buf[r * n])) return;
  }
}

}  // namespace

DualSearchReport dual_low_weight_search(const TraceCode& code, int threads) {
  const ChainRing& ext = code.ext();
  const ChainRing& base = code.base();
  const Field& f = ext.field();
  const std::uint32_t p = ext.p(), k = ext.k(), m = f.m();
  const std::uint64_t km = std::uint64_t{k} * m;
  const std::uint64_t n = code.length();
  const std::uint64_t rs = base.size();

  const long double work = static_cast<long double>(n) * n * rs * rs * km;
  if (work > kDualBudget)
    throw BudgetExceeded("dual search needs about " + std::to_string(static_cast<std::uint64_t>(work)) +
                         " checks; the cap is " + std::to_string(kDualBudget));
  std::uint64_t radix = 1;
  for (std::uint64_t l = 0; l < km; ++l) {
    if (radix > (std::uint64_t{1} << 63) / rs)
      throw BudgetExceeded("column signatures of " + std::to_string(km) + " digits base " + std::to_string(rs) +
                           " do not fit 63 bits");
    radix *= rs;
  }

  const BaseTables bt = base_tables(base);

  // F_p-basis alpha^j u^i of the extension ring, i outer.
  std::vector<RingElement> basis;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      RingElement b = ext.zero();
      b.coeffs[i] = f.exp(j);
      basis.push_back(b);
    }

  kernels::DualTables dt;
  dt.positions = n;
  dt.ring_size = static_cast<std::uint32_t>(rs);
  dt.product_code.resize(n * rs);
  dt.negated_code.resize(n * rs);
  dt.hom_weight.resize(rs);
  for (std::uint64_t r = 0; r < rs; ++r) dt.hom_weight[r] = static_cast<std::uint32_t>(hom_weight(base, base.element(r)));

  std::vector<std::uint32_t> column(km);
  for (std::uint64_t x = 0; x < n; ++x) {
    const auto& d = code.set().elements[x];
    for (std::uint64_t l = 0; l < km; ++l)
      column[l] = static_cast<std::uint32_t>(base.index(ext.trace(ext.mul(basis[l], d))));
    for (std::uint64_t g = 0; g < rs; ++g) {
      std::uint64_t prod = 0, negd = 0;
      for (std::uint64_t l = km; l-- > 0;) {
        const std::uint32_t v = bt.mul[g * rs + column[l]];
        prod = prod * rs + v;
        negd = negd * rs + bt.neg[v];
      }
      dt.product_code[x * rs + g] = prod;
      dt.negated_code[x * rs + g] = negd;
    }
  }

  DualSearchReport rep;
  rep.claimed = claimed_dual_distance(p, k);

  // Support 1: gamma * column(x) = 0.
  std::optional<std::tuple<std::uint64_t, std::uint64_t, std::uint32_t>> best1;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint32_t g = 1; g < rs; ++g)
      if (dt.product_code[x * rs + g] == 0) {
        const auto cand = std::make_tuple(std::uint64_t{dt.hom_weight[g]}, x, g);
        if (!best1 || cand < *best1) best1 = cand;
      }

  const kernels::PairHit best2 = kernels::omp::dual_pair_scan(dt, threads);
  const bool have2 = best2.weight != std::numeric_limits<std::uint64_t>::max();

  DualWitness w;
  if (best1) {
    rep.support1_found = true;
    rep.min_weight_support1 = std::get<0>(*best1);
  }
  if (have2) rep.min_weight_support2 = best2.weight;
  if (best1 && (!have2 || std::get<0>(*best1) <= best2.weight)) {
    w.positions = {std::get<1>(*best1)};
    w.values = {base.element(std::get<2>(*best1))};
    w.weight = std::get<0>(*best1);
  } else if (have2) {
    w.positions = {best2.x, best2.y};
    w.values = {base.element(best2.alpha), base.element(best2.beta)};
    w.weight = best2.weight;
  }

  if (!w.positions.empty()) {
    rep.computed = w.weight;
    // (p-1)p^{k-2} is the smallest nonzero hom weight.
    rep.exact = 2 * w.weight <= 3 * rep.claimed;
    std::vector<std::uint32_t> vals;
    for (const auto& v : w.values) vals.push_back(static_cast<std::uint32_t>(base.index(v)));
    bool ok = true;
    for_each_codeword(code, threads, [&](std::uint64_t, const std::uint32_t* row) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < vals.size(); ++i) acc = bt.add[acc * rs + bt.mul[vals[i] * rs + row[w.positions[i]]]];
      ok = acc == 0;
      return ok;
    });
    rep.witness_verified = ok;
    if (!ok) throw VerificationError("dual witness fails the full inner-product check");
    rep.witness = std::move(w);
    rep.label = rep.exact ? "exact" : "upper bound only; support >= 3 words not searched";
  } else {
    rep.label = "no dual word of support <= 2";
  }
  return rep;
}

MinimalityReport minimal_codewords_check(const TraceCode& code, int threads) {
  const std::uint64_t total = code.code_size();
  if (total > kMinimalityBudget)
    throw BudgetExceeded("minimality scan over " + std::to_string(total) + " codewords exceeds the cap " +
                         std::to_string(kMinimalityBudget));
  const ChainRing& ext = code.ext();
  const ChainRing& base = code.base();
  const Field& f = ext.field();
  const std::uint32_t p = ext.p();

  // Scalar multiples lambda c share a support; keep the smallest index.
  std::vector<std::uint64_t> reps;
  for (std::uint64_t a = 1; a < total; ++a) {
    const auto e = ext.element(a);
    bool smallest = true;
    for (std::uint32_t lam = 2; lam < p && smallest; ++lam)
      if (ext.index(ext.scalar_mul(f.from_int(lam), e)) < a) smallest = false;
    if (smallest) reps.push_back(a);
  }

  std::vector<GrayVector> gray(base.size());
  for (std::uint64_t r = 0; r < base.size(); ++r) gray[r] = gray_map(base, base.element(r));
  const std::uint64_t block = gray[0].size();
  const std::uint64_t bits = block * code.length();
  const std::size_t words = static_cast<std::size_t>((bits + 63) / 64);

  std::vector<std::uint64_t> rows(reps.size() * words, 0);
  std::vector<std::uint64_t> weights(reps.size(), 0);
  std::vector<std::uint32_t> row(code.length());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    kernels::omp::materialize(code.tables(), reps[i], 1, row, 1);
    std::uint64_t* bitset = &rows[i * words];
    for (std::uint64_t j = 0; j < code.length(); ++j) {
      const auto& g = gray[row[j]];
      for (std::uint64_t e = 0; e < block; ++e)
        if (g[e] != 0) {
          const std::uint64_t b = j * block + e;
          bitset[b / 64] |= std::uint64_t{1} << (b % 64);
        }
    }
    for (std::size_t w = 0; w < words; ++w) weights[i] += static_cast<std::uint64_t>(std::popcount(bitset[w]));
  }

  MinimalityReport rep;
  rep.classes = reps.size();
  if (!reps.empty()) {
    rep.w_min = *std::min_element(weights.begin(), weights.end());
    rep.w_max = *std::max_element(weights.begin(), weights.end());
    if (rep.w_min == 0) throw VerificationError("a nonzero ring element gives the zero codeword");
    rep.ab_ratio_ok = ashikhmin_barg(rep.w_min, rep.w_max, p);
  }
  const auto scan = kernels::omp::covering_scan(rows, words, weights, reps, kMaxViolations, threads);
  rep.violation_count = scan.violations;
  rep.violations = scan.witnesses;
  rep.all_minimal = scan.violations == 0;
  return rep;
}

bool ashikhmin_barg(std::uint64_t w_min, std::uint64_t w_max, std::uint64_t q) {
  if (w_min == 0 || w_max == 0) throw std::invalid_argument("weights must be positive");
  if (w_min > w_max) throw std::invalid_argument("w_min exceeds w_max");
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  const unsigned __int128 lhs = static_cast<unsigned __int128>(q) * w_min;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(q - 1) * w_max;
  return lhs > rhs;
}

}  // namespace chaincode
