#include "chaincode/chain_ring.hpp"
#include "chaincode/defining_sets.hpp"
#include "chaincode/kernels.hpp"

namespace chaincode::kernels {

EvalTables make_tables(const ChainRing& ext, const DefiningSet& set) {
  const Field& f = ext.field();
  const ChainRing base = ext.base_ring();
  EvalTables t;
  t.p = f.p();
  t.k = ext.k();
  t.q = f.q();
  t.order = f.q() - 1;
  t.length = set.size();
  t.code_size = ext.size();

  t.trace_exp2.resize(2 * static_cast<std::size_t>(t.order));
  for (std::uint32_t i = 0; i < 2 * t.order; ++i) t.trace_exp2[i] = f.trace_of_power(i);

  t.field_log.resize(t.q);
  t.field_log[0] = kZeroLog;
  for (std::uint32_t v = 1; v < t.q; ++v) t.field_log[v] = f.log({v});

  t.set_logs.reserve(set.size() * t.k);
  for (const auto& d : set.elements) {
    ext.check(d);
    for (auto c : d.coeffs) t.set_logs.push_back(t.field_log[c.value]);
  }

  t.hom_weight.resize(base.size());
  t.gray_weight.resize(base.size());
  for (std::uint64_t r = 0; r < base.size(); ++r) {
    const auto e = base.element(r);
    t.hom_weight[r] = static_cast<std::uint32_t>(hom_weight(base, e));
    t.gray_weight[r] = static_cast<std::uint32_t>(hamming_weight(gray_map(base, e)));
  }
  return t;
}

}  // namespace chaincode::kernels
