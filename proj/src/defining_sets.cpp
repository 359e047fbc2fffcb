#include "chaincode/defining_sets.hpp"

#include <numeric>
#include <stdexcept>

namespace chaincode {

std::string to_string(SetKind k) {
  switch (k) {
    case SetKind::d1: return "d1";
    case SetKind::d2: return "d2";
    case SetKind::d3: return "d3";
  }
  return "?";
}

SetKind parse_set_kind(const std::string& s) {
  if (s == "d1" || s == "D1") return SetKind::d1;
  if (s == "d2" || s == "D2") return SetKind::d2;
  if (s == "d3" || s == "D3") return SetKind::d3;
  throw std::invalid_argument("unknown defining set '" + s + "' (expected d1, d2 or d3)");
}

D3Params d3_params(std::uint32_t p, std::uint32_t m, std::uint64_t nprime) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  if (nprime == 0 || (q - 1) % nprime != 0)
    throw std::invalid_argument("N' = " + std::to_string(nprime) + " does not divide p^m - 1 = " +
                                std::to_string(q - 1));
  const std::uint64_t ratio = (q - 1) / (p - 1);
  D3Params d;
  d.nprime = nprime;
  d.gcd = std::gcd(nprime, ratio);
  d.lcm = std::lcm(nprime, ratio);
  d.n1 = d.lcm / nprime;
  return d;
}

std::vector<FieldElement> coset_representatives(const Field& f, std::uint64_t nprime) {
  const auto params = d3_params(f.p(), f.m(), nprime);
  std::vector<FieldElement> out;
  out.reserve(params.n1);
  for (std::uint64_t j = 0; j < params.n1; ++j) out.push_back(f.exp(nprime * j));
  return out;
}

namespace {

// Cartesian product {x_0} x F^{k-1} in canonical order.
DefiningSet expand(const ChainRing& ext, SetKind kind, const std::vector<FieldElement>& heads) {
  const Field& f = ext.field();
  const std::uint32_t k = ext.k();
  std::uint64_t tails = 1;
  for (std::uint32_t i = 1; i < k; ++i) tails *= f.q();
  DefiningSet d;
  d.kind = kind;
  d.elements.reserve(heads.size() * tails);
  for (auto x0 : heads) {
    for (std::uint64_t t = 0; t < tails; ++t) {
      RingElement e{std::vector<FieldElement>(k)};
      e.coeffs[0] = x0;
      std::uint64_t rest = t;
      for (std::uint32_t i = k; i-- > 1;) {
        e.coeffs[i] = {static_cast<std::uint32_t>(rest % f.q())};
        rest /= f.q();
      }
      d.elements.push_back(std::move(e));
    }
  }
  return d;
}

}  // namespace

DefiningSet build_d1(const ChainRing& ext) {
  const Field& f = ext.field();
  if (f.p() == 2) throw std::invalid_argument("D1 needs odd p (squares of F_{2^m} are the whole group)");
  std::vector<FieldElement> heads;
  for (std::uint64_t t = 0; t + 1 < f.q(); t += 2) heads.push_back(f.exp(t));
  return expand(ext, SetKind::d1, heads);
}

DefiningSet build_d2(const ChainRing& ext) {
  const Field& f = ext.field();
  std::vector<FieldElement> heads;
  for (std::uint64_t t = 0; t + 1 < f.q(); ++t) heads.push_back(f.exp(t));
  return expand(ext, SetKind::d2, heads);
}

DefiningSet build_d3(const ChainRing& ext, std::uint64_t nprime) {
  const Field& f = ext.field();
  auto d = expand(ext, SetKind::d3, coset_representatives(f, nprime));
  d.params = d3_params(f.p(), f.m(), nprime);
  return d;
}

DefiningSet build_set(const ChainRing& ext, SetKind kind, std::uint64_t nprime) {
  switch (kind) {
    case SetKind::d1: return build_d1(ext);
    case SetKind::d2: return build_d2(ext);
    case SetKind::d3: return build_d3(ext, nprime);
  }
  throw std::invalid_argument("unknown defining set");
}

std::uint64_t expected_size(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  std::uint64_t fiber = 1;
  for (std::uint32_t i = 1; i < k; ++i) fiber *= q;
  switch (kind) {
    case SetKind::d1: return fiber * (q - 1) / 2;
    case SetKind::d2: return fiber * (q - 1);
    case SetKind::d3: return fiber * d3_params(p, m, nprime).n1;
  }
  return 0;
}

}  // namespace chaincode
