#include "chaincode/chain_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace chaincode {

std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::zero: return "zero";
    case ElementClass::socle_nonzero: return "socle_nonzero";
    case ElementClass::maximal_not_socle: return "maximal_not_socle";
    case ElementClass::unit: return "unit";
  }
  return "?";
}

ChainRing::ChainRing(Field field, std::uint32_t k) : field_(std::move(field)), k_(k), size_(1) {
  if (k < 2) throw std::invalid_argument("nilpotency index k must be at least 2");
  for (std::uint32_t i = 0; i < k; ++i) size_ *= field_.q();
}

ChainRing ChainRing::base_ring() const {
  if (is_base()) return *this;
  return ChainRing(Field(p(), 1), k_);
}

void ChainRing::check(const RingElement& a) const {
  if (a.coeffs.size() != k_) throw std::invalid_argument("ring element has the wrong length for this ring");
  for (auto c : a.coeffs)
    if (!field_.contains(c)) throw std::invalid_argument("ring element coefficient outside the coefficient field");
}

RingElement ChainRing::zero() const { return {std::vector<FieldElement>(k_, field_.zero())}; }

RingElement ChainRing::one() const {
  auto r = zero();
  r.coeffs[0] = field_.one();
  return r;
}

RingElement ChainRing::u_power(std::uint32_t i) const {
  auto r = zero();
  if (i < k_) r.coeffs[i] = field_.one();
  return r;
}

RingElement ChainRing::make(std::vector<FieldElement> coeffs) const {
  RingElement r{std::move(coeffs)};
  check(r);
  return r;
}

RingElement ChainRing::from_ints(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != k_) throw std::invalid_argument("ring element has the wrong length for this ring");
  RingElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = field_.from_int(coeffs[i]);
  return r;
}

RingElement ChainRing::element(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("ring element index out of range");
  RingElement r = zero();
  for (std::uint32_t i = k_; i-- > 0;) {
    r.coeffs[i] = {static_cast<std::uint32_t>(index % field_.q())};
    index /= field_.q();
  }
  return r;
}

std::uint64_t ChainRing::index(const RingElement& a) const {
  check(a);
  std::uint64_t idx = 0;
  for (auto c : a.coeffs) idx = idx * field_.q() + c.value;
  return idx;
}

RingElement ChainRing::add(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = field_.add(a.coeffs[i], b.coeffs[i]);
  return r;
}

RingElement ChainRing::neg(const RingElement& a) const {
  check(a);
  RingElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = field_.neg(a.coeffs[i]);
  return r;
}

RingElement ChainRing::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement ChainRing::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (a.coeffs[i].value == 0) continue;
    for (std::uint32_t j = 0; i + j < k_; ++j)
      r.coeffs[i + j] = field_.add(r.coeffs[i + j], field_.mul(a.coeffs[i], b.coeffs[j]));
  }
  return r;
}

RingElement ChainRing::scalar_mul(FieldElement s, const RingElement& a) const {
  check(a);
  RingElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = field_.mul(s, a.coeffs[i]);
  return r;
}

RingElement ChainRing::inverse(const RingElement& a) const {
  check(a);
  if (a.coeffs[0].value == 0) throw std::domain_error("non-unit has no inverse");
  const FieldElement inv0 = field_.inv(a.coeffs[0]);
  RingElement b = zero();
  b.coeffs[0] = inv0;
  for (std::uint32_t l = 1; l < k_; ++l) {
    FieldElement s = field_.zero();
    for (std::uint32_t i = 1; i <= l; ++i) s = field_.add(s, field_.mul(a.coeffs[i], b.coeffs[l - i]));
    b.coeffs[l] = field_.neg(field_.mul(inv0, s));
  }
  return b;
}

ElementClass ChainRing::classify(const RingElement& a) const {
  check(a);
  if (a.coeffs[0].value != 0) return ElementClass::unit;
  const auto below_socle = std::span(a.coeffs).first(k_ - 1);
  if (std::any_of(below_socle.begin(), below_socle.end(), [](FieldElement c) { return c.value != 0; }))
    return ElementClass::maximal_not_socle;
  return a.coeffs[k_ - 1].value != 0 ? ElementClass::socle_nonzero : ElementClass::zero;
}

RingElement ChainRing::trace(const RingElement& a) const {
  check(a);
  RingElement r{std::vector<FieldElement>(k_)};
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = {field_.trace(a.coeffs[i])};
  return r;
}

RingElement ChainRing::embed(const RingElement& base_element) const {
  if (base_element.coeffs.size() != k_) throw std::invalid_argument("ring element has the wrong length");
  RingElement r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (base_element.coeffs[i].value >= p()) throw std::invalid_argument("not an element of the base ring");
    r.coeffs[i] = base_element.coeffs[i];
  }
  return r;
}

namespace {

void require_base(const ChainRing& base) {
  if (!base.is_base()) throw std::invalid_argument("operation is defined on the base ring F_p[u]/(u^k) only");
}

}  // namespace

GrayVector gray_map(const ChainRing& base, const RingElement& a) {
  require_base(base);
  base.check(a);
  const std::uint32_t p = base.p();
  const std::uint32_t k = base.k();
  std::uint64_t blocks = 1;
  for (std::uint32_t i = 0; i + 2 < k; ++i) blocks *= p;
  GrayVector b(blocks * p);
  for (std::uint64_t i = 0; i < blocks; ++i) {
    std::uint64_t digits = i;
    std::uint64_t acc = a.coeffs[k - 1].value;
    for (std::uint32_t l = 1; l + 1 < k; ++l) {
      acc += (digits % p) * a.coeffs[l].value;
      digits /= p;
    }
    for (std::uint32_t e = 0; e < p; ++e)
      b[i * p + e] = static_cast<std::uint32_t>((acc + std::uint64_t{e} * a.coeffs[0].value) % p);
  }
  return b;
}

GrayVector gray_map_vector(const ChainRing& base, std::span<const RingElement> c) {
  GrayVector out;
  for (const auto& x : c) {
    auto g = gray_map(base, x);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

std::uint64_t hom_weight(const ChainRing& base, const RingElement& a) {
  require_base(base);
  std::uint64_t top = 1;  // p^{k-1}
  for (std::uint32_t i = 0; i + 1 < base.k(); ++i) top *= base.p();
  switch (base.classify(a)) {
    case ElementClass::zero: return 0;
    case ElementClass::socle_nonzero: return top;
    default: return top / base.p() * (base.p() - 1);
  }
}

std::uint64_t hom_weight_vector(const ChainRing& base, std::span<const RingElement> c) {
  std::uint64_t w = 0;
  for (const auto& x : c) w += hom_weight(base, x);
  return w;
}

std::uint64_t hom_distance(const ChainRing& base, std::span<const RingElement> x, std::span<const RingElement> y) {
  if (x.size() != y.size()) throw std::invalid_argument("vectors differ in length");
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < x.size(); ++i) w += hom_weight(base, base.sub(x[i], y[i]));
  return w;
}

std::uint64_t hamming_weight(std::span<const std::uint32_t> y) {
  return static_cast<std::uint64_t>(std::count_if(y.begin(), y.end(), [](std::uint32_t v) { return v != 0; }));
}

}  // namespace chaincode
