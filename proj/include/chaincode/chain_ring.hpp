#pragma once

// The chain ring F[u]/(u^k) over F = F_p (the base ring R) or F = F_{p^m} (the
// extension ring), with the generalized trace between them, the Gray map on R
// and the homogeneous weight.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chaincode/field.hpp"

namespace chaincode {

// a_0 + a_1 u + ... + a_{k-1} u^{k-1}; always fully reduced.
struct RingElement {
  std::vector<FieldElement> coeffs;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

enum class ElementClass { zero, socle_nonzero, maximal_not_socle, unit };

std::string to_string(ElementClass c);

// Gray image of one element of R: p^{k-1} residues mod p.
using GrayVector = std::vector<std::uint32_t>;

class ChainRing {
 public:
  // Throws std::invalid_argument for k < 2.
  ChainRing(Field field, std::uint32_t k);

  const Field& field() const { return field_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t p() const { return field_.p(); }
  // q^k
  std::uint64_t size() const { return size_; }
  bool is_base() const { return field_.m() == 1; }
  // F_p[u]/(u^k) with the same k.
  ChainRing base_ring() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement u_power(std::uint32_t i) const;
  RingElement make(std::vector<FieldElement> coeffs) const;
  RingElement from_ints(std::span<const std::int64_t> coeffs) const;

  // Lexicographic enumeration, a_0 slowest, each coefficient in packed order.
  RingElement element(std::uint64_t index) const;
  std::uint64_t index(const RingElement& a) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  // Convolution in u truncated at degree k-1.
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement scalar_mul(FieldElement s, const RingElement& a) const;
  // Throws std::domain_error for non-units.
  RingElement inverse(const RingElement& a) const;

  ElementClass classify(const RingElement& a) const;
  bool is_unit(const RingElement& a) const { return classify(a) == ElementClass::unit; }

  // Tr(a_0 + ... + a_{k-1}u^{k-1}) = tr(a_0) + ... + tr(a_{k-1})u^{k-1}, an
  // element of base_ring().
  RingElement trace(const RingElement& a) const;
  // The inclusion R -> this ring (residues become prime-subfield constants).
  RingElement embed(const RingElement& base_element) const;

  void check(const RingElement& a) const;

  friend bool operator==(const ChainRing& a, const ChainRing& b) {
    return a.field_ == b.field_ && a.k_ == b.k_;
  }

 private:
  Field field_;
  std::uint32_t k_;
  std::uint64_t size_;
};

// The following require an element of the base ring R (field degree 1).

// b_{ip+e} = a_{k-1} + sum_{l=1}^{k-2} digit_{l-1}(i) a_l + e a_0, with
// digit_j the j-th least significant base-p digit; e varies fastest.
GrayVector gray_map(const ChainRing& base, const RingElement& a);
GrayVector gray_map_vector(const ChainRing& base, std::span<const RingElement> c);

std::uint64_t hom_weight(const ChainRing& base, const RingElement& a);
std::uint64_t hom_weight_vector(const ChainRing& base, std::span<const RingElement> c);
std::uint64_t hom_distance(const ChainRing& base, std::span<const RingElement> x,
                           std::span<const RingElement> y);

std::uint64_t hamming_weight(std::span<const std::uint32_t> y);

}  // namespace chaincode
