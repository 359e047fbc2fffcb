#pragma once

// Finite fields F_{p^m} with table-driven arithmetic, the absolute trace down
// to F_p, quadratic-residue classification and Gauss sums.

#include <complex>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace chaincode {

using Complex = std::complex<double>;

// An element of F_{p^m}, packed as sum_i c_i p^i over the polynomial basis
// 1, x, ..., x^{m-1}. The packing is bijective, so equality of packed values is
// equality of coefficient vectors. Elements of the prime subfield are the
// residues 0..p-1.
struct FieldElement {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  // make_field: smallest monic irreducible modulus and smallest primitive
  // element, both in packed-integer order. Throws std::invalid_argument for a
  // non-prime p, m < 1, or p^m above kMaxOrder.
  Field(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return t_->p; }
  std::uint32_t m() const { return t_->m; }
  std::uint32_t q() const { return t_->q; }

  // c_0..c_{m-1} of the monic modulus x^m + c_{m-1}x^{m-1} + ... + c_0.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  FieldElement alpha() const { return t_->alpha; }
  // The polynomial variable x (equals the residue 0 when m = 1).
  FieldElement x() const;

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // Embeds the residue c mod p into the prime subfield.
  FieldElement from_int(std::int64_t c) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  bool contains(FieldElement a) const { return a.value < t_->q; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  // Discrete log base alpha; throws for zero.
  std::uint32_t log(FieldElement a) const;
  // alpha^t for any t >= 0.
  FieldElement exp(std::uint64_t t) const { return {t_->exp[t % (t_->q - 1)]}; }

  // tr(a) = a + a^p + ... + a^{p^{m-1}} as a residue mod p.
  std::uint32_t trace(FieldElement a) const;
  // tr(alpha^t) without touching the element tables.
  std::uint32_t trace_of_power(std::uint64_t t) const { return t_->trace_exp[t % (t_->q - 1)]; }

  // Requires odd q and a != 0.
  bool is_square(FieldElement a) const;

  std::uint64_t multiplicative_order(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p() == b.p() && a.m() == b.m(); }

 private:
  struct Tables {
    std::uint32_t p = 0, m = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> pow_p;      // p^i, i <= m
    std::vector<std::uint32_t> exp;        // alpha^t, t < q-1
    std::vector<std::uint32_t> log;        // log[0] unused
    std::vector<std::uint32_t> trace;      // per packed element
    std::vector<std::uint32_t> trace_exp;  // trace(alpha^t)
    FieldElement alpha;
  };
  void check(FieldElement a) const;
  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Primitive p-th root of unity raised to t.
Complex root_of_unity(std::uint64_t t, std::uint64_t n);

// G(eta) by exhaustive summation over F_q^*. Requires odd q.
Complex quadratic_gauss_sum(const Field& f);
// (-1)^{m-1} (sqrt p*)^m, p* = (-1)^{(p-1)/2} p, principal square root of p*.
Complex quadratic_gauss_sum_closed_form(const Field& f);
// (sum over nonzero squares, sum over nonsquares) of omega^{tr(x)}.
std::pair<Complex, Complex> qn_sums(const Field& f);
// sum over x != 0 of phi^j(x) omega^{tr(x)}, phi(alpha^t) = exp(2 pi i t / order).
// Requires order | q - 1 and 0 <= index < order.
Complex gauss_sum(const Field& f, std::uint64_t order, std::uint64_t index);

}  // namespace chaincode
