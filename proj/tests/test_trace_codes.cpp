#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "chaincode/errors.hpp"
#include "chaincode/trace_codes.hpp"
#include "support/oracle.hpp"

using namespace chaincode;

namespace {

TraceCode make(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime = 0) {
  ChainRing ext(Field(p, m), k);
  auto set = build_set(ext, kind, nprime);
  return TraceCode(std::move(ext), std::move(set));
}

WeightEnumerator from_map(const std::map<std::uint64_t, std::uint64_t>& m) {
  WeightEnumerator e;
  for (const auto& pr : m) e.pairs.push_back(pr);
  return e;
}

oracle::Family family(SetKind k) {
  switch (k) {
    case SetKind::d1: return oracle::Family::d1;
    case SetKind::d2: return oracle::Family::d2;
    case SetKind::d3: return oracle::Family::d3;
  }
  return oracle::Family::d2;
}

}  // namespace

TEST_CASE("weight enumerator examples") {
  CHECK(hom_weight_enumerator(make(SetKind::d3, 3, 3, 2, 2)) == from_map({{0, 1}, {702, 702}, {729, 26}}));
  CHECK(hom_weight_enumerator(make(SetKind::d3, 3, 4, 2, 4)) ==
        from_map({{0, 1}, {1458, 60}, {1620, 6480}, {2187, 20}}));
  CHECK(hom_weight_enumerator(make(SetKind::d2, 2, 2, 2)) == from_map({{0, 1}, {12, 12}, {16, 3}}));
}

TEST_CASE("enumerators match the schoolbook oracle") {
  const std::vector<std::tuple<SetKind, std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t>> cells{
      {SetKind::d1, 3, 1, 2, 0}, {SetKind::d1, 3, 2, 2, 0}, {SetKind::d1, 5, 1, 2, 0}, {SetKind::d1, 3, 1, 3, 0},
      {SetKind::d2, 2, 2, 2, 0}, {SetKind::d2, 2, 3, 2, 0}, {SetKind::d2, 2, 2, 3, 0}, {SetKind::d2, 3, 2, 2, 0},
      {SetKind::d3, 3, 2, 2, 2}, {SetKind::d3, 3, 2, 2, 1}, {SetKind::d3, 2, 4, 2, 3}, {SetKind::d3, 5, 2, 2, 3},
      {SetKind::d3, 3, 3, 2, 2}};
  for (auto [kind, p, m, k, n] : cells) {
    CAPTURE(p);
    CAPTURE(m);
    CAPTURE(k);
    const auto code = make(kind, p, m, k, n);
    const oracle::Field naive(static_cast<int>(p), static_cast<int>(m), code.ext().field().modulus());
    const auto expect = from_map(oracle::enumerate(naive, static_cast<int>(k), family(kind), n));
    CHECK(hom_weight_enumerator(code) == expect);
    CHECK(reference_hom_weight_enumerator(code) == expect);
    CHECK(reference_gray_weight_enumerator(code) == expect);
    CHECK(gray_weight_enumerator(code) == expect);
  }
}

TEST_CASE("enumerator invariants") {
  for (auto [kind, p, m, k, n] : std::vector<std::tuple<SetKind, std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t>>{
           {SetKind::d1, 3, 3, 2, 0}, {SetKind::d2, 2, 3, 3, 0}, {SetKind::d3, 3, 4, 2, 8}}) {
    const auto code = make(kind, p, m, k, n);
    const auto e = hom_weight_enumerator(code);
    CHECK(e.total() == code.code_size());
    CHECK(e.frequency(0) == 1);
    for (std::size_t i = 1; i < e.pairs.size(); ++i) CHECK(e.pairs[i - 1].first < e.pairs[i].first);
  }
}

TEST_CASE("Gray image summaries") {
  const auto s1 = gray_image_summary(make(SetKind::d3, 3, 3, 2, 2));
  CHECK(s1.gray_length == 1053);
  CHECK(s1.gray_dimension == 6);
  CHECK(s1.min_distance == 702);
  const auto s2 = gray_image_summary(make(SetKind::d3, 3, 4, 2, 4));
  CHECK(s2.gray_length == 2430);
  CHECK(s2.gray_dimension == 8);
  CHECK(s2.min_distance == 1458);
  const auto s3 = gray_image_summary(make(SetKind::d2, 2, 2, 2));
  CHECK(s3.gray_length == 24);
  CHECK(s3.gray_dimension == 4);
  CHECK(s3.min_distance == 12);
  CHECK(s3.alphabet == 2);
}

TEST_CASE("non-injective evaluation is a verification error") {
  // N' = 6 in F_25 leaves one representative, so tr(b) = 0 kills b u^0.
  CHECK_THROWS_AS(gray_image_summary(make(SetKind::d3, 5, 2, 2, 6)), VerificationError);
}

TEST_CASE("evaluation") {
  const auto code = make(SetKind::d1, 3, 2, 3);
  const ChainRing& ext = code.ext();
  const ChainRing& base = code.base();
  for (const auto& c : code.evaluate(ext.zero())) CHECK(c == base.zero());
  const Field& f = ext.field();
  for (std::uint32_t v = 0; v < f.q(); ++v) {
    RingElement a = ext.zero();
    a.coeffs[2] = {v};
    for (const auto& c : code.evaluate(a)) {
      const auto cls = base.classify(c);
      CHECK((cls == ElementClass::zero || cls == ElementClass::socle_nonzero));
    }
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, ext.size() - 1);
  for (int i = 0; i < 50; ++i) {
    const auto ia = pick(rng), ib = pick(rng);
    const auto a = ext.element(ia), b = ext.element(ib);
    const auto ca = code.evaluate(a), cb = code.evaluate(b), cab = code.evaluate(ext.add(a, b));
    for (std::size_t j = 0; j < ca.size(); ++j) CHECK(cab[j] == base.add(ca[j], cb[j]));
    const auto packed = code.evaluate_packed(ia);
    for (std::size_t j = 0; j < ca.size(); ++j) CHECK(packed[j] == base.index(ca[j]));
  }
}

TEST_CASE("units all carry the middle weight for D1 and D2") {
  for (auto [kind, p, m, k] : std::vector<std::tuple<SetKind, std::uint32_t, std::uint32_t, std::uint32_t>>{
           {SetKind::d1, 3, 2, 2}, {SetKind::d1, 3, 3, 2}, {SetKind::d1, 5, 2, 2}, {SetKind::d1, 3, 2, 3},
           {SetKind::d2, 2, 2, 2}, {SetKind::d2, 3, 2, 2}, {SetKind::d2, 2, 3, 3}}) {
    const auto code = make(kind, p, m, k);
    const std::uint64_t expect = (p - 1) * code.gray_length() / p;
    for (std::uint64_t a = 0; a < code.code_size(); ++a) {
      const auto x = code.ext().element(a);
      if (!code.ext().is_unit(x)) continue;
      REQUIRE(hom_weight_vector(code.base(), code.evaluate(x)) == expect);
    }
  }
}

TEST_CASE("theta sums") {
  const auto code = make(SetKind::d1, 3, 2, 2);
  CHECK(std::abs(theta_sum(code, code.ext().zero()) - Complex(double(code.gray_length()), 0.0)) < 1e-9);
}

TEST_CASE("character identity for scalar multiples, random vectors") {
  // sum_{s=1}^{p-1} Theta(s y) = (p-1) N - p w_H(y)
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
    std::uniform_int_distribution<std::size_t> len(1, 60);
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<std::uint32_t> y(len(rng));
      for (auto& v : y) v = digit(rng) * (digit(rng) != 0 || p == 2 ? 1 : 0);
      Complex lhs = 0.0;
      for (std::uint32_t s = 1; s < p; ++s) {
        std::vector<std::uint32_t> sy(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) sy[i] = s * y[i] % p;
        lhs += theta(sy, p);
      }
      const double rhs = double(p - 1) * double(y.size()) - double(p) * double(hamming_weight(y));
      REQUIRE(std::abs(lhs - Complex(rhs, 0.0)) < 1e-6);
    }
  }
}

TEST_CASE("scalar-sum of theta equals (p-1) Re theta, exhaustive at (3,3,2)") {
  for (auto kind : {SetKind::d1, SetKind::d2}) {
    const auto code = make(kind, 3, 3, 2);
    const ChainRing& ext = code.ext();
    for (std::uint64_t a = 0; a < ext.size(); ++a) {
      const auto x = ext.element(a);
      Complex lhs = 0.0;
      for (std::uint32_t s = 1; s < 3; ++s) lhs += theta_sum(code, ext.scalar_mul(ext.field().from_int(s), x));
      const Complex t = theta_sum(code, x);
      REQUIRE(std::abs(lhs - Complex(2.0 * t.real(), 0.0)) < 1e-6);
    }
  }
}

TEST_CASE("inner character sum dichotomy, exhaustive at (3,2,3)") {
  const ChainRing ext(Field(3, 2), 3);
  const double full = 9.0;  // p^{(k-2)m}
  for (std::uint64_t ai = 0; ai < ext.size(); ++ai) {
    const auto a = ext.element(ai);
    if (a.coeffs[0].value != 0) continue;  // a in M
    const Complex s = fiber_character_sum(ext, a);
    if (a.coeffs[1].value != 0) CHECK(std::abs(s) < 1e-6);
    else CHECK(std::abs(s - Complex(full, 0.0)) < 1e-6);
  }
}

TEST_CASE("regular action of D on coordinates") {
  CHECK(regular_action_exhaustive(make(SetKind::d1, 3, 2, 2)).ok);
  CHECK(regular_action_exhaustive(make(SetKind::d2, 2, 2, 2)).ok);
  const auto r = regular_action_check(make(SetKind::d1, 3, 3, 2), 5, 9);
  CHECK(r.ok);
  CHECK(r.trials == 5);
  CHECK_THROWS_AS(regular_action_check(make(SetKind::d3, 3, 3, 2, 2), 1), std::invalid_argument);
}

TEST_CASE("codeword dumps") {
  const auto code = make(SetKind::d2, 2, 2, 2);
  std::ostringstream ring1, ring8, gray1, gray8;
  write_ring_dump(code, ring1, 1);
  write_ring_dump(code, ring8, 8);
  write_gray_dump(code, gray1, 1);
  write_gray_dump(code, gray8, 8);
  CHECK(ring1.str() == ring8.str());
  CHECK(gray1.str() == gray8.str());
  std::istringstream in(ring1.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(std::count(line.begin(), line.end(), ',') == 11);
    if (lines == 1) CHECK(line.rfind("0|0,0|0,", 0) == 0);
  }
  CHECK(lines == 16);
  std::istringstream gin(gray1.str());
  while (std::getline(gin, line)) CHECK(line.size() == 24);
}

TEST_CASE("evaluation budget") {
  ChainRing ext(Field(3, 6), 2);
  auto set = build_d2(ext);
  CHECK_THROWS_AS(TraceCode(std::move(ext), std::move(set)), BudgetExceeded);
}
