#include <doctest.h>

#include "chaincode/analysis.hpp"
#include "chaincode/errors.hpp"
#include "chaincode/theory.hpp"

using namespace chaincode;

namespace {

TraceCode make(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime = 0) {
  ChainRing ext(Field(p, m), k);
  auto set = build_set(ext, kind, nprime);
  return TraceCode(std::move(ext), std::move(set));
}

std::vector<Codeword> all_codewords(const TraceCode& code) {
  std::vector<Codeword> out;
  for (std::uint64_t a = 0; a < code.code_size(); ++a) out.push_back(code.evaluate(code.ext().element(a)));
  return out;
}

// Lightest dual word of support <= 2 by trying every candidate against every
// codeword through the generic ring arithmetic.
std::optional<std::uint64_t> brute_force_dual(const TraceCode& code) {
  const ChainRing& R = code.base();
  const auto words = all_codewords(code);
  const std::uint64_t n = code.length();
  std::optional<std::uint64_t> best;
  auto consider = [&](std::uint64_t w) {
    if (!best || w < *best) best = w;
  };
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t ai = 1; ai < R.size(); ++ai) {
      const auto a = R.element(ai);
      bool ok = true;
      for (const auto& c : words)
        if (!(R.mul(a, c[x]) == R.zero())) {
          ok = false;
          break;
        }
      if (ok) consider(hom_weight(R, a));
    }
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = x + 1; y < n; ++y)
      for (std::uint64_t ai = 1; ai < R.size(); ++ai)
        for (std::uint64_t bi = 1; bi < R.size(); ++bi) {
          const auto a = R.element(ai), b = R.element(bi);
          bool ok = true;
          for (const auto& c : words)
            if (!(R.add(R.mul(a, c[x]), R.mul(b, c[y])) == R.zero())) {
              ok = false;
              break;
            }
          if (ok) consider(hom_weight(R, a) + hom_weight(R, b));
        }
  return best;
}

// Number of ordered pairs of distinct F_p^*-classes whose Gray supports nest.
std::uint64_t brute_force_cover_pairs(const TraceCode& code) {
  const ChainRing& R = code.base();
  std::vector<std::vector<bool>> supports;
  std::vector<std::uint64_t> class_of;
  const Field& f = code.ext().field();
  for (std::uint64_t a = 1; a < code.code_size(); ++a) {
    const auto x = code.ext().element(a);
    std::uint64_t rep = a;
    for (std::uint32_t s = 2; s < code.ext().p(); ++s)
      rep = std::min(rep, code.ext().index(code.ext().scalar_mul(f.from_int(s), x)));
    if (rep != a) continue;
    const auto g = gray_map_vector(R, code.evaluate(x));
    std::vector<bool> s(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) s[i] = g[i] != 0;
    supports.push_back(std::move(s));
  }
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t j = 0; j < supports.size(); ++j) {
      if (i == j) continue;
      bool subset = true;
      for (std::size_t t = 0; t < supports[j].size() && subset; ++t)
        if (supports[j][t] && !supports[i][t]) subset = false;
      pairs += subset;
    }
  return pairs;
}

}  // namespace

TEST_CASE("dual distance examples") {
  struct Row {
    SetKind kind;
    std::uint32_t p, m, k;
    std::uint64_t n, expect;
  };
  for (const auto& r : std::vector<Row>{{SetKind::d1, 3, 2, 2, 0, 4},
                                        {SetKind::d1, 3, 3, 2, 0, 4},
                                        {SetKind::d2, 2, 2, 2, 0, 2},
                                        {SetKind::d2, 3, 2, 2, 0, 4},
                                        {SetKind::d3, 3, 2, 2, 2, 4}}) {
    CAPTURE(r.p);
    CAPTURE(r.m);
    const auto rep = dual_low_weight_search(make(r.kind, r.p, r.m, r.k, r.n));
    CHECK_FALSE(rep.support1_found);
    CHECK(rep.claimed == r.expect);
    REQUIRE(rep.computed.has_value());
    CHECK(*rep.computed == r.expect);
    CHECK(rep.exact);
    CHECK(rep.witness_verified);
    CHECK(rep.label == "exact");
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->positions.size() == 2);
  }
}

TEST_CASE("dual search agrees with a brute-force scan") {
  for (const auto& code : {make(SetKind::d2, 2, 2, 2), make(SetKind::d1, 3, 2, 2), make(SetKind::d2, 2, 2, 3),
                           make(SetKind::d3, 3, 2, 2, 1)}) {
    const auto rep = dual_low_weight_search(code);
    CHECK(rep.computed == brute_force_dual(code));
  }
}

TEST_CASE("dual search is thread-count independent") {
  const auto code = make(SetKind::d2, 3, 2, 2);
  const auto a = dual_low_weight_search(code, 1), b = dual_low_weight_search(code, 3);
  CHECK(a.computed == b.computed);
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->positions == b.witness->positions);
  CHECK(a.witness->values == b.witness->values);
}

TEST_CASE("dual search budget") {
  CHECK_THROWS_AS(dual_low_weight_search(make(SetKind::d1, 7, 2, 2)), BudgetExceeded);
}

TEST_CASE("minimality examples") {
  for (const auto& code : {make(SetKind::d1, 3, 3, 2), make(SetKind::d2, 2, 2, 2), make(SetKind::d2, 3, 2, 2),
                           make(SetKind::d3, 3, 3, 2, 2)}) {
    const auto rep = minimal_codewords_check(code);
    CHECK(rep.all_minimal);
    CHECK(rep.violation_count == 0);
    CHECK(rep.violations.empty());
    CHECK(rep.classes == (code.code_size() - 1) / (code.ext().p() - 1));
  }
}

TEST_CASE("minimality agrees with a naive support comparison") {
  for (const auto& code : {make(SetKind::d1, 3, 2, 2), make(SetKind::d2, 2, 2, 2), make(SetKind::d2, 3, 2, 2),
                           make(SetKind::d3, 3, 2, 2, 2), make(SetKind::d3, 3, 2, 2, 1), make(SetKind::d2, 2, 2, 3)}) {
    const auto rep = minimal_codewords_check(code);
    const auto naive = brute_force_cover_pairs(code);
    CHECK(rep.violation_count == naive);
    CHECK(rep.all_minimal == (naive == 0));
    CHECK(rep.violations.size() == std::min<std::uint64_t>(naive, kMaxViolations));
  }
}

TEST_CASE("the (3,4,2) N'=4 code is inconclusive for the ratio test") {
  const auto rep = minimal_codewords_check(make(SetKind::d3, 3, 4, 2, 4));
  CHECK(rep.w_min == 1458);
  CHECK(rep.w_max == 2187);
  CHECK_FALSE(rep.ab_ratio_ok);
}

TEST_CASE("Ashikhmin-Barg ratio") {
  CHECK(ashikhmin_barg(702, 729, 3));
  CHECK_FALSE(ashikhmin_barg(1458, 2187, 3));
  CHECK(ashikhmin_barg(5, 5, 2));
  CHECK_FALSE(ashikhmin_barg(1, 2, 2));  // 2 * 1 = 1 * 2
  CHECK_THROWS_AS(ashikhmin_barg(0, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(ashikhmin_barg(6, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(ashikhmin_barg(1, 5, 1), std::invalid_argument);
}

TEST_CASE("a passing ratio test implies minimality") {
  for (const auto& code : {make(SetKind::d1, 3, 3, 2), make(SetKind::d1, 3, 4, 2), make(SetKind::d2, 2, 3, 2),
                           make(SetKind::d2, 2, 2, 2), make(SetKind::d1, 5, 2, 2), make(SetKind::d3, 2, 4, 2, 3)}) {
    const auto rep = minimal_codewords_check(code);
    if (rep.ab_ratio_ok) CHECK(rep.all_minimal);
  }
}

TEST_CASE("three-weight D1 at m = 4 satisfies p w_1 > (p-1) w_3") {
  const auto pr = predict_d1(3, 4, 2);
  REQUIRE(pr.weights.size() == 3);
  const auto w1 = pr.weights.front().first, w3 = pr.weights.back().first;
  CHECK(3 * w1 > 2 * w3);
  const auto rep = minimal_codewords_check(make(SetKind::d1, 3, 4, 2));
  CHECK(rep.w_min == w1);
  CHECK(rep.w_max == w3);
  CHECK(rep.ab_ratio_ok);
  CHECK(rep.all_minimal);
}

TEST_CASE("minimality budget") {
  CHECK_THROWS_AS(minimal_codewords_check(make(SetKind::d2, 3, 3, 3)), BudgetExceeded);
}
