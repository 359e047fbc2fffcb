#include "chaincode/theory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "chaincode/errors.hpp"

namespace chaincode {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t ipow(std::int64_t base, std::uint64_t exp) {
  std::int64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw std::overflow_error("integer power overflows 64 bits");
  return r;
}

std::string to_string(PredictionKind k) {
  switch (k) {
    case PredictionKind::two_weight: return "two_weight";
    case PredictionKind::three_weight: return "three_weight";
    case PredictionKind::bounds_only: return "bounds_only";
    case PredictionKind::not_applicable: return "not_applicable";
  }
  return "?";
}

namespace {

bool odd_m_or_p3(std::uint32_t p, std::uint32_t m) { return m % 2 == 0 || p % 4 == 3; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::uint64_t as_weight(const Rational& w, const std::string& what) {
  if (w.denominator() != 1 || w < 0)
    throw VerificationError("closed-form " + what + " = " + to_string(w) + " is not a nonnegative integer");
  return static_cast<std::uint64_t>(w.numerator());
}

// Fills weights from (weight, frequency) rationals; merges equal weights.
void finish(Prediction& pr, const std::vector<std::pair<Rational, Rational>>& table) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& [w, f] : table) merged[as_weight(w, "weight")] += as_weight(f, "frequency");
  pr.weights.assign(merged.begin(), merged.end());
  pr.applicable = true;
  pr.kind = pr.weights.size() == 2 ? PredictionKind::two_weight
            : pr.weights.size() == 3 ? PredictionKind::three_weight
                                     : PredictionKind::bounds_only;
}

struct Common {
  std::int64_t p, q, fiber_power, code_size;  // fiber_power = p^{(k-1)(m+1)}
};

Common common(std::uint32_t p, std::uint32_t m, std::uint32_t k) {
  Common c;
  c.p = p;
  c.q = ipow(p, m);
  c.fiber_power = ipow(p, std::uint64_t{k - 1} * (m + 1));
  c.code_size = ipow(p, std::uint64_t{k} * m);
  return c;
}

}  // namespace

std::uint64_t gray_code_length(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime) {
  std::uint64_t block = 1;
  for (std::uint32_t i = 0; i + 1 < k; ++i) block *= p;
  return block * expected_size(kind, p, m, k, nprime);
}

Prediction predict_d1(std::uint32_t p, std::uint32_t m, std::uint32_t k) {
  if (p % 2 == 0) throw std::invalid_argument("D1 predictions need odd p");
  const Common c = common(p, m, k);
  Prediction pr;
  pr.length = gray_code_length(SetKind::d1, p, m, k);
  pr.dimension = std::uint64_t{k} * m;
  const Rational n1(static_cast<std::int64_t>(pr.length));
  const Rational scale(c.p - 1, c.p);
  const Rational fp(c.fiber_power);
  if (m % 2 == 0) {
    const std::int64_t s = ipow(p, m / 2);
    pr.family = "d1/m-even";
    finish(pr, {{scale * (n1 - fp * Rational(s - 1, 2)), Rational(c.q - 1, 2)},
                {scale * n1, Rational(c.code_size - c.q)},
                {scale * (n1 + fp * Rational(s + 1, 2)), Rational(c.q - 1, 2)}});
  } else if (p % 4 == 3) {
    pr.family = "d1/m-odd";
    finish(pr, {{scale * n1, Rational(c.code_size - c.q)}, {scale * (n1 + fp / 2), Rational(c.q - 1)}});
  } else {
    pr.family = "d1";
    pr.reason = "m odd with p = 1 mod 4 is not covered by a closed form";
  }
  return pr;
}

Prediction predict_d2(std::uint32_t p, std::uint32_t m, std::uint32_t k) {
  const Common c = common(p, m, k);
  Prediction pr;
  pr.family = "d2";
  pr.length = gray_code_length(SetKind::d2, p, m, k);
  pr.dimension = std::uint64_t{k} * m;
  const Rational n2(static_cast<std::int64_t>(pr.length));
  const Rational scale(c.p - 1, c.p);
  finish(pr, {{scale * n2, Rational(c.code_size - c.q)}, {scale * (n2 + c.fiber_power), Rational(c.q - 1)}});
  return pr;
}

std::optional<std::uint64_t> minus_one_exponent(std::uint32_t p, std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t x = 1;
  for (std::uint64_t e = 1; e <= n; ++e) {
    x = x * p % n;
    if (x == n - 1) return e;
    if (x == 1) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<BoundsReport> d3_weight_bounds(std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime) {
  const auto params = d3_params(p, m, nprime);
  const auto n2 = static_cast<std::int64_t>(params.gcd);
  const Common c = common(p, m, k);
  // 1 < N'_2 < p^{m/2} + 1, i.e. (N'_2 - 1)^2 < p^m.
  if (n2 <= 1 || (n2 - 1) * (n2 - 1) >= c.q || !odd_m_or_p3(p, m)) return std::nullopt;
  const std::int64_t e = c.fiber_power / p;  // p^{(k-1)(m+1)-1}
  BoundsReport b;
  b.upper = Rational(e) * Rational(c.q - 1, n2);
  b.lower = static_cast<double>(e) * (static_cast<double>(c.q) - (n2 - 1) * std::pow(double(p), m / 2.0)) / n2;
  if (m % 2 == 0) {
    b.lower_exact = Rational(e) * Rational(c.q - (n2 - 1) * ipow(p, m / 2), n2);
    b.lower = boost::rational_cast<double>(*b.lower_exact);
  }
  b.max_weight_count = static_cast<std::uint64_t>(n2) + 1;
  return b;
}

Prediction predict_d3(std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime) {
  const auto params = d3_params(p, m, nprime);
  const Common c = common(p, m, k);
  Prediction pr;
  pr.length = gray_code_length(SetKind::d3, p, m, k, nprime);
  pr.dimension = std::uint64_t{k} * m;
  const auto n2 = static_cast<std::int64_t>(params.gcd);
  const std::int64_t e = c.fiber_power / p;

  if (n2 == 1) {
    pr.family = "d3/n2=1";
    if (!odd_m_or_p3(p, m)) {
      pr.reason = "N'_2 = 1 needs m even or p = 3 mod 4";
      return pr;
    }
    finish(pr, {{Rational((c.q - 1) * e), Rational(c.code_size - c.q)},
                {Rational(ipow(p, std::uint64_t{k} * (m + 1) - 2)), Rational(c.q - 1)}});
    return pr;
  }

  std::string why;
  if (m % 2 == 0 && n2 > 2) {
    const auto kp = minus_one_exponent(p, static_cast<std::uint64_t>(n2));
    if (kp && m % (2 * *kp) == 0) {
      const std::int64_t t = m / (2 * static_cast<std::int64_t>(*kp));
      const std::int64_t s = ipow(p, m / 2);
      const std::int64_t pk1 = ipow(p, *kp) + 1;
      const bool case_a = n2 % 2 == 0 && p % 2 == 1 && t % 2 == 1 && (pk1 / n2) % 2 == 1;
      const Rational scale(e);
      const Rational low_freq(c.q - 1, n2);
      const Rational mid_freq(c.code_size - c.q);
      const Rational high_freq((n2 - 1) * (c.q - 1), n2);
      const Rational mid = scale * Rational(c.q - 1, n2);
      if (case_a) {
        if (n2 < s + 1) {
          pr.family = "d3/three-weight-a";
          finish(pr, {{scale * Rational(c.q - (n2 - 1) * s, n2), low_freq},
                      {mid, mid_freq},
                      {scale * Rational(c.q + s, n2), high_freq}});
          pr.bounds = d3_weight_bounds(p, m, k, nprime);
          return pr;
        }
        why = "three-weight case (a) needs N'_2 < p^{m/2} + 1";
      } else {
        const std::int64_t sign = (t % 2 == 0) ? 1 : -1;
        if (s + sign * (n2 - 1) > 0) {
          pr.family = "d3/three-weight-b";
          finish(pr, {{scale * Rational(c.q + sign * (n2 - 1) * s, n2), low_freq},
                      {mid, mid_freq},
                      {scale * Rational(c.q - sign * s, n2), high_freq}});
          pr.bounds = d3_weight_bounds(p, m, k, nprime);
          return pr;
        }
        why = "three-weight case (b) needs p^{m/2} + (-1)^t (N'_2 - 1) > 0";
      }
    } else {
      why = "no k' with p^{k'} = -1 mod N'_2 and k' | m/2";
    }
  } else {
    why = "three-weight forms need m even and N'_2 > 2";
  }

  pr.family = "d3/bounds";
  pr.bounds = d3_weight_bounds(p, m, k, nprime);
  if (pr.bounds) {
    pr.applicable = true;
    pr.kind = PredictionKind::bounds_only;
    pr.reason = why;
  } else {
    pr.reason = why + "; weight bounds need 1 < N'_2 < p^{m/2} + 1";
  }
  return pr;
}

Prediction predict(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime) {
  switch (kind) {
    case SetKind::d1: return predict_d1(p, m, k);
    case SetKind::d2: return predict_d2(p, m, k);
    case SetKind::d3: return predict_d3(p, m, k, nprime);
  }
  throw std::invalid_argument("unknown defining set");
}

std::uint64_t eq1_count(const Field& f, FieldElement b, std::uint64_t nprime) {
  if (b.value == 0) throw std::invalid_argument("eq1_count needs b != 0");
  const auto params = d3_params(f.p(), f.m(), nprime);
  const std::uint64_t n2 = params.gcd;
  const std::uint64_t lb = f.log(b);
  Complex acc = 0.0;
  for (std::uint64_t j = 0; j < n2; ++j) {
    // G(conj(phi)^j, chi) phi^j(b)
    const Complex g = gauss_sum(f, n2, (n2 - j) % n2);
    acc += g * root_of_unity(j * lb % n2, n2);
  }
  const Complex pn = static_cast<double>(params.n1) + acc / static_cast<double>(n2);
  const Complex n = pn / static_cast<double>(f.p());
  const double rounded = std::round(n.real());
  if (std::abs(n.imag()) > 1e-6 || std::abs(n.real() - rounded) > 1e-6 || rounded < 0)
    throw VerificationError("Gauss-sum zero count is not an integer: " + std::to_string(n.real()) + " + " +
                            std::to_string(n.imag()) + "i");
  return static_cast<std::uint64_t>(rounded);
}

std::uint64_t direct_trace_zero_count(const Field& f, FieldElement b, std::uint64_t nprime) {
  std::uint64_t n = 0;
  for (auto d : coset_representatives(f, nprime))
    if (f.trace(f.mul(b, d)) == 0) ++n;
  return n;
}

std::uint64_t griesmer_sum(std::uint64_t p, std::uint64_t K, std::uint64_t d) {
  if (K < 1) throw std::invalid_argument("Griesmer sum needs K >= 1");
  if (p < 2) throw std::invalid_argument("Griesmer sum needs an alphabet size of at least 2");
  std::uint64_t s = 0, pw = 1;
  for (std::uint64_t i = 0; i < K; ++i) {
    if (pw >= d) {
      s += (d == 0 ? 0 : 1) * (K - i);
      break;
    }
    s += (d + pw - 1) / pw;
    pw *= p;
  }
  return s;
}

bool is_griesmer_optimal(std::uint64_t n, std::uint64_t K, std::uint64_t d, std::uint64_t p) {
  if (d < 1) throw std::invalid_argument("minimum distance must be positive");
  return griesmer_sum(p, K, d) <= n && griesmer_sum(p, K, d + 1) > n;
}

OptimalityThreshold optimality_threshold(SetKind kind, std::uint32_t p, std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("optimality thresholds need k >= 2");
  const std::int64_t P = ipow(p, k - 1);
  const std::int64_t K = k;
  OptimalityThreshold t;
  switch (kind) {
    case SetKind::d1:
      t.floor_term = floor_div(P - 2 * K + 1, 2 * (K - 1)) + 1;
      t.side_condition = "m odd and p = 3 mod 4";
      break;
    case SetKind::d2:
      t.floor_term = floor_div(P - K, K - 1) + 1;
      break;
    case SetKind::d3:
      t.floor_term = floor_div(P - std::int64_t{p} * (K - 1) + K - 2, (std::int64_t{p} - 1) * (K - 1)) + 1;
      t.side_condition = "N'_2 = 1 and (m even or p = 3 mod 4)";
      break;
  }
  t.min_m = std::max<std::int64_t>(K, t.floor_term);
  return t;
}

bool optimality_conditions_hold(SetKind kind, std::uint32_t p, std::uint32_t m, std::uint32_t k, std::uint64_t nprime) {
  const auto t = optimality_threshold(kind, p, k);
  if (static_cast<std::int64_t>(m) < t.min_m) return false;
  switch (kind) {
    case SetKind::d1: return m % 2 == 1 && p % 4 == 3;
    case SetKind::d2: return true;
    case SetKind::d3: return d3_params(p, m, nprime).gcd == 1 && odd_m_or_p3(p, m);
  }
  return false;
}

std::optional<std::int64_t> smallest_usable_m(SetKind kind, std::uint32_t p, std::uint32_t k) {
  const auto t = optimality_threshold(kind, p, k);
  std::int64_t m = t.min_m;
  switch (kind) {
    case SetKind::d1:
      if (p % 4 != 3) return std::nullopt;
      return m % 2 == 1 ? m : m + 1;
    case SetKind::d2: return m;
    case SetKind::d3:
      // With N' = 1 the N'_2 = 1 condition always holds.
      if (p % 4 == 3 || m % 2 == 0) return m;
      return m + 1;
  }
  return std::nullopt;
}

K2Comparison k2_comparison(std::uint32_t p, std::uint32_t m) {
  if (p % 2 == 0) throw std::invalid_argument("the k = 2 comparison needs odd p");
  const std::int64_t q = ipow(p, m);
  const std::int64_t pq = q * p;
  K2Comparison c;
  c.length = Rational((q - 1) * pq, 2);
  c.earlier_length = Rational(q * q - q);
  const Rational this_scale(pq - q, 2);     // (p^{m+1} - p^m) / 2
  const Rational earlier_scale(q - q / p);  // p^m - p^{m-1}
  if (m % 2 == 0) {
    const std::int64_t s = ipow(p, m / 2);
    for (std::int64_t f : {q - s, q - 1, q + s}) {
      c.weights.push_back(this_scale * f);
      c.earlier_weights.push_back(earlier_scale * f);
    }
  } else {
    c.weights = {this_scale * (q - 1), this_scale * q};
    c.earlier_weights = {earlier_scale * (q - 1), Rational(q / p) * Rational(pq - q)};
  }
  return c;
}

std::uint64_t claimed_dual_distance(std::uint32_t p, std::uint32_t k) {
  return 2 * static_cast<std::uint64_t>(p - 1) * static_cast<std::uint64_t>(ipow(p, k - 2));
}

}  // namespace chaincode
