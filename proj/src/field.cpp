#include "chaincode/field.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chaincode/errors.hpp"

namespace chaincode {

namespace {

using Poly = std::vector<std::uint32_t>;

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

Poly unpack(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
  Poly c(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    c[i] = v % p;
    v /= p;
  }
  return c;
}

std::uint32_t pack(const Poly& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

// a * b mod (x^m + modulus), coefficients mod p.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  const std::size_t m = modulus.size();
  std::vector<std::uint64_t> r(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t d = r.size(); d-- > m;) {
    const std::uint64_t c = r[d];
    if (c == 0) continue;
    r[d] = 0;
    for (std::size_t i = 0; i < m; ++i) r[d - m + i] = (r[d - m + i] + (p - c) * modulus[i]) % p;
  }
  Poly out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return out;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  Poly result(modulus.size(), 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, modulus, p);
    base = mulmod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

// f is monic of degree f.size()-1 (full coefficient list, leading 1 included).
bool divides(const Poly& g, Poly f, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t d = f.size() - 1; d >= dg; --d) {
    const std::uint64_t c = f[d];
    if (c != 0) {
      for (std::size_t i = 0; i <= dg; ++i)
        f[d - dg + i] = static_cast<std::uint32_t>((f[d - dg + i] + (p - c) * g[i]) % p);
    }
    if (d == 0) break;
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (f[i] != 0) return false;
  return true;
}

bool is_irreducible(const Poly& low, std::uint32_t p) {
  const std::size_t m = low.size();
  if (m == 1) return true;
  Poly f = low;
  f.push_back(1);
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(d + 1);
      std::uint64_t w = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(w % p);
        w /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Field::Field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw BudgetExceeded("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds the cap 2^20");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);
  t->pow_p.resize(m + 1);
  t->pow_p[0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i) t->pow_p[i] = t->pow_p[i - 1] * p;

  for (std::uint32_t v = 0; v < t->q; ++v) {
    Poly low = unpack(v, p, m);
    if (is_irreducible(low, p)) {
      t->modulus = std::move(low);
      break;
    }
  }
  const Poly& mod = t->modulus;

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  for (std::uint32_t v = 1; v < t->q; ++v) {
    const Poly a = unpack(v, p, m);
    bool primitive = true;
    for (auto r : factors) {
      if (pack(powmod(a, order / r, mod, p), p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      t->alpha = {v};
      break;
    }
  }

  t->exp.resize(order);
  t->log.assign(t->q, kNoLog);
  const Poly alpha = unpack(t->alpha.value, p, m);
  Poly cur(m, 0);
  cur[0] = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    const std::uint32_t v = pack(cur, p);
    if (t->log[v] != kNoLog) throw VerificationError("alpha is not primitive");
    t->exp[i] = v;
    t->log[v] = static_cast<std::uint32_t>(i);
    cur = mulmod(cur, alpha, mod, p);
  }

  t_ = t;

  // tr is F_p-linear: tabulate it on the basis x^j and extend.
  std::vector<std::uint32_t> basis_trace(m);
  for (std::uint32_t j = 0; j < m; ++j) {
    const FieldElement y{t->pow_p[j]};
    FieldElement s = zero();
    for (std::uint32_t i = 0; i < m; ++i) s = add(s, pow(y, t->pow_p[i]));
    if (s.value >= p) throw VerificationError("trace image left the prime field");
    basis_trace[j] = s.value;
  }
  t->trace.resize(t->q);
  for (std::uint32_t v = 0; v < t->q; ++v) {
    std::uint64_t s = 0;
    std::uint32_t w = v;
    for (std::uint32_t j = 0; j < m; ++j) {
      s += std::uint64_t{w % p} * basis_trace[j];
      w /= p;
    }
    t->trace[v] = static_cast<std::uint32_t>(s % p);
  }
  t->trace_exp.resize(order);
  for (std::uint64_t i = 0; i < order; ++i) t->trace_exp[i] = t->trace[t->exp[i]];
}

void Field::check(FieldElement a) const {
  if (!contains(a))
    throw std::invalid_argument("element " + std::to_string(a.value) + " does not belong to F_" +
                                std::to_string(q()));
}

FieldElement Field::x() const {
  if (m() >= 2) return {p()};
  return {(p() - t_->modulus[0]) % p()};
}

FieldElement Field::from_int(std::int64_t c) const {
  const std::int64_t pp = p();
  return {static_cast<std::uint32_t>(((c % pp) + pp) % pp)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m()) throw std::invalid_argument("coefficient vector has the wrong length");
  std::uint32_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p()) throw std::invalid_argument("coefficient out of range");
    v = v * p() + coeffs[i];
  }
  return {v};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  check(a);
  return unpack(a.value, p(), m());
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  const std::uint32_t pp = p();
  if (pp == 2) return {a.value ^ b.value};
  std::uint32_t r = 0;
  std::uint32_t x = a.value, y = b.value;
  for (std::uint32_t i = 0; i < m(); ++i) {
    r += ((x % pp + y % pp) % pp) * t_->pow_p[i];
    x /= pp;
    y /= pp;
  }
  return {r};
}

FieldElement Field::neg(FieldElement a) const {
  check(a);
  const std::uint32_t pp = p();
  if (pp == 2) return a;
  std::uint32_t r = 0;
  std::uint32_t x = a.value;
  for (std::uint32_t i = 0; i < m(); ++i) {
    r += ((pp - x % pp) % pp) * t_->pow_p[i];
    x /= pp;
  }
  return {r};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (a.value == 0 || b.value == 0) return zero();
  const std::uint64_t s = std::uint64_t{t_->log[a.value]} + t_->log[b.value];
  return exp(s);
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t order = q() - 1;
  return {t_->exp[(order - t_->log[a.value]) % order]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t order = q() - 1;
  const std::uint64_t l = t_->log[a.value];
  return exp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(l) * e) % order));
}

std::uint32_t Field::log(FieldElement a) const {
  check(a);
  if (a.value == 0) throw std::domain_error("discrete log of zero");
  return t_->log[a.value];
}

std::uint32_t Field::trace(FieldElement a) const {
  check(a);
  return t_->trace[a.value];
}

bool Field::is_square(FieldElement a) const {
  check(a);
  if (p() == 2) throw std::invalid_argument("square classification needs odd q");
  if (a.value == 0) throw std::domain_error("square classification of zero");
  return t_->log[a.value] % 2 == 0;
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
  check(a);
  if (a.value == 0) throw std::domain_error("order of zero");
  std::uint64_t order = q() - 1;
  for (auto r : prime_factors(q() - 1))
    while (order % r == 0 && pow(a, order / r) == one()) order /= r;
  return order;
}

Complex root_of_unity(std::uint64_t t, std::uint64_t n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(t % n) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

Complex quadratic_gauss_sum(const Field& f) {
  if (f.p() == 2) throw std::invalid_argument("quadratic Gauss sum needs odd q");
  Complex s = 0.0;
  for (std::uint64_t t = 0; t + 1 < f.q(); ++t) {
    const double eta = (t % 2 == 0) ? 1.0 : -1.0;
    s += eta * root_of_unity(f.trace_of_power(t), f.p());
  }
  return s;
}

Complex quadratic_gauss_sum_closed_form(const Field& f) {
  if (f.p() == 2) throw std::invalid_argument("quadratic Gauss sum needs odd q");
  // (-1)^{m-1} (sqrt p*)^m with the principal root of p*; for p = 3 mod 4 that
  // is (i sqrt p)^m, whose sign differs from the principal sqrt((p*)^m).
  const double sign = (f.m() % 2 == 1) ? 1.0 : -1.0;
  const double magnitude = std::pow(static_cast<double>(f.p()), f.m() / 2.0);
  if (f.p() % 4 == 1) return {sign * magnitude, 0.0};
  switch (f.m() % 4) {
    case 0: return {sign * magnitude, 0.0};
    case 1: return {0.0, sign * magnitude};
    case 2: return {-sign * magnitude, 0.0};
    default: return {0.0, -sign * magnitude};
  }
}

std::pair<Complex, Complex> qn_sums(const Field& f) {
  if (f.p() == 2) throw std::invalid_argument("square/nonsquare sums need odd q");
  Complex squares = 0.0, nonsquares = 0.0;
  for (std::uint64_t t = 0; t + 1 < f.q(); ++t) {
    const Complex w = root_of_unity(f.trace_of_power(t), f.p());
    (t % 2 == 0 ? squares : nonsquares) += w;
  }
  return {squares, nonsquares};
}

Complex gauss_sum(const Field& f, std::uint64_t order, std::uint64_t index) {
  if (order == 0 || (f.q() - 1) % order != 0)
    throw std::invalid_argument("character order " + std::to_string(order) + " does not divide q-1");
  if (index >= order) throw std::invalid_argument("character index out of range");
  Complex s = 0.0;
  for (std::uint64_t t = 0; t + 1 < f.q(); ++t)
    s += root_of_unity(index * t % order, order) * root_of_unity(f.trace_of_power(t), f.p());
  return s;
}

}  // namespace chaincode
