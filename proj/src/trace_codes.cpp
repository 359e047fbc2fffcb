#include "chaincode/trace_codes.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "chaincode/errors.hpp"

namespace chaincode {

WeightEnumerator WeightEnumerator::from_histogram(const kernels::Histogram& h) {
  WeightEnumerator e;
  for (const auto& [w, c] : h)
    if (c != 0) e.pairs.emplace_back(w, c);
  return e;
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t s = 0;
  for (const auto& pr : pairs) s += pr.second;
  return s;
}

std::uint64_t WeightEnumerator::frequency(std::uint64_t weight) const {
  for (const auto& [w, c] : pairs)
    if (w == weight) return c;
  return 0;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> WeightEnumerator::nonzero() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& pr : pairs)
    if (pr.first != 0) out.push_back(pr);
  return out;
}

std::optional<std::uint64_t> WeightEnumerator::min_nonzero() const {
  for (const auto& pr : pairs)
    if (pr.first != 0) return pr.first;
  return std::nullopt;
}

std::optional<std::uint64_t> WeightEnumerator::max_nonzero() const {
  if (pairs.empty() || pairs.back().first == 0) return std::nullopt;
  return pairs.back().first;
}

std::string to_string(const WeightEnumerator& e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.pairs.size(); ++i) os << (i ? ", " : "") << e.pairs[i].first << ':' << e.pairs[i].second;
  os << '}';
  return os.str();
}

TraceCode::TraceCode(ChainRing ext, DefiningSet set)
    : ext_(std::move(ext)), base_(ext_.base_ring()), set_(std::move(set)) {
  const std::uint64_t work = ext_.size() * set_.size();
  if (set_.size() != 0 && work / set_.size() != ext_.size())
    throw BudgetExceeded("code size times length overflows");
  if (work > kEvaluationBudget)
    throw BudgetExceeded("code needs " + std::to_string(work) + " coordinate evaluations; the cap is " +
                         std::to_string(kEvaluationBudget));
  tables_ = kernels::make_tables(ext_, set_);
}

std::uint64_t TraceCode::gray_length() const {
  std::uint64_t block = 1;
  for (std::uint32_t i = 0; i + 1 < ext_.k(); ++i) block *= ext_.p();
  return block * length();
}

Codeword TraceCode::evaluate(const RingElement& a) const {
  ext_.check(a);
  Codeword c;
  c.reserve(set_.size());
  for (const auto& d : set_.elements) c.push_back(ext_.trace(ext_.mul(a, d)));
  return c;
}

std::vector<std::uint32_t> TraceCode::evaluate_packed(std::uint64_t a_index) const {
  std::vector<std::uint32_t> out(length());
  kernels::serial::materialize(tables_, a_index, 1, out);
  return out;
}

WeightEnumerator hom_weight_enumerator(const TraceCode& code, int threads) {
  return WeightEnumerator::from_histogram(
      kernels::omp::weight_histogram(code.tables(), kernels::WeightTable::homogeneous, threads));
}

WeightEnumerator gray_weight_enumerator(const TraceCode& code, int threads) {
  return WeightEnumerator::from_histogram(
      kernels::omp::weight_histogram(code.tables(), kernels::WeightTable::gray_hamming, threads));
}

WeightEnumerator reference_hom_weight_enumerator(const TraceCode& code) {
  kernels::Histogram h;
  for (std::uint64_t a = 0; a < code.code_size(); ++a) {
    const auto c = code.evaluate(code.ext().element(a));
    ++h[hom_weight_vector(code.base(), c)];
  }
  return WeightEnumerator::from_histogram(h);
}

WeightEnumerator reference_gray_weight_enumerator(const TraceCode& code) {
  kernels::Histogram h;
  for (std::uint64_t a = 0; a < code.code_size(); ++a) {
    const auto c = code.evaluate(code.ext().element(a));
    ++h[hamming_weight(gray_map_vector(code.base(), c))];
  }
  return WeightEnumerator::from_histogram(h);
}

CodeSummary gray_image_summary(const TraceCode& code, int threads) {
  CodeSummary s;
  s.alphabet = code.ext().p();
  s.length = code.length();
  s.gray_length = code.gray_length();
  s.code_size = code.code_size();
  s.gray_dimension = code.dimension();
  s.enumerator = hom_weight_enumerator(code, threads);
  const auto gray = gray_weight_enumerator(code, threads);
  if (!(gray == s.enumerator))
    throw VerificationError("Gray Hamming enumerator " + to_string(gray) + " differs from the homogeneous one " +
                            to_string(s.enumerator));
  if (s.enumerator.frequency(0) != 1)
    throw VerificationError(std::to_string(s.enumerator.frequency(0)) +
                            " ring elements map to the zero codeword; evaluation is not injective");
  s.min_distance = s.enumerator.min_nonzero().value_or(0);
  return s;
}

Complex theta(std::span<const std::uint32_t> y, std::uint32_t p) {
  Complex s = 0.0;
  for (auto v : y) s += root_of_unity(v, p);
  return s;
}

Complex theta_sum(const TraceCode& code, const RingElement& a) {
  return theta(gray_map_vector(code.base(), code.evaluate(a)), code.base().p());
}

Complex fiber_character_sum(const ChainRing& ext, const RingElement& a) {
  ext.check(a);
  const Field& f = ext.field();
  const std::uint32_t k = ext.k();
  const std::uint32_t vars = k - 2;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < vars; ++i) count *= f.q();
  Complex s = 0.0;
  std::vector<FieldElement> x(k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t v = 1; v <= vars; ++v) {
      x[v] = {static_cast<std::uint32_t>(rest % f.q())};
      rest /= f.q();
    }
    FieldElement b = f.zero();
    for (std::uint32_t i = 1; i <= vars; ++i) b = f.add(b, f.mul(a.coeffs[i], x[k - 1 - i]));
    s += root_of_unity(f.trace(b), f.p());
  }
  return s;
}

namespace {

constexpr std::uint64_t kMaterializeBudget = 20'000'000;

std::vector<std::uint32_t> materialize_all(const TraceCode& code, int threads) {
  const std::uint64_t words = code.code_size() * code.length();
  if (words > kMaterializeBudget)
    throw BudgetExceeded("materializing " + std::to_string(words) + " coordinates exceeds the cap " +
                         std::to_string(kMaterializeBudget));
  std::vector<std::uint32_t> out(words);
  kernels::omp::materialize(code.tables(), 0, code.code_size(), out, threads);
  return out;
}

std::vector<std::vector<std::uint32_t>> sorted_rows(const std::vector<std::uint32_t>& flat, std::uint64_t n) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::uint64_t off = 0; off < flat.size(); off += n)
    rows.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(off),
                      flat.begin() + static_cast<std::ptrdiff_t>(off + n));
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

namespace {

class ActionChecker {
 public:
  explicit ActionChecker(const TraceCode& code) : code_(code), n_(code.length()) {
    const auto kind = code.set().kind;
    if (kind != SetKind::d1 && kind != SetKind::d2)
      throw std::invalid_argument("the regular action check applies to D1 and D2 only");
    for (std::uint64_t j = 0; j < n_; ++j) position_.emplace(code.ext().index(code.set().elements[j]), j);
    flat_ = materialize_all(code, 1);
    reference_ = sorted_rows(flat_, n_);
  }

  std::uint64_t size() const { return n_; }

  // x -> (u'/v') x with u' = D[iu], v' = D[iv]; empty on success.
  std::optional<std::string> check(std::uint64_t iu, std::uint64_t iv) const {
    const ChainRing& ext = code_.ext();
    const auto& elems = code_.set().elements;
    const RingElement g = ext.mul(elems[iu], ext.inverse(elems[iv]));
    std::vector<std::uint64_t> perm(n_);
    std::vector<bool> hit(n_, false);
    for (std::uint64_t j = 0; j < n_; ++j) {
      const auto it = position_.find(ext.index(ext.mul(g, elems[j])));
      if (it == position_.end() || hit[it->second])
        return "x -> (u'/v')x with u' = #" + std::to_string(iu) + ", v' = #" + std::to_string(iv) +
               " does not permute D (position " + std::to_string(j) + ")";
      hit[it->second] = true;
      perm[j] = it->second;
    }
    std::vector<std::uint32_t> permuted(flat_.size());
    for (std::uint64_t r = 0; r < code_.code_size(); ++r)
      for (std::uint64_t j = 0; j < n_; ++j) permuted[r * n_ + j] = flat_[r * n_ + perm[j]];
    if (sorted_rows(permuted, n_) != reference_)
      return "permutation induced by u' = #" + std::to_string(iu) + ", v' = #" + std::to_string(iv) +
             " does not preserve the code";
    return std::nullopt;
  }

 private:
  const TraceCode& code_;
  std::uint64_t n_;
  std::unordered_map<std::uint64_t, std::uint64_t> position_;
  std::vector<std::uint32_t> flat_;
  std::vector<std::vector<std::uint32_t>> reference_;
};

}  // namespace

RegularActionReport regular_action_check(const TraceCode& code, std::uint64_t trials, std::uint64_t seed) {
  const ActionChecker checker(code);
  RegularActionReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, checker.size() - 1);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    // The first trial is u' = v', the identity.
    const std::uint64_t iu = trial == 0 ? 0 : pick(rng);
    const std::uint64_t iv = trial == 0 ? 0 : pick(rng);
    report.trials = trial + 1;
    if (auto w = checker.check(iu, iv)) {
      report.ok = false;
      report.witness = std::move(w);
      return report;
    }
  }
  return report;
}

RegularActionReport regular_action_exhaustive(const TraceCode& code) {
  const ActionChecker checker(code);
  RegularActionReport report;
  for (std::uint64_t iu = 0; iu < checker.size(); ++iu)
    for (std::uint64_t iv = 0; iv < checker.size(); ++iv) {
      ++report.trials;
      if (auto w = checker.check(iu, iv)) {
        report.ok = false;
        report.witness = std::move(w);
        return report;
      }
    }
  return report;
}

namespace {

constexpr std::uint64_t kDumpChunk = 1024;

char digit_char(std::uint32_t d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

template <typename Emit>
void dump_rows(const TraceCode& code, int threads, Emit emit) {
  const std::uint64_t n = code.length();
  std::vector<std::uint32_t> chunk;
  for (std::uint64_t first = 0; first < code.code_size(); first += kDumpChunk) {
    const std::uint64_t count = std::min(kDumpChunk, code.code_size() - first);
    chunk.resize(count * n);
    kernels::omp::materialize(code.tables(), first, count, chunk, threads);
    for (std::uint64_t r = 0; r < count; ++r) emit(std::span<const std::uint32_t>(&chunk[r * n], n));
  }
}

}  // namespace

void write_ring_dump(const TraceCode& code, std::ostream& out, int threads) {
  const ChainRing& base = code.base();
  std::vector<std::string> text(base.size());
  for (std::uint64_t r = 0; r < base.size(); ++r) {
    const auto e = base.element(r);
    std::string s;
    for (std::uint32_t i = 0; i < base.k(); ++i) s += (i ? "|" : "") + std::to_string(e.coeffs[i].value);
    text[r] = std::move(s);
  }
  dump_rows(code, threads, [&](std::span<const std::uint32_t> row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << text[row[j]];
    }
    out << '\n';
  });
}

void write_gray_dump(const TraceCode& code, std::ostream& out, int threads) {
  const ChainRing& base = code.base();
  if (base.p() > 36) throw std::invalid_argument("Gray dumps support p <= 36");
  std::vector<std::string> text(base.size());
  for (std::uint64_t r = 0; r < base.size(); ++r) {
    std::string s;
    for (auto d : gray_map(base, base.element(r))) s += digit_char(d);
    text[r] = std::move(s);
  }
  dump_rows(code, threads, [&](std::span<const std::uint32_t> row) {
    for (auto v : row) out << text[v];
    out << '\n';
  });
}

}  // namespace chaincode
