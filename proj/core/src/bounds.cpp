#include "codebound/bounds.hpp"

#include <algorithm>
#include <string>

#include "codebound/error.hpp"

namespace codebound {

std::string_view to_string(BoundId id) noexcept {
  switch (id) {
    case BoundId::griesmer: return "griesmer";
    case BoundId::singleton: return "singleton";
    case BoundId::hamming: return "hamming";
    case BoundId::plotkin: return "plotkin";
    case BoundId::elias: return "elias";
    case BoundId::levenshtein: return "levenshtein";
    case BoundId::a: return "a";
  }
  return "unknown";
}

std::optional<BoundId> parse_bound_id(std::string_view name) noexcept {
  for (BoundId id : kAllBounds) {
    if (name == to_string(id)) return id;
  }
  if (name.size() == 1) {
    switch (name.front()) {
      case 'g': return BoundId::griesmer;
      case 's': return BoundId::singleton;
      case 'h': return BoundId::hamming;
      case 'p': return BoundId::plotkin;
      case 'e': return BoundId::elias;
      case 'l': return BoundId::levenshtein;
      case 'A': return BoundId::a;
      default: break;
    }
  }
  return std::nullopt;
}

std::string_view to_string(FeasibilityVerdict::Status status) noexcept {
  switch (status) {
    case FeasibilityVerdict::Status::feasible: return "feasible";
    case FeasibilityVerdict::Status::refuted: return "refuted";
    case FeasibilityVerdict::Status::not_applicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

void validate_triple(int n, int d, int q) {
  if (q < 2) throw Error(ErrorCode::invalid_alphabet, "alphabet size must be at least 2");
  if (n < 1 || d < 1 || d > n) {
    throw Error(ErrorCode::invalid_query,
                "need 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
}

}  // namespace

void BoundQuery::validate() const { validate_triple(n, d, q); }

FeasibilityVerdict bound_a_check(int n, int k, int d, int q, TailVariant variant) {
  validate_triple(n, d, q);
  FeasibilityVerdict verdict;
  if (k <= 2 || k >= n || d < 3) return verdict;

  const auto m = static_cast<std::uint64_t>(n - k);
  const auto uq = static_cast<std::uint64_t>(q);
  const std::uint64_t tail_factor = variant == TailVariant::weight ? uq - 1 : 1;

  // terms[j] = C(m, j) * tail_factor^j
  std::vector<ExactNat> terms(m + 1);
  terms[0] = 1;
  for (std::uint64_t j = 1; j <= m; ++j) {
    terms[j] = terms[j - 1] * ((m - j + 1) * tail_factor);
    terms[j] /= j;
  }

  // Both sides are updated incrementally as i grows: lhs by the binomial
  // ratio, the tail sum by one extra term as its lower limit d - i drops.
  const int i_max = std::min((d - 1) / 2, k);
  ExactNat lhs = 1;
  ExactNat tail = 0;
  for (std::uint64_t j = static_cast<std::uint64_t>(d - 1); j <= m; ++j) tail += terms[j];
  ExactNat literal_factor = 1;

  for (int i = 1; i <= i_max; ++i) {
    lhs *= static_cast<std::uint64_t>(k - i + 1) * (uq - 1);
    lhs /= static_cast<std::uint64_t>(i);
    if (i > 1) {
      const auto lo = static_cast<std::uint64_t>(d - i);
      if (lo <= m) tail += terms[lo];
    }
    ExactNat rhs = tail;
    if (variant == TailVariant::literal) {
      literal_factor *= uq - 1;
      rhs *= literal_factor;
    }
    if (lhs > rhs) {
      verdict.status = FeasibilityVerdict::Status::refuted;
      verdict.witness = i;
      verdict.lhs = std::move(lhs);
      verdict.rhs = std::move(rhs);
      return verdict;
    }
  }
  verdict.status = FeasibilityVerdict::Status::feasible;
  return verdict;
}

int max_k_of(const std::function<bool(int)>& feasible, int k_lo, int k_hi) {
  if (k_lo > k_hi) throw Error(ErrorCode::invalid_range, "empty k range");
  // Invariant: everything below `lo` is feasible, everything above `hi` refuted.
  int lo = k_lo;
  int hi = k_hi;
  while (lo <= hi) {
    const int mid = lo + (hi - lo) / 2;
    if (feasible(mid)) {
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return hi;
}

std::optional<int> bound_a_max_k(int n, int d, int q, TailVariant variant) {
  validate_triple(n, d, q);
  if (d < 3 || n < 4) return std::nullopt;
  return max_k_of([&](int k) { return !bound_a_check(n, k, d, q, variant).refuted(); }, 3,
                  n - 1);
}

int griesmer_max_k(int n, int d, int q) {
  validate_triple(n, d, q);
  std::int64_t used = 0;
  std::int64_t divisor = 1;
  int k = 0;
  while (true) {
    const std::int64_t term = (d + divisor - 1) / divisor;
    if (used + term > n) return k;
    used += term;
    ++k;
    if (divisor < d) divisor *= q;
  }
}

int singleton_max_k(int n, int d) {
  if (n < 1 || d < 1 || d > n) throw Error(ErrorCode::invalid_query, "need 1 <= d <= n");
  return n - d + 1;
}

ExactNat hamming_max_size(int n, int d, int q) {
  validate_triple(n, d, q);
  const auto un = static_cast<std::uint64_t>(n);
  const auto uq = static_cast<std::uint64_t>(q);
  return power(uq, un) / sphere_volume(un, static_cast<std::uint64_t>((d - 1) / 2), uq);
}

std::optional<ExactNat> plotkin_max_size(int n, int d, int q) {
  validate_triple(n, d, q);
  // d > (1 - 1/q) n  <=>  q d > (q - 1) n; the bound is q d / (q d - (q - 1) n).
  const std::int64_t scaled_d = static_cast<std::int64_t>(q) * d;
  const std::int64_t scaled_theta_n = static_cast<std::int64_t>(q - 1) * n;
  if (scaled_d <= scaled_theta_n) return std::nullopt;
  return ExactNat(scaled_d / (scaled_d - scaled_theta_n));
}

namespace {

// Elias value with theta = (q-1)/q cleared from numerator and denominator:
//   theta n d / D * q^n / V  =  (q-1) n d q^n / (q D * V),
// where q D = q w^2 - 2 (q-1) n w + (q-1) n d.
std::optional<ExactNat> elias_value(int n, int d, int q, int w, const ExactNat& q_pow_n,
                                    const ExactNat& volume) {
  if (static_cast<std::int64_t>(q) * w > static_cast<std::int64_t>(q - 1) * n) return std::nullopt;
  const ExactInt qn = static_cast<std::int64_t>(q - 1) * n;
  const ExactInt scaled_den = ExactInt(q) * w * w - 2 * qn * w + qn * d;
  if (scaled_den <= 0) return std::nullopt;
  const ExactRatio value(qn * d * q_pow_n, scaled_den * volume);
  return floor_nonnegative(value);
}

}  // namespace

std::optional<ExactNat> elias_size_at(int n, int d, int q, int w) {
  validate_triple(n, d, q);
  if (w < 0 || w > n) return std::nullopt;
  const auto uq = static_cast<std::uint64_t>(q);
  return elias_value(n, d, q, w, power(uq, static_cast<std::uint64_t>(n)),
                     sphere_volume(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(w), uq));
}

std::optional<EliasBound> elias_max_size(int n, int d, int q) {
  validate_triple(n, d, q);
  const auto un = static_cast<std::uint64_t>(n);
  const auto uq = static_cast<std::uint64_t>(q);
  const ExactNat q_pow_n = power(uq, un);

  std::optional<EliasBound> best;
  ExactNat volume = 0;
  ExactNat shell = 1;  // weight_count(n, w, q)
  for (int w = 0; static_cast<std::int64_t>(q) * w <= static_cast<std::int64_t>(q - 1) * n; ++w) {
    if (w > 0) {
      shell *= (un - static_cast<std::uint64_t>(w) + 1) * (uq - 1);
      shell /= static_cast<std::uint64_t>(w);
    }
    volume += shell;
    auto value = elias_value(n, d, q, w, q_pow_n, volume);
    if (value && (!best || *value < best->size)) best = EliasBound{std::move(*value), w};
  }
  return best;
}

namespace {

BoundResult size_result(BoundId id, ExactNat size, int q) {
  BoundResult result;
  result.bound = id;
  result.k_max = static_cast<int>(floor_log_q(size, static_cast<std::uint64_t>(q)));
  result.size_max = std::move(size);
  return result;
}

}  // namespace

BoundResult evaluate_bound(BoundId bound, const BoundQuery& query) {
  query.validate();
  const int n = query.n;
  const int d = query.d;
  const int q = query.q;
  switch (bound) {
    case BoundId::griesmer:
      return BoundResult{bound, griesmer_max_k(n, d, q), std::nullopt, std::nullopt, std::nullopt};
    case BoundId::singleton:
      return BoundResult{bound, singleton_max_k(n, d), std::nullopt, std::nullopt, std::nullopt};
    case BoundId::hamming:
      return size_result(bound, hamming_max_size(n, d, q), q);
    case BoundId::plotkin: {
      auto size = plotkin_max_size(n, d, q);
      if (!size) return BoundResult{bound, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
      return size_result(bound, std::move(*size), q);
    }
    case BoundId::elias: {
      auto elias = elias_max_size(n, d, q);
      if (!elias) return BoundResult{bound, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
      auto result = size_result(bound, std::move(elias->size), q);
      result.witness = elias->radius;
      return result;
    }
    case BoundId::levenshtein: {
      auto lev = levenshtein_max_size(n, d, q);
      auto result = size_result(bound, std::move(lev.size), q);
      if (lev.degree > 0) result.witness = lev.degree;
      return result;
    }
    case BoundId::a: {
      BoundResult result{bound, bound_a_max_k(n, d, q, query.variant), std::nullopt, std::nullopt,
                         std::nullopt};
      if (result.k_max && *result.k_max + 1 < n) {
        result.refutation = bound_a_check(n, *result.k_max + 1, d, q, query.variant);
      }
      return result;
    }
  }
  throw Error(ErrorCode::invalid_query, "unknown bound");
}

Comparison best_upper_k(const BoundQuery& query, const std::vector<BoundId>& selection) {
  query.validate();
  Comparison comparison;
  for (BoundId id : kAllBounds) {
    if (std::find(selection.begin(), selection.end(), id) == selection.end()) continue;
    BoundResult result = evaluate_bound(id, query);
    if (result.k_max && (!comparison.minimum || *result.k_max < *comparison.minimum)) {
      comparison.minimum = result.k_max;
    }
    comparison.results.push_back(std::move(result));
  }
  return comparison;
}

}  // namespace codebound
