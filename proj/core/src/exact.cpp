#include "codebound/exact.hpp"

#include <algorithm>

#include "codebound/error.hpp"

namespace codebound {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_alphabet: return "invalid-alphabet";
    case ErrorCode::invalid_radius: return "invalid-radius";
    case ErrorCode::undefined_log: return "undefined-log";
    case ErrorCode::invalid_query: return "invalid-query";
    case ErrorCode::invalid_range: return "invalid-range";
    case ErrorCode::incompatible_words: return "incompatible-words";
    case ErrorCode::undefined_distance: return "undefined-distance";
    case ErrorCode::duplicate_word: return "duplicate-word";
    case ErrorCode::not_systematic: return "not-systematic";
    case ErrorCode::enumeration_too_large: return "enumeration-too-large";
    case ErrorCode::unsupported_alphabet: return "unsupported-alphabet";
    case ErrorCode::precondition_violation: return "precondition-violation";
    case ErrorCode::malformed_data: return "malformed-data";
  }
  return "unknown";
}

namespace {

void require_alphabet(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::invalid_alphabet, "alphabet size must be at least 2");
}

}  // namespace

ExactNat power(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(ExactNat(base), static_cast<unsigned>(exponent));
}

ExactNat binomial(std::uint64_t m, std::uint64_t r) {
  if (r > m) return 0;
  r = std::min(r, m - r);
  ExactNat acc = 1;
  // acc = C(m - r + t, t) after step t; each division is exact.
  for (std::uint64_t t = 1; t <= r; ++t) {
    acc *= m - r + t;
    acc /= t;
  }
  return acc;
}

ExactInt binomial_signed(std::int64_t x, std::uint64_t r) {
  if (x >= 0) return binomial(static_cast<std::uint64_t>(x), r);
  // C(-y, r) = (-1)^r C(y + r - 1, r) for y > 0.
  const auto y = static_cast<std::uint64_t>(-x);
  ExactInt value = binomial(y + r - 1, r);
  return (r % 2 == 0) ? value : ExactInt(-value);
}

ExactNat weight_count(std::uint64_t m, std::uint64_t j, std::uint64_t q) {
  require_alphabet(q);
  if (j > m) return 0;
  return binomial(m, j) * power(q - 1, j);
}

ExactNat sphere_volume(std::uint64_t n, std::uint64_t r, std::uint64_t q) {
  require_alphabet(q);
  if (r > n) throw Error(ErrorCode::invalid_radius, "radius exceeds length");
  ExactNat total = 0;
  ExactNat term = 1;  // C(n, j)(q-1)^j, updated by ratio
  for (std::uint64_t j = 0; j <= r; ++j) {
    if (j > 0) {
      term *= (n - j + 1) * (q - 1);
      term /= j;
    }
    total += term;
  }
  return total;
}

ExactNat tail_mass(std::uint64_t m, std::uint64_t lo, std::uint64_t q, TailVariant variant,
                   std::uint64_t i) {
  require_alphabet(q);
  if (lo > m) return 0;
  const std::uint64_t factor = variant == TailVariant::weight ? q - 1 : 1;
  ExactNat total = 0;
  ExactNat term = binomial(m, lo) * power(factor, lo);
  for (std::uint64_t j = lo; j <= m; ++j) {
    if (j > lo) {
      term *= (m - j + 1) * factor;
      term /= j;
    }
    total += term;
  }
  if (variant == TailVariant::literal) total *= power(q - 1, i);
  return total;
}

ExactInt krawtchouk(std::uint64_t n, std::uint64_t q, std::uint64_t k, std::int64_t x) {
  require_alphabet(q);
  const auto len = static_cast<std::int64_t>(n);
  ExactInt sum = 0;
  for (std::uint64_t j = 0; j <= k; ++j) {
    ExactInt term = binomial_signed(x, j) * binomial_signed(len - x, k - j) * power(q - 1, k - j);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

std::uint64_t floor_log_q(const ExactNat& m, std::uint64_t q) {
  require_alphabet(q);
  if (m <= 0) throw Error(ErrorCode::undefined_log, "logarithm of zero");
  std::uint64_t k = 0;
  ExactNat next = q;
  while (next <= m) {
    next *= q;
    ++k;
  }
  return k;
}

ExactNat floor_nonnegative(const ExactRatio& r) {
  return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

bool is_prime(std::uint64_t q) noexcept {
  if (q < 2) return false;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

}  // namespace codebound
