// Levenshtein's universal bound for q-ary codes.
//
// Write w(x) = C(n,x)(q-1)^x for the distance distribution weights and K_i for
// the Krawtchouk polynomials of length n. Two "adjacent" families enter:
//
//   (1,0): orthogonal for x * w(x),        K^{1,0}_i(x) ~ K_i^{(n-1)}(x - 1)
//   (1,1): orthogonal for x (n - x) w(x),  K^{1,1}_i(x) ~ K_i^{(n-2)}(x - 1)
//
// With T_{k-1}(x) = sum_{i<k} K^{a,b}_i(x) K^{a,b}_i(d) / r_i the Christoffel-
// Darboux kernel at d, the extremal polynomials are
//
//   degree 2k-1:  f(x) = (d - x) T^{1,0}_{k-1}(x)^2
//   degree 2k:    f(x) = (d - x)(n - x) T^{1,1}_{k-1}(x)^2
//
// Both are <= 0 on d..n, and the code size is at most q^n f(0) / sum_x w(x) f(x).
// The degree is chosen by where d falls among the smallest zeros z^{a,b}_k:
// 2k-1 when z^{1,0}_k <= d <= z^{1,1}_{k-1}, 2k when z^{1,1}_k <= d <= z^{1,0}_k.
// Krawtchouk zeros are more than 1 apart, so "z <= d" is decided exactly by a
// sign change of the polynomial on the integer grid 0..d.

#include <optional>
#include <vector>

#include "codebound/bounds.hpp"
#include "codebound/error.hpp"

namespace codebound {

namespace {

/// Rows of K_i^{(len)}(y) for y = x - 1, x = 0..last, built by the three-term
/// recurrence (k+1) K_{k+1} = ((len-k)(q-1) + k - q y) K_k - (q-1)(len-k+1) K_{k-1}.
class ShiftedKrawtchouk {
 public:
  ShiftedKrawtchouk(int len, int q, int last) : len_(len), q_(q), prev_(last + 1), cur_(last + 1) {
    for (int x = 0; x <= last; ++x) {
      prev_[x] = 0;
      cur_[x] = 1;
    }
  }

  int degree() const noexcept { return degree_; }
  const std::vector<ExactInt>& row() const noexcept { return cur_; }

  void advance() {
    const std::int64_t k = degree_;
    for (std::size_t x = 0; x < cur_.size(); ++x) {
      const std::int64_t y = static_cast<std::int64_t>(x) - 1;
      ExactInt next = ExactInt((len_ - k) * (q_ - 1) + k - q_ * y) * cur_[x];
      next -= ExactInt((q_ - 1) * (len_ - k + 1)) * prev_[x];
      next /= k + 1;
      prev_[x] = std::move(cur_[x]);
      cur_[x] = std::move(next);
    }
    ++degree_;
  }

 private:
  std::int64_t len_;
  std::int64_t q_;
  int degree_ = 0;
  std::vector<ExactInt> prev_;
  std::vector<ExactInt> cur_;
};

/// True when the current row has a zero in x in (0, d]; the value at x = 0
/// (y = -1) is always positive.
bool zero_at_or_below(const std::vector<ExactInt>& row, int d) {
  for (int x = 1; x <= d; ++x) {
    if (row[x] <= 0) return true;
  }
  return false;
}

struct ExtremalPolynomial {
  std::vector<ExactInt> values;  // f(x), x = 0..n, up to a positive scale
};

ExtremalPolynomial extremal_polynomial(int n, int d, int q, int degree) {
  const bool odd = degree % 2 == 1;
  const int kernel_terms = (degree + 1) / 2;  // k: kernel has degree k-1
  const int len = odd ? n - 1 : n - 2;
  const auto ulen = static_cast<std::uint64_t>(len);
  const auto uq = static_cast<std::uint64_t>(q);

  // Common denominator of 1 / r_i, r_i = C(len, i)(q-1)^i.
  ExactInt scale = 1;
  for (int i = 0; i < kernel_terms; ++i) {
    scale = boost::multiprecision::lcm(scale, weight_count(ulen, static_cast<std::uint64_t>(i), uq));
  }

  ShiftedKrawtchouk family(len, q, n);
  std::vector<ExactInt> kernel(n + 1, ExactInt(0));
  for (int i = 0; i < kernel_terms; ++i) {
    if (i > 0) family.advance();
    const auto& row = family.row();
    const ExactInt coefficient =
        row[d] * (scale / weight_count(ulen, static_cast<std::uint64_t>(i), uq));
    for (int x = 0; x <= n; ++x) kernel[x] += coefficient * row[x];
  }

  ExtremalPolynomial poly;
  poly.values.resize(n + 1);
  for (int x = 0; x <= n; ++x) {
    ExactInt factor = d - x;
    if (!odd) factor *= n - x;
    poly.values[x] = factor * kernel[x] * kernel[x];
  }
  return poly;
}

}  // namespace

std::optional<int> levenshtein_degree(int n, int d, int q) {
  BoundQuery{n, d, q}.validate();
  if (d == 1) return std::nullopt;
  ShiftedKrawtchouk odd_family(n - 1, q, d);
  ShiftedKrawtchouk even_family(n - 2, q, d);
  for (int k = 1; k <= n - 1; ++k) {
    odd_family.advance();
    if (zero_at_or_below(odd_family.row(), d)) return 2 * k - 1;
    if (k > n - 2) break;
    even_family.advance();
    if (zero_at_or_below(even_family.row(), d)) return 2 * k;
  }
  return std::nullopt;
}

LevenshteinBound levenshtein_max_size(int n, int d, int q) {
  BoundQuery{n, d, q}.validate();
  const auto un = static_cast<std::uint64_t>(n);
  const auto uq = static_cast<std::uint64_t>(q);
  const auto degree = levenshtein_degree(n, d, q);
  if (!degree) return LevenshteinBound{power(uq, un), 0};

  const ExtremalPolynomial poly = extremal_polynomial(n, d, q, *degree);
  ExactInt mass = 0;
  ExactNat w = 1;  // weight_count(n, x, q)
  for (int x = 0; x <= n; ++x) {
    if (x > 0) {
      w *= (un - static_cast<std::uint64_t>(x) + 1) * (uq - 1);
      w /= static_cast<std::uint64_t>(x);
    }
    mass += w * poly.values[x];
  }
  if (mass <= 0) {
    throw Error(ErrorCode::precondition_violation, "extremal polynomial has nonpositive mean");
  }
  const ExactRatio bound(power(uq, un) * poly.values[0], mass);
  return LevenshteinBound{floor_nonnegative(bound), *degree};
}

std::vector<ExactInt> levenshtein_certificate(int n, int d, int q, int degree) {
  BoundQuery{n, d, q}.validate();
  if (degree < 1) throw Error(ErrorCode::invalid_query, "degree must be positive");
  const ExtremalPolynomial poly = extremal_polynomial(n, d, q, degree);
  const auto un = static_cast<std::uint64_t>(n);
  const auto uq = static_cast<std::uint64_t>(q);

  std::vector<ExactInt> weighted(n + 1);
  for (int x = 0; x <= n; ++x) {
    weighted[x] = weight_count(un, static_cast<std::uint64_t>(x), uq) * poly.values[x];
  }
  // f_i is proportional to sum_x w(x) f(x) K_i(x) / r_i; r_i > 0 does not
  // affect signs, so it is left out.
  std::vector<ExactInt> coefficients(n + 1);
  for (int i = 0; i <= n; ++i) {
    ExactInt sum = 0;
    for (int x = 0; x <= n; ++x) {
      sum += weighted[x] * krawtchouk(un, uq, static_cast<std::uint64_t>(i), x);
    }
    coefficients[i] = std::move(sum);
  }
  return coefficients;
}

}  // namespace codebound
