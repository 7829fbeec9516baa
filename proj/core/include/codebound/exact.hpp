#pragma once

// Exact counting primitives. Every quantity that feeds a bound (binomials,
// (q-1)^j factors, q^n, ball volumes) is an arbitrary-precision integer; there
// is no floating point anywhere on the evaluation path.

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace codebound {

/// Nonnegative count. Kept as a signed big integer so differences never wrap;
/// functions returning ExactNat guarantee a value >= 0.
using ExactNat = boost::multiprecision::cpp_int;
/// Signed exact integer (Krawtchouk values, kernel sums).
using ExactInt = boost::multiprecision::cpp_int;
/// Exact rational, always in lowest terms with a positive denominator.
using ExactRatio = boost::multiprecision::cpp_rational;

/// Which right-hand side of the systematic-code counting inequality to use.
/// `weight` counts tails of weight j as C(m,j)(q-1)^j; `literal` multiplies the
/// whole binomial sum by (q-1)^i.
enum class TailVariant { weight, literal };

ExactNat power(std::uint64_t base, std::uint64_t exponent);

/// C(m, r); zero when r > m.
ExactNat binomial(std::uint64_t m, std::uint64_t r);

/// Generalised binomial C(x, r) for any integer x (falling factorial / r!).
ExactInt binomial_signed(std::int64_t x, std::uint64_t r);

/// Number of q-ary words of length m and Hamming weight j: C(m,j)(q-1)^j.
ExactNat weight_count(std::uint64_t m, std::uint64_t j, std::uint64_t q);

/// V_q(n, r): words within distance r of a fixed word.
ExactNat sphere_volume(std::uint64_t n, std::uint64_t r, std::uint64_t q);

/// Number of length-m tails of weight at least `lo`, under the chosen variant.
/// `i` is the systematic-part weight; only the literal variant uses it.
ExactNat tail_mass(std::uint64_t m, std::uint64_t lo, std::uint64_t q, TailVariant variant,
                   std::uint64_t i);

/// Krawtchouk polynomial K_k(x) = sum_j (-1)^j C(x,j) C(n-x,k-j) (q-1)^(k-j).
/// x may be any integer (the polynomial is evaluated off the grid 0..n too).
ExactInt krawtchouk(std::uint64_t n, std::uint64_t q, std::uint64_t k, std::int64_t x);

/// Largest k with q^k <= m. Throws undefined_log for m == 0.
std::uint64_t floor_log_q(const ExactNat& m, std::uint64_t q);

/// floor(r) for r >= 0.
ExactNat floor_nonnegative(const ExactRatio& r);

bool is_prime(std::uint64_t q) noexcept;

}  // namespace codebound
