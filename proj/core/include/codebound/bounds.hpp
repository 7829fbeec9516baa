#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "codebound/exact.hpp"

namespace codebound {

/// Bounds in their canonical reporting order: the classical competitors first,
/// the systematic-code counting bound last.
enum class BoundId { griesmer, singleton, hamming, plotkin, elias, levenshtein, a };

inline constexpr std::array<BoundId, 7> kAllBounds = {
    BoundId::griesmer, BoundId::singleton,   BoundId::hamming, BoundId::plotkin,
    BoundId::elias,    BoundId::levenshtein, BoundId::a,
};

std::string_view to_string(BoundId id) noexcept;
std::optional<BoundId> parse_bound_id(std::string_view name) noexcept;

struct BoundQuery {
  int n = 0;
  int d = 0;
  int q = 2;
  TailVariant variant = TailVariant::weight;

  /// Throws invalid_alphabet for q < 2 and invalid_query unless 1 <= d <= n.
  void validate() const;
};

struct FeasibilityVerdict {
  enum class Status { feasible, refuted, not_applicable };

  Status status = Status::not_applicable;
  std::optional<int> witness;  ///< violating i (Bound A)
  std::optional<ExactNat> lhs;
  std::optional<ExactNat> rhs;

  bool refuted() const noexcept { return status == Status::refuted; }
  bool feasible() const noexcept { return status == Status::feasible; }
};

std::string_view to_string(FeasibilityVerdict::Status status) noexcept;

struct BoundResult {
  BoundId bound = BoundId::a;
  std::optional<int> k_max;          ///< nullopt: bound not applicable
  std::optional<ExactNat> size_max;  ///< size-based bounds only
  std::optional<int> witness;        ///< Elias radius w, Levenshtein degree
  std::optional<FeasibilityVerdict> refutation;  ///< Bound A: verdict at k_max + 1

  bool applicable() const noexcept { return k_max.has_value(); }
};

struct Comparison {
  std::vector<BoundResult> results;  ///< in canonical BoundId order
  std::optional<int> minimum;        ///< over applicable bounds
};

// Bound A --------------------------------------------------------------------

/// Checks every admissible i (1 <= i <= (d-1)/2) of the systematic-code
/// counting inequality for an (n, k) code with distance d. The smallest
/// violating i is reported along with both sides.
FeasibilityVerdict bound_a_check(int n, int k, int d, int q,
                                 TailVariant variant = TailVariant::weight);

/// Largest k in 3..n-1 not refuted by bound_a_check, or 2 when k = 3 already
/// fails. nullopt when d < 3 or n < 4.
std::optional<int> bound_a_max_k(int n, int d, int q, TailVariant variant = TailVariant::weight);

// Classical bounds --------------------------------------------------------------

/// Largest k with sum_{i<k} ceil(d / q^i) <= n.
int griesmer_max_k(int n, int d, int q);

int singleton_max_k(int n, int d);

/// floor(q^n / V_q(n, floor((d-1)/2))).
ExactNat hamming_max_size(int n, int d, int q);

/// floor(d / (d - theta n)), theta = 1 - 1/q; nullopt unless d > theta n.
std::optional<ExactNat> plotkin_max_size(int n, int d, int q);

struct EliasBound {
  ExactNat size;
  int radius = 0;  ///< minimising w
};

/// Minimum over admissible integer radii w of
///   floor( theta n d / (w^2 - 2 theta n w + theta n d) * q^n / V_q(n, w) ),
/// admissible meaning w <= theta n and a positive denominator. Ties keep the
/// smallest w.
std::optional<EliasBound> elias_max_size(int n, int d, int q);

/// Elias value at a single radius; nullopt if w is not admissible.
std::optional<ExactNat> elias_size_at(int n, int d, int q, int w);

struct LevenshteinBound {
  ExactNat size;
  int degree = 0;  ///< degree tau of the extremal polynomial used
};

/// Levenshtein's universal bound for the q-ary Hamming space (see
/// levenshtein.cpp for the construction).
LevenshteinBound levenshtein_max_size(int n, int d, int q);

/// Exact Krawtchouk coefficients f_0..f_n of the degree-tau extremal polynomial
/// used by levenshtein_max_size, scaled by an arbitrary positive constant. A
/// valid linear-programming certificate has every coefficient >= 0 and f_0 > 0.
std::vector<ExactInt> levenshtein_certificate(int n, int d, int q, int degree);

/// The degree Levenshtein's interval rule selects for distance d, or nullopt
/// when no interval contains d (only d = 1).
std::optional<int> levenshtein_degree(int n, int d, int q);

// Drivers --------------------------------------------------------------------

/// Largest k in [k_lo, k_hi] with `feasible(k)`, assuming that once the
/// predicate fails it fails for every larger k. Returns k_lo - 1 if none.
int max_k_of(const std::function<bool(int)>& feasible, int k_lo, int k_hi);

BoundResult evaluate_bound(BoundId bound, const BoundQuery& query);

Comparison best_upper_k(const BoundQuery& query, const std::vector<BoundId>& selection);

}  // namespace codebound
