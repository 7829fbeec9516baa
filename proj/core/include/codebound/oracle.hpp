#pragma once

// Brute-force ground truth for tiny parameters: explicit words and codes,
// exhaustive enumeration of systematic codes, and the individual steps of the
// counting argument behind Bound A (translation to a code containing zero,
// the weight split between systematic part and tail, injectivity of the
// prefix -> tail map).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "codebound/bounds.hpp"
#include "codebound/exact.hpp"

namespace codebound::oracle {

using Symbol = std::uint8_t;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class Word {
 public:
  Word(std::vector<Symbol> symbols, int q);
  static Word zero(int n, int q);

  int q() const noexcept { return q_; }
  int length() const noexcept { return static_cast<int>(symbols_.size()); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }

  /// Coordinate-wise difference modulo q.
  Word minus(const Word& other) const;
  Word prefix(int k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
  int q_;
};

int hamming_distance(const Word& u, const Word& v);
int weight(const Word& u);

/// A finite set of distinct words of common length and alphabet. When
/// `systematic_k` is set the first k coordinates of the words run over every
/// one of the q^k prefixes exactly once.
class Code {
 public:
  Code(int n, int q, std::vector<Word> words, std::optional<int> systematic_k = std::nullopt);

  int length() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  std::optional<int> systematic_k() const noexcept { return systematic_k_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(const Word& w) const;

 private:
  int n_;
  int q_;
  std::vector<Word> words_;  // sorted
  std::optional<int> systematic_k_;
};

/// Minimum pairwise distance (full pairwise scan, valid for any code).
int min_distance(const Code& code);

/// Sorted list of all pairwise distances.
std::vector<int> distance_multiset(const Code& code);

/// Generator [I_k | tail] over the prime field F_q.
class StandardFormGenerator {
 public:
  StandardFormGenerator(int n, int k, int q, std::vector<Symbol> tail);

  int length() const noexcept { return n_; }
  int dimension() const noexcept { return k_; }
  int q() const noexcept { return q_; }
  /// Row-major k x (n-k) tail matrix.
  std::span<const Symbol> tail() const noexcept { return tail_; }
  Symbol tail_entry(int row, int col) const noexcept { return tail_[row * (n_ - k_) + col]; }

  Word encode(std::span<const Symbol> message) const;
  Code code() const;

  /// Minimum nonzero codeword weight (equal to the minimum distance by
  /// linearity). Scanning stops early once a weight <= `stop_at_or_below` is
  /// seen; the returned value is then only an upper bound on the true minimum.
  int min_weight(int stop_at_or_below = 0) const;

 private:
  int n_;
  int k_;
  int q_;
  std::vector<Symbol> tail_;
};

/// Number of standard-form generators for (n, k, q): q^(k(n-k)).
ExactNat linear_systematic_count(int n, int k, int q);
/// Number of systematic codes for (n, k, q): (q^(n-k))^(q^k).
ExactNat systematic_nonlinear_count(int n, int k, int q);

/// Calls `visit` for every standard-form generator in a fixed order (tail
/// matrices counted as base-q integers, last entry fastest). `visit` returns
/// false to stop early. Throws unsupported_alphabet for non-prime q and
/// enumeration_too_large when q^(k(n-k)) exceeds `budget`.
void enumerate_linear_systematic(int n, int k, int q, std::uint64_t budget,
                                 const std::function<bool(const StandardFormGenerator&)>& visit);

/// Calls `visit` for every systematic code (every map from the q^k prefixes to
/// tails). Throws enumeration_too_large when the count exceeds `budget`.
void enumerate_systematic_nonlinear(int n, int k, int q, std::uint64_t budget,
                                    const std::function<bool(const Code&)>& visit);

struct BestLinear {
  int distance = 0;
  StandardFormGenerator witness;
};

/// Largest minimum distance over all standard-form generators.
BestLinear best_linear_d(int n, int k, int q, std::uint64_t budget = kDefaultBudget);

/// {c - t : c in code}.
Code translate_code(const Code& code, const Word& t);

struct InjectionCheck {
  enum class Status { pass, not_applicable, counterexample };
  Status status = Status::not_applicable;
  /// On counterexample: the offending codeword(s). A single word when its tail
  /// is too light, two words when their tails collide.
  std::vector<Word> witnesses;
};

/// For a systematic code containing zero with distance d >= 2i + 1, checks
/// that every codeword whose prefix has weight i has tail weight >= d - i and
/// that those codewords have pairwise distinct tails.
InjectionCheck verify_injection_property(const Code& code, int i);

struct Crosscheck {
  bool confirmed = true;
  std::optional<Code> contradiction;
  std::uint64_t linear_codes_checked = 0;
  std::uint64_t nonlinear_codes_checked = 0;  ///< zero when out of budget
};

/// Exhaustively confirms that no systematic code with the given parameters
/// reaches distance d. Requires bound_a_check to refute (n, k, d, q); linear
/// enumeration must fit the budget, nonlinear enumeration is added when it
/// fits too.
Crosscheck refutation_crosscheck(int n, int k, int d, int q, TailVariant variant,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace codebound::oracle
