#include "codebound/oracle.hpp"

#include <algorithm>
#include <string>

#include "codebound/error.hpp"

namespace codebound::oracle {

namespace {

void require_word_alphabet(int q) {
  if (q < 2 || q > 256) throw Error(ErrorCode::invalid_alphabet, "alphabet size must be in 2..256");
}

void require_compatible(const Word& u, const Word& v) {
  if (u.length() != v.length() || u.q() != v.q()) {
    throw Error(ErrorCode::incompatible_words, "words differ in length or alphabet");
  }
}

void require_budget(const ExactNat& count, std::uint64_t budget, const char* what) {
  if (count > budget) {
    throw Error(ErrorCode::enumeration_too_large,
                std::string(what) + ": " + count.str() + " codes exceed budget " +
                    std::to_string(budget));
  }
}

void require_shape(int n, int k) {
  if (k < 1 || k >= n) throw Error(ErrorCode::invalid_query, "need 1 <= k < n");
}

/// Advances a base-q odometer (last digit fastest). Returns false on wrap-around.
bool next_digits(std::vector<Symbol>& digits, int q) {
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (++digits[pos] < q) return true;
    digits[pos] = 0;
  }
  return false;
}

}  // namespace

// Word ---------------------------------------------------------------------------

Word::Word(std::vector<Symbol> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
  require_word_alphabet(q);
  for (Symbol s : symbols_) {
    if (s >= q) throw Error(ErrorCode::invalid_alphabet, "symbol out of range");
  }
}

Word Word::zero(int n, int q) { return Word(std::vector<Symbol>(static_cast<std::size_t>(n), 0), q); }

Word Word::minus(const Word& other) const {
  require_compatible(*this, other);
  std::vector<Symbol> out(symbols_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<Symbol>((symbols_[i] + q_ - other.symbols_[i]) % q_);
  }
  return Word(std::move(out), q_);
}

Word Word::prefix(int k) const {
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + k), q_);
}

int hamming_distance(const Word& u, const Word& v) {
  require_compatible(u, v);
  int distance = 0;
  for (int i = 0; i < u.length(); ++i) distance += u[i] != v[i];
  return distance;
}

int weight(const Word& u) {
  return static_cast<int>(std::count_if(u.symbols().begin(), u.symbols().end(),
                                        [](Symbol s) { return s != 0; }));
}

// Code ---------------------------------------------------------------------------

Code::Code(int n, int q, std::vector<Word> words, std::optional<int> systematic_k)
    : n_(n), q_(q), words_(std::move(words)), systematic_k_(systematic_k) {
  require_word_alphabet(q);
  for (const Word& w : words_) {
    if (w.length() != n || w.q() != q) {
      throw Error(ErrorCode::incompatible_words, "word does not match code length or alphabet");
    }
  }
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
    throw Error(ErrorCode::duplicate_word, "codewords must be distinct");
  }
  if (systematic_k_) {
    const int k = *systematic_k_;
    if (k < 1 || k > n || ExactNat(words_.size()) != power(q, k)) {
      throw Error(ErrorCode::not_systematic, "code size is not q^k");
    }
    // Sorted words with distinct prefixes: adjacent prefixes must differ.
    for (std::size_t i = 1; i < words_.size(); ++i) {
      if (std::equal(words_[i].symbols().begin(), words_[i].symbols().begin() + k,
                     words_[i - 1].symbols().begin())) {
        throw Error(ErrorCode::not_systematic, "two codewords share a systematic prefix");
      }
    }
  }
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

int min_distance(const Code& code) {
  const auto& words = code.words();
  if (words.size() < 2) throw Error(ErrorCode::undefined_distance, "need at least two codewords");
  int best = code.length();
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      best = std::min(best, hamming_distance(words[a], words[b]));
    }
  }
  return best;
}

std::vector<int> distance_multiset(const Code& code) {
  const auto& words = code.words();
  std::vector<int> distances;
  distances.reserve(words.size() * (words.size() - 1) / 2);
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      distances.push_back(hamming_distance(words[a], words[b]));
    }
  }
  std::sort(distances.begin(), distances.end());
  return distances;
}

// StandardFormGenerator -------------------------------------------------------------

StandardFormGenerator::StandardFormGenerator(int n, int k, int q, std::vector<Symbol> tail)
    : n_(n), k_(k), q_(q), tail_(std::move(tail)) {
  require_shape(n, k);
  if (!is_prime(static_cast<std::uint64_t>(q)) || q > 256) {
    throw Error(ErrorCode::unsupported_alphabet, "linear codes need a prime alphabet size");
  }
  if (tail_.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(n - k)) {
    throw Error(ErrorCode::invalid_query, "tail matrix has the wrong shape");
  }
  for (Symbol s : tail_) {
    if (s >= q) throw Error(ErrorCode::invalid_alphabet, "tail entry out of range");
  }
}

Word StandardFormGenerator::encode(std::span<const Symbol> message) const {
  if (message.size() != static_cast<std::size_t>(k_)) {
    throw Error(ErrorCode::incompatible_words, "message length differs from dimension");
  }
  std::vector<Symbol> out(message.begin(), message.end());
  out.resize(static_cast<std::size_t>(n_), 0);
  for (int col = 0; col < n_ - k_; ++col) {
    int acc = 0;
    for (int row = 0; row < k_; ++row) acc += message[row] * tail_entry(row, col);
    out[static_cast<std::size_t>(k_ + col)] = static_cast<Symbol>(acc % q_);
  }
  return Word(std::move(out), q_);
}

Code StandardFormGenerator::code() const {
  std::vector<Word> words;
  std::vector<Symbol> message(static_cast<std::size_t>(k_), 0);
  do {
    words.push_back(encode(message));
  } while (next_digits(message, q_));
  return Code(n_, q_, std::move(words), k_);
}

int StandardFormGenerator::min_weight(int stop_at_or_below) const {
  const int r = n_ - k_;
  // step[p]: change of the tail when message digit p increments and every
  // faster digit (p+1..k-1) wraps from q-1 back to 0.
  std::vector<std::vector<int>> step(static_cast<std::size_t>(k_), std::vector<int>(r, 0));
  for (int p = 0; p < k_; ++p) {
    for (int col = 0; col < r; ++col) {
      int delta = tail_entry(p, col);
      for (int faster = p + 1; faster < k_; ++faster) delta -= (q_ - 1) * tail_entry(faster, col);
      step[p][col] = ((delta % q_) + q_) % q_;
    }
  }

  std::vector<Symbol> message(static_cast<std::size_t>(k_), 0);
  std::vector<int> tail(r, 0);
  int prefix_weight = 0;
  int best = n_;
  while (true) {
    int p = k_ - 1;
    while (p >= 0 && message[p] == q_ - 1) --p;
    if (p < 0) break;
    for (int faster = p + 1; faster < k_; ++faster) {
      message[faster] = 0;
      --prefix_weight;
    }
    if (message[p]++ == 0) ++prefix_weight;
    int w = prefix_weight;
    for (int col = 0; col < r; ++col) {
      tail[col] = (tail[col] + step[p][col]) % q_;
      w += tail[col] != 0;
    }
    if (w < best) {
      best = w;
      if (best <= stop_at_or_below) return best;
    }
  }
  return best;
}

// Enumeration ---------------------------------------------------------------------

ExactNat linear_systematic_count(int n, int k, int q) {
  require_shape(n, k);
  return power(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(k) * (n - k));
}

ExactNat systematic_nonlinear_count(int n, int k, int q) {
  require_shape(n, k);
  const ExactNat prefixes = power(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(k));
  // Guard the exponent before materialising (q^(n-k))^(q^k).
  if (prefixes * (n - k) > 4096) return power(2, 4096);
  return power(static_cast<std::uint64_t>(q),
               static_cast<std::uint64_t>(n - k) * prefixes.convert_to<std::uint64_t>());
}

void enumerate_linear_systematic(int n, int k, int q, std::uint64_t budget,
                                 const std::function<bool(const StandardFormGenerator&)>& visit) {
  require_shape(n, k);
  if (!is_prime(static_cast<std::uint64_t>(q))) {
    throw Error(ErrorCode::unsupported_alphabet,
                "q=" + std::to_string(q) + " is not prime; only prime fields are enumerated");
  }
  require_budget(linear_systematic_count(n, k, q), budget, "linear enumeration");
  std::vector<Symbol> tail(static_cast<std::size_t>(k) * static_cast<std::size_t>(n - k), 0);
  do {
    if (!visit(StandardFormGenerator(n, k, q, tail))) return;
  } while (next_digits(tail, q));
}

void enumerate_systematic_nonlinear(int n, int k, int q, std::uint64_t budget,
                                    const std::function<bool(const Code&)>& visit) {
  require_shape(n, k);
  require_word_alphabet(q);
  require_budget(systematic_nonlinear_count(n, k, q), budget, "systematic enumeration");

  std::vector<std::vector<Symbol>> prefixes;
  std::vector<Symbol> prefix(static_cast<std::size_t>(k), 0);
  do {
    prefixes.push_back(prefix);
  } while (next_digits(prefix, q));

  // One base-q digit string per prefix, concatenated: the whole tail table.
  const std::size_t r = static_cast<std::size_t>(n - k);
  std::vector<Symbol> table(prefixes.size() * r, 0);
  do {
    std::vector<Word> words;
    words.reserve(prefixes.size());
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
      std::vector<Symbol> symbols = prefixes[p];
      symbols.insert(symbols.end(), table.begin() + static_cast<std::ptrdiff_t>(p * r),
                     table.begin() + static_cast<std::ptrdiff_t>((p + 1) * r));
      words.emplace_back(std::move(symbols), q);
    }
    if (!visit(Code(n, q, std::move(words), k))) return;
  } while (next_digits(table, q));
}

BestLinear best_linear_d(int n, int k, int q, std::uint64_t budget) {
  std::optional<BestLinear> best;
  const int singleton = n - k + 1;
  enumerate_linear_systematic(n, k, q, budget, [&](const StandardFormGenerator& gen) {
    const int floor_to_beat = best ? best->distance : 0;
    const int d = gen.min_weight(floor_to_beat);
    if (d > floor_to_beat) best = BestLinear{d, gen};
    return best->distance < singleton;
  });
  return std::move(*best);
}

// Proof mechanics -------------------------------------------------------------------

Code translate_code(const Code& code, const Word& t) {
  if (t.length() != code.length() || t.q() != code.q()) {
    throw Error(ErrorCode::incompatible_words, "translation vector does not match the code");
  }
  std::vector<Word> moved;
  moved.reserve(code.size());
  for (const Word& w : code.words()) moved.push_back(w.minus(t));
  return Code(code.length(), code.q(), std::move(moved), code.systematic_k());
}

InjectionCheck verify_injection_property(const Code& code, int i) {
  if (i < 1) throw Error(ErrorCode::invalid_query, "i must be positive");
  if (!code.systematic_k()) {
    throw Error(ErrorCode::precondition_violation, "code is not marked systematic");
  }
  if (!code.contains(Word::zero(code.length(), code.q()))) {
    throw Error(ErrorCode::precondition_violation, "code does not contain the zero word");
  }
  InjectionCheck check;
  const int d = min_distance(code);
  if (d < 2 * i + 1) return check;

  const int k = *code.systematic_k();
  std::vector<std::pair<Word, const Word*>> tails;  // (tail, codeword)
  for (const Word& c : code.words()) {
    if (weight(c.prefix(k)) != i) continue;
    std::vector<Symbol> tail(c.symbols().begin() + k, c.symbols().end());
    Word tail_word(std::move(tail), code.q());
    if (weight(tail_word) < d - i) {
      check.status = InjectionCheck::Status::counterexample;
      check.witnesses = {c};
      return check;
    }
    tails.emplace_back(std::move(tail_word), &c);
  }
  std::sort(tails.begin(), tails.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t j = 1; j < tails.size(); ++j) {
    if (tails[j].first == tails[j - 1].first) {
      check.status = InjectionCheck::Status::counterexample;
      check.witnesses = {*tails[j - 1].second, *tails[j].second};
      return check;
    }
  }
  check.status = InjectionCheck::Status::pass;
  return check;
}

Crosscheck refutation_crosscheck(int n, int k, int d, int q, TailVariant variant,
                                 std::uint64_t budget) {
  if (!bound_a_check(n, k, d, q, variant).refuted()) {
    throw Error(ErrorCode::precondition_violation, "bound A does not refute these parameters");
  }
  Crosscheck result;
  enumerate_linear_systematic(n, k, q, budget, [&](const StandardFormGenerator& gen) {
    ++result.linear_codes_checked;
    if (gen.min_weight(d - 1) >= d) {
      result.confirmed = false;
      result.contradiction = gen.code();
      return false;
    }
    return true;
  });
  if (!result.confirmed || systematic_nonlinear_count(n, k, q) > budget) return result;

  enumerate_systematic_nonlinear(n, k, q, budget, [&](const Code& code) {
    ++result.nonlinear_codes_checked;
    if (min_distance(code) >= d) {
      result.confirmed = false;
      result.contradiction = code;
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace codebound::oracle
