#pragma once

// Continuants of words of partial quotients, their abbreviated forms, and the
// comparison of continuant recurrences against the R-family sequences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/exact_ratio.hpp"
#include "cayley/integer.hpp"

namespace cayley {

/// Finite sequence of positive integers (partial quotients). May be empty.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<std::uint64_t> entries);
  explicit Word(std::vector<std::uint64_t> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const std::uint64_t> entries() const { return entries_; }

  Word operator+(const Word& other) const;  // concatenation
  Word power(std::size_t k) const;           // k-fold repetition

  // "(1,1,2)"
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

// Parses "1,1,2"; the empty string is the empty word.
Word parse_word(std::string_view text);

/// K(w): K() = 1, K(x0) = x0, K(x0..xn) = x0 K(x1..xn) + K(x2..xn).
Integer continuant(const Word& w);

/// Level 1: K of w without its last entry. Level 2: K of w without its first
/// and last entries. Throws TooShort when w is empty (level 1) or shorter
/// than two entries (level 2).
Integer breve_continuant(const Word& w, int level);

/// K̆(alpha^2) / K̆(alpha). Throws TooShort for an empty alpha.
ExactRatio geodesic_multiplier(const Word& alpha);

/// (K̆(beta), K̆(alpha beta), ..., K̆(alpha^{count-1} beta)) generated by the
/// recurrence t_{k+1} = (K̆(alpha^2)/K̆(alpha)) t_k - t_{k-1}. Every term is
/// checked to be integral and equal to direct evaluation. An empty beta uses
/// K̆(()) = 0. Throws OddAlpha, TooShort (empty alpha).
std::vector<Integer> geodesic_sequence(const Word& alpha, const Word& beta,
                                       std::size_t count);

/// K̆(alpha^2 beta) == K(alpha) K̆(alpha beta) + K̆(alpha) K̆2(alpha beta).
bool split_identity_check(const Word& alpha, const Word& beta);

/// K̆(alpha^2) K̆(lambda alpha rho) ==
///     K̆(alpha) (K̆(lambda alpha^2 rho) + K̆(lambda rho)).
/// Throws OddAlpha for odd-length alpha.
bool geodesic_ratio_check(const Word& alpha, const Word& lambda,
                          const Word& rho);

struct RMatchBounds {
  std::uint64_t max_entry = 3;
  std::size_t max_len = 4;    // |alpha| even in [2, max_len], |beta| in [1, max_len]
  std::size_t max_terms = 6;
};

struct RMatchFinding {
  Word alpha;
  Word beta;
  Integer s;  // K̆(beta)
  Integer b;  // K̆(alpha beta)
  std::vector<Integer> terms;
};

struct RMatchReport {
  RMatchBounds bounds;
  std::size_t pairs_examined = 0;
  std::vector<RMatchFinding> matches_s_ge_2;
  std::vector<RMatchFinding> s1_coincidences;
};

/// For every admissible (alpha, beta), compares the first max_terms geodesic
/// terms with R_0(b), R_1(b), ... (evaluated exactly, rationally when s does
/// not divide 2b) for s = K̆(beta), b = K̆(alpha beta). Alignment is at offset
/// 0 only.
RMatchReport r_match_search(const RMatchBounds& bounds = {});

// {"bounds":{..},"pairs_examined":N,"matches_s_ge_2":[..],"s1_coincidences":[..]}
void write_json(std::ostream& out, const RMatchReport& report);

}  // namespace cayley
