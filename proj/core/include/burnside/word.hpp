#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace burnside {

/// One block g_i^e of a word; generator indices are 1-based.
struct Syllable {
  int generator = 1;
  std::int64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Freely reduced element of the free group F_rank.
///
/// Invariants: no syllable has exponent 0, adjacent syllables have distinct
/// generators, and every generator index lies in [1, rank]. All operations
/// return new values; a Word is never mutated after construction.
class Word {
 public:
  /// The identity of F_1.
  Word() = default;

  /// Reduces `syllables` freely. Throws std::invalid_argument if a generator
  /// index is outside [1, rank].
  Word(int rank, std::vector<Syllable> syllables);

  static Word generator(int rank, int index, std::int64_t exponent = 1);
  static Word commutator(const Word& u, const Word& v);

  int rank() const noexcept { return rank_; }
  const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  Word inverse() const;
  Word power(std::int64_t k) const;
  Word with_rank(int rank) const;

  /// Concatenation followed by free reduction; the rank is the larger one.
  friend Word operator*(const Word& a, const Word& b);

  /// Named generators x,y,z,w when rank <= 4, otherwise x1,x2,...
  /// The identity prints as "1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 1;
  std::vector<Syllable> syllables_;
};

/// Signed exponent sum of each generator, indexed 0..rank-1.
struct ExponentProfile {
  std::vector<std::int64_t> totals;
  friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
};

/// Parses the word grammar
///
///   word := term+
///   term := gen | gen '^' int | '[' word ',' word ']' ['^' int]
///         | '(' word ')' | '(' word ')' '^' int | '1'
///   gen  := 'x' | 'y' | 'z' | 'w' | 'x' digits
///
/// Whitespace and '*' between terms are ignored; [u,v] = u^-1 v^-1 u v.
/// Named and indexed generators cannot be mixed. When `rank_hint` is given
/// the result has exactly that rank and larger indices are an error.
/// Throws ParseError.
Word parse_word(std::string_view text, std::optional<int> rank_hint = std::nullopt);

std::uint64_t word_length(const Word& w);
ExponentProfile exponent_profile(const Word& w);

/// gcd of the nonzero exponent sums; 0 when every sum vanishes.
/// Throws std::invalid_argument on the empty word.
std::uint64_t neumann_exponent(const Word& w);

bool in_derived_subgroup(const Word& w);

/// Result of recognising w = [w1, w2] with disjoint generator supports.
/// `first`/`second` are renumbered order-preservingly to ranks n1, n2;
/// `first_support[i]` is the original (1-based) index of generator i+1.
struct CommutatorSplit {
  Word first;
  Word second;
  std::vector<int> first_support;
  std::vector<int> second_support;
};

/// Syntactic block scan of the reduced syllable list for the shape
/// w1^-1 w2^-1 w1 w2 with disjoint supports.
std::optional<CommutatorSplit> split_disjoint_commutator(const Word& w);

/// Sorted list of generator indices occurring in w.
std::vector<int> support(const Word& w);

/// Evaluates w in any group type exposing
///   Element, identity(), mul(a,b), inv(a), contains(a).
/// Throws std::invalid_argument on arity mismatch or foreign elements.
template <class Group>
typename Group::Element evaluate(const Word& w,
                                 std::span<const typename Group::Element> assignment,
                                 const Group& group) {
  using Element = typename Group::Element;
  if (assignment.size() < static_cast<std::size_t>(w.rank())) {
    throw std::invalid_argument("evaluate: word of rank " + std::to_string(w.rank()) +
                                " needs that many group elements, got " +
                                std::to_string(assignment.size()));
  }
  for (const auto& a : assignment) {
    if (!group.contains(a)) throw std::invalid_argument("evaluate: element not in group");
  }
  Element result = group.identity();
  for (const auto& s : w.syllables()) {
    Element base = assignment[static_cast<std::size_t>(s.generator - 1)];
    std::uint64_t e = s.exponent < 0 ? static_cast<std::uint64_t>(-s.exponent)
                                     : static_cast<std::uint64_t>(s.exponent);
    if (s.exponent < 0) base = group.inv(base);
    Element acc = group.identity();
    while (e > 0) {
      if (e & 1U) acc = group.mul(acc, base);
      e >>= 1U;
      if (e > 0) base = group.mul(base, base);
    }
    result = group.mul(result, acc);
  }
  return result;
}

}  // namespace burnside
