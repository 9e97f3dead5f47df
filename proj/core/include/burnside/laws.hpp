#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burnside/cayley_group.hpp"
#include "burnside/perm_group.hpp"
#include "burnside/word.hpp"

namespace burnside {

enum class LawVerdict { Holds, Fails, SampledNoCounterexample };

std::string to_string(LawVerdict v);

struct LawOptions {
  bool exhaustive = true;
  std::uint64_t trials = 10000;      // sampled mode
  std::uint64_t seed = 20240607;     // sampled mode
  std::uint64_t exhaust_cap = 100000000;
  unsigned threads = 1;              // exhaustive mode splits the first coordinate
};

struct LawCheck {
  LawVerdict verdict = LawVerdict::Holds;
  std::vector<std::string> witness;  // one label per variable, when Fails
  std::uint64_t tuples_checked = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
};

/// Exhaustive mode needs |G|^rank(w) <= exhaust_cap (CapExceeded
/// otherwise). The reported witness is the first failing tuple in
/// lexicographic order, whatever the thread count.
LawCheck is_law(const Word& w, const CayleyGroup& g, const LawOptions& opt = {});
/// Exhaustive mode enumerates the group (order <= min(exhaust_cap, 10^7)).
LawCheck is_law(const Word& w, const PermGroup& g, const LawOptions& opt = {});

/// lcm of element orders.
std::uint64_t group_exponent(const CayleyGroup& g);
/// By full enumeration, order <= `enumeration_cap`.
std::uint64_t group_exponent(const PermGroup& g, std::uint64_t enumeration_cap = 10000000);

/// Number of d-tuples that generate G, by brute force (|G|^d <= cap).
std::uint64_t count_generating_tuples(const CayleyGroup& g, int d, std::uint64_t cap = 100000000,
                                      unsigned threads = 1);
/// |Aut(G)| by extending every candidate image of a generating set.
std::uint64_t automorphism_count(const CayleyGroup& g, std::uint64_t cap = 100000000);

struct GeneratedPower {
  std::uint64_t generating_tuples = 0;
  std::uint64_t automorphisms = 0;
  std::uint64_t max_power = 0;   // generating_tuples / automorphisms
  std::uint64_t crude_bound = 0; // |G|^d
};

/// Largest n with G^n d-generated, for nonabelian simple G (checked;
/// std::invalid_argument otherwise).
GeneratedPower max_d_generated_power(const CayleyGroup& g, int d, std::uint64_t cap = 100000000);

struct ShortestLaw {
  std::optional<Word> law;        // shortest law found
  std::uint64_t complete_length = 0;  // every canonical word of length <= this was tested
  std::uint64_t words_tested = 0;
};

/// Searches cyclically reduced words on `vars` letters (1 or 2) by
/// increasing length, one representative per class under cyclic rotation
/// and inversion. With no law up to max_len, `law` is empty and
/// complete_length == max_len. Throws CapExceeded if |G|^vars exceeds
/// the cap.
ShortestLaw shortest_law_search(const CayleyGroup& g, std::uint64_t max_len, int vars,
                                std::uint64_t exhaust_cap = 100000000);

/// Canonical cyclic words of the given length on `vars` letters, in the
/// enumeration order used by shortest_law_search.
std::vector<Word> canonical_cyclic_words(int length, int vars);

}  // namespace burnside
