#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/bounds.hpp"
#include "burnside/catalog.hpp"
#include "burnside/laws.hpp"
#include "burnside/word.hpp"

namespace burnside {

enum class WordCase { Periodic, Derived, DisjointCommutator };

enum class VerdictKind {
  TrivialByFeitThompson,
  TrivialByBurnside,
  TrivialBySubdirectEmbedding,  // both commutator factors trivial
  TrivialOneGenerated,          // d = 1
  NontrivialWitness,
  Unknown,
};

std::string to_string(WordCase c);
std::string to_string(VerdictKind v);
bool is_trivial_verdict(VerdictKind v);

/// n = 2^a p^b; p = 0 when b = 0.
struct BurnsideShape {
  unsigned a = 0;
  std::uint64_t p = 0;
  unsigned b = 0;
};

struct Witness {
  SimpleGroupId group;
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  int check_rank = 1;   // number of variables the law was checked with
  LawCheck check;
};

struct AnalysisReport {
  Word word;
  std::uint64_t length = 0;
  std::uint64_t d = 0;
  WordCase word_case = WordCase::Periodic;
  std::uint64_t n = 0;   // Neumann exponent, 0 in the derived case
  VerdictKind verdict = VerdictKind::Unknown;
  std::optional<BurnsideShape> burnside;
  std::vector<SimpleGroupId> verdict_groups;  // for NontrivialWitness
  std::vector<Witness> witnesses;             // every verified desk-scale witness
  std::vector<AnalysisReport> sub_reports;    // disjoint commutator factors
  std::optional<BoundReport> bound;           // absent when l < 2
  std::vector<std::string> notes;
};

struct AnalyzerOptions {
  std::uint64_t exhaust_cap = 100000000;
  unsigned threads = 1;
  BoundConstants constants;
};

/// Sorted prime-power factorisation; empty for n = 1. Throws
/// std::invalid_argument for n = 0.
std::vector<std::pair<std::uint64_t, unsigned>> factor_exponent(std::uint64_t n);

/// Exponent criteria only. Throws std::invalid_argument on the trivial word.
AnalysisReport classify(const Word& w, std::uint64_t d, const AnalyzerOptions& opt = {});

/// Throws std::invalid_argument unless w = [w1, w2] with disjoint supports.
AnalysisReport analyze_disjoint_commutator(const Word& w, std::uint64_t d,
                                           const AnalyzerOptions& opt = {});

/// Disjoint commutators are split recursively, everything else goes to
/// classify.
AnalysisReport analyze(const Word& w, std::uint64_t d, const AnalyzerOptions& opt = {});

/// Alt(5..9) and PSL(2,q), q in {7, 8, 11}; PSL(2,4), PSL(2,5) and
/// PSL(2,9) are omitted as copies of Alt(5) and Alt(6).
std::vector<SimpleGroupId> desk_witness_groups();

}  // namespace burnside
