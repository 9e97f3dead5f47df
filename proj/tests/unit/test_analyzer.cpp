#include <doctest.h>

#include <chrono>

#include "burnside/analyzer.hpp"
#include "burnside/word.hpp"

using namespace burnside;

namespace {

AnalysisReport run(std::string_view w, std::uint64_t d = 2) { return analyze(parse_word(w), d); }

std::string power(std::uint64_t n) { return "x^" + std::to_string(n); }

}  // namespace

TEST_CASE("factor_exponent") {
  using F = std::vector<std::pair<std::uint64_t, unsigned>>;
  CHECK(factor_exponent(1).empty());
  CHECK(factor_exponent(360) == F{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factor_exponent(97) == F{{97, 1}});
  CHECK_THROWS_AS(factor_exponent(0), std::invalid_argument);
}

TEST_CASE("odd exponents") {
  for (std::uint64_t n : {3u, 5u, 7u, 9u, 15u, 105u}) {
    const AnalysisReport r = run(power(n));
    CHECK(r.word_case == WordCase::Periodic);
    CHECK(r.n == n);
    CHECK(r.verdict == VerdictKind::TrivialByFeitThompson);
    CHECK(is_trivial_verdict(r.verdict));
  }
}

TEST_CASE("exponents 2^a p^b") {
  for (std::uint64_t n : {2u, 4u, 8u, 12u, 24u, 6u, 18u, 36u, 48u, 54u, 72u, 20u, 56u, 1024u}) {
    const AnalysisReport r = run(power(n));
    CAPTURE(n);
    CHECK(r.verdict == VerdictKind::TrivialByBurnside);
    REQUIRE(r.burnside);
  }
  const auto r = run("x^72");
  CHECK(r.burnside->a == 3);
  CHECK(r.burnside->p == 3);
  CHECK(r.burnside->b == 2);
  const auto pure = run("x^16");
  CHECK(pure.burnside->a == 4);
  CHECK(pure.burnside->p == 0);
  CHECK(pure.burnside->b == 0);
}

TEST_CASE("witnesses") {
  for (std::uint64_t n : {30u, 60u, 90u}) {
    const auto t0 = std::chrono::steady_clock::now();
    const AnalysisReport r = run(power(n));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CAPTURE(n);
    CHECK(r.verdict == VerdictKind::NontrivialWitness);
    REQUIRE(r.verdict_groups.size() == 1);
    CHECK(r.verdict_groups.front() == SimpleGroupId::alternating(5));
    REQUIRE(!r.witnesses.empty());
    const Witness& w = r.witnesses.front();
    CHECK(w.exponent == 30);
    CHECK(w.check.verdict == LawVerdict::Holds);
    CHECK(w.check.exhaustive);
    CHECK(w.check.tuples_checked == 3600);
    CHECK(secs < 1.0);
  }
  const AnalysisReport p = run("x^84");
  CHECK(p.verdict == VerdictKind::NontrivialWitness);
  CHECK(p.verdict_groups.front() == SimpleGroupId::lie(LieFamily::A, 1, 7));

  const AnalysisReport u = run("x^42");
  CHECK(u.verdict == VerdictKind::Unknown);
  CHECK_FALSE(u.notes.empty());
}

TEST_CASE("words beyond pure powers") {
  // n = gcd(30, 60) = 30, and the word itself holds in Alt(5)
  const AnalysisReport r = run("x^30 y^60");
  CHECK(r.n == 30);
  CHECK(r.verdict == VerdictKind::NontrivialWitness);

  const AnalysisReport d = run("[x,y]^30");
  CHECK(d.word_case == WordCase::Derived);
  CHECK(d.n == 0);
  CHECK(d.verdict == VerdictKind::Unknown);
  CHECK(d.bound);
}

TEST_CASE("disjoint commutators") {
  const AnalysisReport r = run("[x^30, y]");
  CHECK(r.word_case == WordCase::DisjointCommutator);
  REQUIRE(r.sub_reports.size() == 2);
  CHECK(r.sub_reports[0].verdict == VerdictKind::NontrivialWitness);
  CHECK(r.sub_reports[1].verdict == VerdictKind::TrivialByFeitThompson);
  CHECK(r.verdict == VerdictKind::NontrivialWitness);

  const AnalysisReport both = run("[x^9, y^4]");
  CHECK(both.verdict == VerdictKind::TrivialBySubdirectEmbedding);
  CHECK(both.sub_reports[0].word == parse_word("x^9", 2));
  CHECK(both.sub_reports[1].word.to_string() == "y^4");

  // both factors lie in the derived subgroup, each factor is itself split
  const AnalysisReport nested = run("[[x,y],[z,w]]", 4);
  CHECK(nested.word_case == WordCase::DisjointCommutator);
  CHECK(nested.sub_reports.size() == 2);
  CHECK(nested.sub_reports[0].word_case == WordCase::DisjointCommutator);

  CHECK_THROWS_AS(analyze_disjoint_commutator(parse_word("x^30"), 2), std::invalid_argument);
}

TEST_CASE("one generator and edge cases") {
  const AnalysisReport one = run("x^30", 1);
  CHECK(one.verdict == VerdictKind::TrivialOneGenerated);
  CHECK_FALSE(one.notes.empty());

  const AnalysisReport x = run("x");
  CHECK(x.verdict == VerdictKind::TrivialByFeitThompson);
  CHECK_FALSE(x.bound);
  CHECK_THROWS_AS(analyze(Word(), 2), std::invalid_argument);
}

TEST_CASE("desk witness groups") {
  const auto g = desk_witness_groups();
  CHECK(g.size() == 8);
  CHECK(g.front() == SimpleGroupId::alternating(5));
}

TEST_CASE("property: verdicts follow the exponent arithmetic") {
  for (std::uint64_t n = 1; n <= 120; ++n) {
    const AnalysisReport r = classify(parse_word(power(n)), 2);
    const auto f = factor_exponent(n);
    CAPTURE(n);
    if (n % 2 == 1) {
      CHECK(r.verdict == VerdictKind::TrivialByFeitThompson);
    } else if (f.size() <= 2) {
      CHECK(r.verdict == VerdictKind::TrivialByBurnside);
    } else {
      // three or more primes: a witness exists iff some desk exponent divides n
      const bool alt5 = n % 30 == 0;
      if (alt5) CHECK(r.verdict == VerdictKind::NontrivialWitness);
      if (r.verdict == VerdictKind::NontrivialWitness) CHECK(n % r.witnesses.front().exponent == 0);
      CHECK(r.verdict != VerdictKind::TrivialByBurnside);
    }
    if (n >= 2) {
      REQUIRE(r.bound);
      CHECK(r.bound->main_bound.height() == 2 * n + TowerNumber::from_real(2 * r.bound->x).height());
    }
  }
}
