#include <doctest.h>

#include <numeric>
#include <random>

#include "burnside/errors.hpp"
#include "burnside/laws.hpp"
#include "burnside/make_group.hpp"

using namespace burnside;

namespace {

CayleyGroup cay(std::string_view d) { return CayleyGroup::from_perm_group(make_group(d)); }

}  // namespace

TEST_CASE("exhaustive law checks") {
  const CayleyGroup a5 = cay("alt5");
  const LawCheck ok = is_law(parse_word("x^30"), a5);
  CHECK(ok.verdict == LawVerdict::Holds);
  CHECK(ok.tuples_checked == 60);

  const LawCheck two = is_law(parse_word("x^30"), a5, {});
  CHECK(two.exhaustive);

  const LawCheck fail = is_law(parse_word("x^15"), a5);
  CHECK(fail.verdict == LawVerdict::Fails);
  REQUIRE(fail.witness.size() == 1);

  const LawCheck comm = is_law(parse_word("[x,y]"), a5);
  CHECK(comm.verdict == LawVerdict::Fails);
  CHECK(comm.witness.size() == 2);

  const CayleyGroup c6 = CayleyGroup::cyclic(6);
  const LawCheck ab = is_law(parse_word("[x,y]"), c6);
  CHECK(ab.verdict == LawVerdict::Holds);
  CHECK(ab.tuples_checked == 36);

  LawOptions tight;
  tight.exhaust_cap = 100;
  CHECK_THROWS_AS(is_law(parse_word("[x,y]"), a5, tight), CapExceeded);
}

TEST_CASE("witness is stable across thread counts") {
  const CayleyGroup s4 = cay("sym4");
  LawOptions one;
  LawOptions many;
  many.threads = 4;
  const Word w = parse_word("[x^2, y^3]");
  const LawCheck a = is_law(w, s4, one);
  const LawCheck b = is_law(w, s4, many);
  CHECK(a.verdict == LawVerdict::Fails);
  CHECK(a.witness == b.witness);
}

TEST_CASE("sampled law checks") {
  const PermGroup s9 = make_group("sym9");
  LawOptions opt;
  opt.exhaustive = false;
  opt.trials = 500;
  opt.seed = 7;
  const LawCheck holds = is_law(parse_word("x^2520"), s9, opt);
  CHECK(holds.verdict == LawVerdict::SampledNoCounterexample);
  CHECK(holds.tuples_checked == 500);
  CHECK(holds.seed == 7);
  const LawCheck fails = is_law(parse_word("x^2"), s9, opt);
  CHECK(fails.verdict == LawVerdict::Fails);
  CHECK(is_law(parse_word("x^2"), s9, opt).witness == fails.witness);
  CHECK(to_string(LawVerdict::Holds) == "holds");
}

TEST_CASE("exponents") {
  CHECK(group_exponent(cay("alt5")) == 30);
  CHECK(group_exponent(cay("alt6")) == 60);
  CHECK(group_exponent(cay("psl2(7)")) == 84);
  CHECK(group_exponent(cay("sym4")) == 12);
  CHECK(group_exponent(make_group("alt7")) == 420);
  CHECK(group_exponent(CayleyGroup::cyclic(1)) == 1);
}

TEST_CASE("generation counts") {
  const CayleyGroup a5 = cay("alt5");
  CHECK(count_generating_tuples(a5, 1) == 0);
  CHECK(count_generating_tuples(a5, 2) == 2280);
  CHECK(count_generating_tuples(a5, 2, 100000000, 3) == 2280);
  CHECK(automorphism_count(a5) == 120);
  CHECK(automorphism_count(CayleyGroup::cyclic(7)) == 6);
  CHECK(automorphism_count(cay("sym3")) == 6);
  const GeneratedPower p = max_d_generated_power(a5, 2);
  CHECK(p.generating_tuples == 2280);
  CHECK(p.automorphisms == 120);
  CHECK(p.max_power == 19);
  CHECK(p.crude_bound == 3600);
  CHECK_THROWS_AS(max_d_generated_power(cay("sym4"), 2), std::invalid_argument);
}

TEST_CASE("canonical cyclic words") {
  // one letter: x^n only
  const auto one = canonical_cyclic_words(5, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == parse_word("x^5"));
  const auto two = canonical_cyclic_words(2, 2);
  for (const Word& w : two) CHECK(word_length(w) == 2);
  // classes of length 2: x^2, y^2, x y, x y^-1
  CHECK(two.size() == 4);
}

TEST_CASE("shortest law search") {
  const ShortestLaw c2 = shortest_law_search(CayleyGroup::cyclic(2), 8, 1);
  REQUIRE(c2.law);
  CHECK(*c2.law == parse_word("x^2"));

  const ShortestLaw a5 = shortest_law_search(cay("alt5"), 64, 1);
  REQUIRE(a5.law);
  CHECK(*a5.law == parse_word("x^30"));

  const ShortestLaw s3 = shortest_law_search(cay("sym3"), 8, 2);
  REQUIRE(s3.law);
  CHECK(word_length(*s3.law) <= 6);
  CHECK(is_law(*s3.law, cay("sym3")).verdict == LawVerdict::Holds);

  const ShortestLaw none = shortest_law_search(cay("alt5"), 6, 2);
  CHECK_FALSE(none.law);
  CHECK(none.complete_length == 6);
  CHECK(none.words_tested > 0);
}

TEST_CASE("property: exponent is the shortest one-letter law") {
  for (auto d : {"c4", "c6", "sym3", "sym4", "dihedral(5)", "alt4"}) {
    const CayleyGroup g = cay(d);
    const ShortestLaw s = shortest_law_search(g, 64, 1);
    REQUIRE(s.law);
    CHECK(word_length(*s.law) == group_exponent(g));
  }
}

TEST_CASE("property: laws are closed under substitution and products") {
  std::mt19937_64 rng(61);
  const CayleyGroup s4 = cay("sym4");
  // x^12 holds in S4; so does any conjugate or power
  for (int i = 0; i < 30; ++i) {
    const int e = 1 + static_cast<int>(rng() % 5);
    const Word w = parse_word("y^-1 x^" + std::to_string(12 * e) + " y");
    CHECK(is_law(w, s4).verdict == LawVerdict::Holds);
  }
  CHECK(is_law(parse_word("x^12 y^12"), s4).verdict == LawVerdict::Holds);
  CHECK(is_law(parse_word("x^6 y^12"), s4).verdict == LawVerdict::Fails);
}
