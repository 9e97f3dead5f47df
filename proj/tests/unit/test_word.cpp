#include <doctest.h>

#include <random>

#include "burnside/errors.hpp"
#include "burnside/make_group.hpp"
#include "burnside/word.hpp"

using namespace burnside;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int syllables) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> exp(-4, 4);
  std::vector<Syllable> s;
  for (int i = 0; i < syllables; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    s.push_back({gen(rng), e});
  }
  return Word(rank, s);
}

}  // namespace

TEST_CASE("parse examples") {
  const Word a = parse_word("x^30");
  CHECK(a.rank() == 1);
  CHECK(a.syllables() == std::vector<Syllable>{{1, 30}});

  const Word b = parse_word("x x^-1 y");
  CHECK(b.rank() == 2);
  CHECK(b.syllables() == std::vector<Syllable>{{2, 1}});

  const Word c = parse_word("[x^5,y]");
  CHECK(c.syllables() == std::vector<Syllable>{{1, -5}, {2, -1}, {1, 5}, {2, 1}});
}

TEST_CASE("grammar details") {
  CHECK(parse_word("x1 x2^2 x3").rank() == 3);
  CHECK(parse_word("(x y)^2").syllables() == std::vector<Syllable>{{1, 1}, {2, 1}, {1, 1}, {2, 1}});
  CHECK(parse_word("x * y").syllables() == std::vector<Syllable>{{1, 1}, {2, 1}});
  CHECK(parse_word("[x,y]^2") == parse_word("[x,y][x,y]"));
  CHECK(parse_word("1").empty());
  CHECK(parse_word("x^2", 3).rank() == 3);
  CHECK_THROWS_AS(parse_word("x1 y"), ParseError);
  CHECK_THROWS_AS(parse_word("x^"), ParseError);
  CHECK_THROWS_AS(parse_word("[x,y"), ParseError);
  CHECK_THROWS_AS(parse_word("q"), ParseError);
  CHECK_THROWS_AS(parse_word("z", 2), ParseError);
  try {
    parse_word("x y ?");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("length and exponent profile") {
  CHECK(word_length(parse_word("x^30")) == 30);
  CHECK(word_length(parse_word("[x^5,y]")) == 12);
  CHECK(word_length(Word()) == 0);
  CHECK(exponent_profile(parse_word("x^30")).totals == std::vector<std::int64_t>{30});
  CHECK(exponent_profile(parse_word("[x^5,y]")).totals == std::vector<std::int64_t>{0, 0});
  CHECK(exponent_profile(parse_word("x^2 y^-3")).totals == std::vector<std::int64_t>{2, -3});
}

TEST_CASE("neumann exponent") {
  CHECK(neumann_exponent(parse_word("x^30 y^-30")) == 30);
  CHECK(neumann_exponent(parse_word("[x,y]")) == 0);
  // profile (2, 0): computed by hand from x^2 x^-1 y^-1 x y
  CHECK(neumann_exponent(parse_word("x^2 [x,y]")) == 2);
  CHECK(neumann_exponent(parse_word("x^4 y^6")) == 2);
  CHECK_THROWS_AS(neumann_exponent(Word()), std::invalid_argument);
}

TEST_CASE("derived subgroup membership") {
  CHECK(in_derived_subgroup(parse_word("[x,y]")));
  CHECK_FALSE(in_derived_subgroup(parse_word("x^30")));
  CHECK(in_derived_subgroup(parse_word("[x^5,y][y,x^5]")));
  CHECK(parse_word("[x^5,y][y,x^5]").empty());
}

TEST_CASE("disjoint commutator split") {
  auto s = split_disjoint_commutator(parse_word("[x^30, y]"));
  REQUIRE(s);
  CHECK(s->first == parse_word("x^30"));
  CHECK(s->second == parse_word("x"));
  CHECK(s->second_support == std::vector<int>{2});

  // [x, xy] reduces to x^-1 y^-1 x y, which does have the disjoint shape
  s = split_disjoint_commutator(parse_word("[x, x y]"));
  REQUIRE(s);
  CHECK(s->first == parse_word("x"));
  CHECK(s->second_support == std::vector<int>{2});
  CHECK_FALSE(split_disjoint_commutator(parse_word("[x y, y x]")));

  s = split_disjoint_commutator(parse_word("[x y, z^2]"));
  REQUIRE(s);
  CHECK(s->first == parse_word("x y"));
  CHECK(s->second == parse_word("x^2"));
  CHECK(s->first_support == std::vector<int>{1, 2});
  CHECK(s->second_support == std::vector<int>{3});

  CHECK_FALSE(split_disjoint_commutator(parse_word("x^30")));
  CHECK_FALSE(split_disjoint_commutator(parse_word("x y x^-1 y^-1 x")));
}

TEST_CASE("evaluate examples") {
  const PermGroup c4 = cyclic_group(4);
  const Permutation g = c4.generators().front();
  const std::vector<Permutation> one{g};
  CHECK(evaluate(parse_word("x^2"), std::span<const Permutation>(one), c4) == g * g);

  const PermGroup c6 = cyclic_group(6);
  const Permutation h = c6.generators().front();
  const std::vector<Permutation> two{h, h * h * h};
  CHECK(evaluate(parse_word("[x,y]"), std::span<const Permutation>(two), c6).is_identity());

  const PermGroup a5 = alternating_group(5);
  for (const auto& s : a5.elements(100)) {
    const std::vector<Permutation> a{s};
    CHECK(evaluate(parse_word("x^30"), std::span<const Permutation>(a), a5).is_identity());
  }

  const std::vector<Permutation> too_short{g};
  CHECK_THROWS_AS(evaluate(parse_word("[x,y]"), std::span<const Permutation>(too_short), c4),
                  std::invalid_argument);
  const std::vector<Permutation> foreign{Permutation::from_cycles(4, {{1, 2}})};
  CHECK_THROWS_AS(evaluate(parse_word("x"), std::span<const Permutation>(foreign), c4), std::invalid_argument);
}

TEST_CASE("property: printing and reparsing is the identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const int rank = 1 + static_cast<int>(rng() % 4);
    const Word w = random_word(rng, rank, 1 + static_cast<int>(rng() % 12));
    CHECK(parse_word(w.to_string(), rank) == w);
    CHECK(in_derived_subgroup(w) == (w.empty() || neumann_exponent(w) == 0));
  }
}

TEST_CASE("property: identity substitution and renaming") {
  std::mt19937_64 rng(12);
  const PermGroup s5 = symmetric_group(5);
  const std::vector<Permutation> ids(3, s5.identity());
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 3, 1 + static_cast<int>(rng() % 10));
    CHECK(evaluate(w, std::span<const Permutation>(ids), s5).is_identity());
    // swap generators 1 and 3
    std::vector<Syllable> renamed = w.syllables();
    for (auto& s : renamed) s.generator = 4 - s.generator;
    CHECK(word_length(Word(3, renamed)) == word_length(w));
  }
}

TEST_CASE("property: split commutators evaluate as commutators in S5") {
  std::mt19937_64 rng(13);
  const PermGroup s5 = symmetric_group(5);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(rng, 2, 1 + static_cast<int>(rng() % 4));
    std::vector<Syllable> vs = random_word(rng, 1, 1 + static_cast<int>(rng() % 2)).syllables();
    for (auto& s : vs) s.generator = 3;
    const Word v(3, vs);
    if (u.empty() || v.empty()) continue;
    const Word w = Word::commutator(u.with_rank(3), v);
    const auto split = split_disjoint_commutator(w);
    if (!split) continue;
    ++checked;
    std::vector<Permutation> a;
    for (int j = 0; j < 3; ++j) a.push_back(s5.random_element(rng));
    std::vector<Permutation> a1, a2;
    for (int idx : split->first_support) a1.push_back(a[static_cast<std::size_t>(idx - 1)]);
    for (int idx : split->second_support) a2.push_back(a[static_cast<std::size_t>(idx - 1)]);
    const Permutation p = evaluate(split->first, std::span<const Permutation>(a1), s5);
    const Permutation q = evaluate(split->second, std::span<const Permutation>(a2), s5);
    CHECK(evaluate(w, std::span<const Permutation>(a), s5) == p.inverse() * q.inverse() * p * q);
  }
  CHECK(checked > 100);
}
