#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "burnside/catalog.hpp"
#include "oracle/mpfr_oracle.hpp"

using namespace burnside;

namespace {

// The two exponent tables, transcribed entry by entry.
AValue table_a(LieFamily f, int k) {
  switch (f) {
    case LieFamily::A:
    case LieFamily::A2: return {(k + 1) / 2, (k + 1) / 2};
    case LieFamily::B: return {std::min(2 * (k / 2), k), std::max(2 * (k / 2), k)};
    case LieFamily::C: return {k, k};
    case LieFamily::D: return {k - 2, k - 1};
    case LieFamily::D2: return {2 * (k / 2), 2 * (k / 2)};
    case LieFamily::E6:
    case LieFamily::E6_2: return {4, 4};
    case LieFamily::E7:
    case LieFamily::E8: return {7, 7};
    case LieFamily::F4: return {4, 4};
    case LieFamily::G2: return {1, 1};
    case LieFamily::D4_3: return {3, 3};
    case LieFamily::B2_2: return {1, 1};
    case LieFamily::F4_2: return {2, 2};
    case LieFamily::G2_2: return {1, 1};
  }
  return {};
}

int table_b(LieFamily f, int k) {
  switch (f) {
    case LieFamily::A:
    case LieFamily::A2: return k * k + 2 * k;
    case LieFamily::B:
    case LieFamily::C: return 2 * k * k + k;
    case LieFamily::D:
    case LieFamily::D2: return 2 * k * k - k;
    case LieFamily::B2_2: return 5;
    case LieFamily::D4_3: return 28;
    case LieFamily::F4: return 52;
    case LieFamily::F4_2: return 26;
    case LieFamily::G2: return 14;
    case LieFamily::G2_2: return 7;
    case LieFamily::E6:
    case LieFamily::E6_2: return 78;
    case LieFamily::E7: return 133;
    case LieFamily::E8: return 248;
  }
  return 0;
}

bool contains(const std::vector<SimpleGroupId>& v, const SimpleGroupId& id) {
  return std::find(v.begin(), v.end(), id) != v.end();
}

}  // namespace

TEST_CASE("a_value examples") {
  CHECK(a_value(LieFamily::A, 3) == AValue{2, 2});
  CHECK(a_value(LieFamily::E8) == AValue{7, 7});
  CHECK(a_value(LieFamily::D, 5) == AValue{3, 4});
  CHECK(a_value(LieFamily::B, 3) == AValue{2, 3});
  CHECK(a_value(LieFamily::B, 4) == AValue{4, 4});
  CHECK_THROWS_AS(a_value(LieFamily::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(a_value(LieFamily::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(a_value(LieFamily::E8, 7), std::invalid_argument);
}

TEST_CASE("b_value examples") {
  CHECK(b_value(LieFamily::A, 2) == 8);
  CHECK(b_value(LieFamily::E8) == 248);
  CHECK(b_value(LieFamily::B2_2) == 5);
  CHECK(b_value(LieFamily::B2_2, 2) == 5);
  CHECK_THROWS_AS(b_value(LieFamily::C, 2), std::invalid_argument);
}

TEST_CASE("snapshot of both tables, ranks 1..10") {
  for (LieFamily f : kAllFamilies) {
    const FamilyInfo& info = family_info(f);
    for (int k = 1; k <= 10; ++k) {
      const bool admissible = info.fixed_rank ? k == *info.fixed_rank : k >= info.min_rank;
      if (!admissible) {
        CHECK_THROWS_AS(a_value(f, k), std::invalid_argument);
        continue;
      }
      CAPTURE(info.symbol);
      CAPTURE(k);
      CHECK(a_value(f, k) == table_a(f, k));
      CHECK(b_value(f, k) == table_b(f, k));
      const AValue a = a_value(f, k);
      CHECK(a.low >= 1);
      CHECK(a.low <= a.high);
    }
  }
}

TEST_CASE("family symbols round-trip") {
  for (LieFamily f : kAllFamilies) CHECK(parse_family(family_symbol(f)) == f);
  CHECK(parse_family("²B2") == LieFamily::B2_2);
  CHECK(parse_family("³D4") == LieFamily::D4_3);
  CHECK_FALSE(parse_family("H4"));
}

TEST_CASE("ids and field constraints") {
  CHECK_THROWS_AS(SimpleGroupId::alternating(4), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGroupId::lie(LieFamily::A, 1, 6), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGroupId::lie(LieFamily::B2_2, std::nullopt, 4), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGroupId::lie(LieFamily::G2_2, std::nullopt, 9), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGroupId::sporadic(27), std::invalid_argument);
  CHECK_NOTHROW(SimpleGroupId::lie(LieFamily::B2_2, std::nullopt, 8));
  CHECK_NOTHROW(SimpleGroupId::lie(LieFamily::G2_2, std::nullopt, 27));
  CHECK(satisfies_field_constraint(LieFamily::F4_2, 32));
  CHECK_FALSE(satisfies_field_constraint(LieFamily::F4_2, 16));
  CHECK_FALSE(is_simple_lie(LieFamily::F4_2, 4, 2));
  CHECK_FALSE(is_simple_lie(LieFamily::A, 1, 3));
  CHECK(is_simple_lie(LieFamily::A, 1, 4));
  CHECK(prime_power(81) == std::pair<std::uint64_t, int>{3, 4});
  CHECK_FALSE(prime_power(12));
  CHECK_FALSE(prime_power(1));
}

TEST_CASE("orders") {
  CHECK(abs(order_upper_bound(SimpleGroupId::alternating(5)).to_real().value() - 60) < Real("1e-80"));
  const auto psl25 = order_upper_bound(SimpleGroupId::lie(LieFamily::A, 1, 5)).to_real().value();
  CHECK(abs(psl25 - 125) < Real("1e-80"));
  const auto g2 = order_upper_bound(SimpleGroupId::lie(LieFamily::G2, std::nullopt, 3)).to_real().value();
  CHECK(abs(g2 / pow(Real(3), 14) - 1) < Real("1e-80"));
  CHECK(order_upper_bound(SimpleGroupId::sporadic(4)) == default_sporadic_max());

  CHECK(exact_order(SimpleGroupId::alternating(6)) == 360u);
  CHECK(exact_order(SimpleGroupId::lie(LieFamily::A, 1, 7)) == 168u);
  CHECK(exact_order(SimpleGroupId::lie(LieFamily::A, 1, 8)) == 504u);
  CHECK_FALSE(exact_order(SimpleGroupId::lie(LieFamily::E8, std::nullopt, 2)));
  CHECK_FALSE(exact_order(SimpleGroupId::alternating(21)));
}

TEST_CASE("law length lower bounds") {
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u})
    CHECK(law_length_lower_bound(SimpleGroupId::lie(LieFamily::A, 1, q), 1.0) == q);
  CHECK(law_length_lower_bound(SimpleGroupId::lie(LieFamily::B2_2, std::nullopt, 8), 1.0) == 2);
  CHECK(law_length_lower_bound(SimpleGroupId::alternating(7), 1.0) == 7);
  CHECK(law_length_lower_bound(SimpleGroupId::sporadic(1), 1.0) == 1);
  CHECK(law_length_lower_bound(SimpleGroupId::alternating(7), 2.5) == 17);
  // low end of the D interval: D_5(2) gives 2^3
  CHECK(law_length_lower_bound(SimpleGroupId::lie(LieFamily::D, 5, 2), 1.0) == 8);
  CHECK(law_length_lower_bound(SimpleGroupId::lie(LieFamily::E8, std::nullopt, 1024), 1.0) == UINT64_MAX);
}

TEST_CASE("candidates examples") {
  const auto four = candidates_for_law_length(4, 1.0);
  CHECK(contains(four, SimpleGroupId::lie(LieFamily::A, 1, 4)));
  CHECK_FALSE(contains(four, SimpleGroupId::lie(LieFamily::A, 1, 5)));
  CHECK(std::none_of(four.begin(), four.end(),
                     [](const SimpleGroupId& id) { return std::holds_alternative<AlternatingId>(id.variant()); }));

  const auto thirty = candidates_for_law_length(30, 1.0);
  for (int m = 5; m <= 30; ++m) CHECK(contains(thirty, SimpleGroupId::alternating(m)));
  CHECK_FALSE(contains(thirty, SimpleGroupId::alternating(31)));
  for (std::uint64_t q = 4; q <= 30; ++q)
    if (prime_power(q)) CHECK(contains(thirty, SimpleGroupId::lie(LieFamily::A, 1, q)));
  CHECK_FALSE(contains(thirty, SimpleGroupId::lie(LieFamily::A, 1, 31)));

  const auto one = candidates_for_law_length(1, 1.0);
  CHECK(one.size() == 26);
  CHECK_THROWS_AS(candidates_for_law_length(0, 1.0), std::invalid_argument);

  // Alt first, sporadics last
  CHECK(thirty.front() == SimpleGroupId::alternating(5));
  CHECK(thirty.back() == SimpleGroupId::sporadic(26));
}

TEST_CASE("property: PSL(2,q) exact order below the order bound") {
  for (std::uint64_t q = 4; q <= 1000; ++q) {
    if (!prime_power(q)) continue;
    const auto id = SimpleGroupId::lie(LieFamily::A, 1, q);
    const auto exact = exact_order(id);
    REQUIRE(exact);
    const Real bound = order_upper_bound(id).to_real().value();
    CHECK(Real(*exact) <= bound);
  }
}

TEST_CASE("property: candidate lists grow with the length") {
  std::vector<SimpleGroupId> prev = candidates_for_law_length(1, 1.0);
  for (std::uint64_t l = 2; l <= 200; ++l) {
    const auto cur = candidates_for_law_length(l, 1.0);
    for (const auto& id : prev) CHECK(contains(cur, id));
    // every entry honours the filter
    for (const auto& id : cur) CHECK(law_length_lower_bound(id, 1.0) <= l);
    prev = cur;
  }
}

TEST_CASE("property: PSL(2,q) is a candidate iff q <= l") {
  for (std::uint64_t l : {1u, 3u, 4u, 5u, 10u, 31u, 32u, 64u, 127u, 500u}) {
    const auto c = candidates_for_law_length(l, 1.0);
    for (std::uint64_t q = 4; q <= 600; ++q) {
      if (!prime_power(q)) continue;
      CHECK(contains(c, SimpleGroupId::lie(LieFamily::A, 1, q)) == (q <= l));
    }
  }
}

TEST_CASE("table export is deterministic") {
  const std::string a = catalog_tables_json(10).dump();
  const std::string b = catalog_tables_json(10).dump();
  CHECK(a == b);
  const auto rows = catalog_tables_json(10);
  const auto& first = rows.at(0);
  CHECK(first.at("family") == "A");
  CHECK(first.at("k") == 1);
  CHECK(first.at("q").is_null());
  CHECK(first.at("a_low") == 1);
  CHECK(first.at("b") == 3);

  const auto cj = candidates_json(candidates_for_law_length(5, 1.0), 1.0);
  CHECK(cj.at(0).at("family") == "Alt");
}
