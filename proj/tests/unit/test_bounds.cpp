#include <doctest.h>

#include "burnside/bounds.hpp"
#include "burnside/word.hpp"
#include "oracle/mpfr_oracle.hpp"

using namespace burnside;
using oracle::Big;

namespace {

BoundParams params(std::uint64_t d, std::uint64_t l, std::uint64_t k = 1) {
  BoundParams p;
  p.d = d;
  p.l = l;
  p.k = k;
  return p;
}

// Real value of ln^n(t), for t tall enough.
Big log_n(TowerNumber t, int n) {
  for (int i = 0; i < n; ++i) t = ln_t(t);
  return oracle::big(t.to_real().value());
}

bool le(const TowerNumber& a, const TowerNumber& b) { return cmp_t(a, b) != std::strong_ordering::greater; }

}  // namespace

TEST_CASE("alternating stage") {
  const TowerNumber b = alt_product_bound(params(1, 2));
  CHECK(oracle::rel_err(oracle::value(b), Big(65536)) < Big("1e-9"));
  // ln ln B = ln(l^2 ln l) + d l ln l
  for (auto [d, l] : {std::pair<int, int>{1, 3}, {2, 2}, {2, 5}, {3, 7}, {5, 64}}) {
    const Big L(l);
    const Big want = log(L * L * log(L)) + Big(d) * L * log(L);
    CHECK(oracle::rel_err(log_n(alt_product_bound(params(d, l)), 2), want) < Big("1e-60"));
  }
}

TEST_CASE("Lie stage closed form and grid") {
  const LieBound a = lie_product_bound(params(1, 2), LieFamily::A);
  const Big L(2);
  const Big closed = exp(pow(log(L), 3) * exp(exp(log(L) * log(L))));
  CHECK(oracle::rel_err(oracle::value(a.closed), closed) < Big("1e-40"));
  // the only grid point is (k, q) = (1, 2), giving (2^3)^(2^3)
  REQUIRE(a.grid_points == std::vector<std::pair<int, std::uint64_t>>{{1, 2}});
  CHECK(oracle::rel_err(oracle::value(a.grid), pow(Big(8), 8)) < Big("1e-40"));

  // l = 4, d = 1: q in {2, 3, 4}, ln grid = sum q^3 * 3 ln q
  const LieBound a4 = lie_product_bound(params(1, 4), LieFamily::A);
  CHECK(a4.grid_points.size() == 3);
  Big s = 0;
  for (int q : {2, 3, 4}) s += pow(Big(q), 3) * 3 * log(Big(q));
  CHECK(oracle::rel_err(log_n(a4.grid, 1), s) < Big("1e-40"));

  // field constraints: 2B2 only at odd powers of 2
  const LieBound sz = lie_product_bound(params(1, 64), LieFamily::B2_2);
  for (auto [k, q] : sz.grid_points) CHECK((q == 2 || q == 8 || q == 32));
  CHECK(lie_product_bound(params(1, 3), LieFamily::E8).grid_points.empty());
  CHECK(lie_product_bound(params(1, 3), LieFamily::E8).grid == TowerNumber::from_real(1.0));
}

TEST_CASE("property: grid stays below the closed form for larger l") {
  // the literal closed form is tiny at small l; find where it takes over
  for (std::uint64_t d = 1; d <= 3; ++d) {
    for (std::uint64_t l = 64; l <= 1024; l *= 2) {
      for (const auto& lb : lie_product_bounds(params(d, l))) {
        CAPTURE(d);
        CAPTURE(l);
        CAPTURE(family_symbol(lb.family));
        CHECK(le(lb.grid, lb.closed));
      }
    }
  }
  // documented counterexample at the smallest admissible length
  const LieBound a = lie_product_bound(params(1, 2), LieFamily::A);
  CHECK(cmp_t(a.grid, a.closed) == std::strong_ordering::greater);
}

TEST_CASE("semisimple stage") {
  const SemisimpleBound s = semisimple_bound(params(2, 30));
  CHECK(s.lie.size() == 16);
  CHECK(s.sporadic_factor == pow_t(default_sporadic_max(), Real(2)));
  CHECK(le(s.alt, s.product));
  const Big x = 2 * 2 * 30 * log(Big(30));
  CHECK(oracle::rel_err(log_n(s.normalized, 2), x) < Big("1e-60"));
  CHECK(s.product_within_normalized == le(s.product, s.normalized));
}

TEST_CASE("anabelian recursion") {
  // k = 1: the recursion is the normalized value itself
  const AnabelianBound one = anabelian_bound(params(2, 30, 1));
  const TowerNumber norm = semisimple_bound(params(2, 30, 1)).normalized;
  CHECK(one.recursive.height() == norm.height());
  CHECK(abs(one.recursive.index() - norm.index()) < Real("1e-80"));

  // k = 2: E_2(x) * E_2(x E_2(x)) with x = c d l ln l
  const AnabelianBound two = anabelian_bound(params(1, 2, 2));
  const Big x = 2 * 2 * log(Big(2));
  const Big e2 = exp(exp(x));
  const Big lnB = exp(x) + exp(x * e2);
  // compare one level down to stay in MPFR range
  CHECK(oracle::rel_err(log_n(two.recursive, 2), log(lnB)) < Big("1e-40"));

  for (std::uint64_t k = 1; k <= 6; ++k) {
    const AnabelianBound a = anabelian_bound(params(3, 16, k));
    CHECK(le(a.recursive, a.intermediate));
    CHECK(le(a.intermediate, a.closed));
    CHECK(a.closed.height() == 2 * k + TowerNumber::from_real(params(3, 16).x() * 2).height());
  }
}

TEST_CASE("Schreier bound") {
  const SchreierBound s = schreier_generator_bound(3, TowerNumber::from_real(60));
  CHECK(abs(s.exact.to_real().value() - 121) < Real("1e-80"));
  CHECK(abs(s.simplified.to_real().value() - 180) < Real("1e-80"));
  CHECK(le(s.exact, s.simplified));
  const SchreierBound one = schreier_generator_bound(1, TowerNumber::from_parts(9, Real("0.3")));
  CHECK(one.exact == TowerNumber::from_real(1.0));
  CHECK_THROWS_AS(schreier_generator_bound(0, TowerNumber::from_real(2)), std::invalid_argument);
}

TEST_CASE("main theorem bound") {
  const BoundReport r = main_theorem_bound(parse_word("x^30"), 2);
  const Real x = 2 * 2 * 30 * log(Real(30));
  CHECK(r.l == 30);
  CHECK(r.lambda_used == 30);
  CHECK(r.main_bound.height() == 60 + TowerNumber::from_real(2 * x).height());
  CHECK(r.main_bound.height() == 63);
  CHECK(r.main_bound == main_theorem_bound(parse_word("x^30"), 2).main_bound);

  const BoundReport capped = main_theorem_bound(parse_word("x^30"), 2, 3);
  CHECK(capped.lambda_used == 3);
  CHECK(capped.main_bound.height() == 6 + 3);
  const BoundReport over = main_theorem_bound(parse_word("x^5"), 2, 9);
  CHECK(over.lambda_used == 5);
  CHECK_FALSE(over.notes.empty());

  CHECK_THROWS_AS(main_theorem_bound(Word(), 2), std::invalid_argument);
  CHECK_THROWS_AS(main_theorem_bound(parse_word("x"), 2), std::invalid_argument);
  CHECK_THROWS_AS(main_theorem_bound(parse_word("x^2"), 0), std::invalid_argument);
  BoundConstants bad;
  bad.c = 1.5;
  CHECK_THROWS_AS(main_theorem_bound(parse_word("x^2"), 2, std::nullopt, bad), std::invalid_argument);
}

TEST_CASE("property: bounds grow with d, l and k") {
  for (std::uint64_t d = 1; d <= 4; ++d) {
    for (std::uint64_t l = 2; l <= 40; l += 3) {
      for (std::uint64_t k = 1; k <= 4; ++k) {
        const AnabelianBound a = anabelian_bound(params(d, l, k));
        CHECK(le(a.closed, anabelian_bound(params(d + 1, l, k)).closed));
        CHECK(le(a.closed, anabelian_bound(params(d, l + 1, k)).closed));
        CHECK(le(a.closed, anabelian_bound(params(d, l, k + 1)).closed));
        CHECK(le(a.recursive, a.closed));
      }
      CHECK(le(alt_product_bound(params(d, l)), alt_product_bound(params(d, l + 1))));
    }
  }
}
