#include <doctest.h>

#include <fstream>
#include <random>
#include <set>

#include "burnside/cayley_group.hpp"
#include "burnside/errors.hpp"
#include "burnside/group_io.hpp"
#include "burnside/make_group.hpp"
#include "burnside/structure.hpp"

using namespace burnside;

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

Table cyclic_table(std::uint32_t n) {
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// x -> x^k on a cyclic group of order n
std::vector<CayleyGroup::Element> power_map(std::uint32_t n, std::uint32_t k) {
  std::vector<CayleyGroup::Element> m(n);
  for (std::uint32_t x = 0; x < n; ++x) m[x] = (x * k) % n;
  return m;
}

}  // namespace

TEST_CASE("from_table validation") {
  CHECK(CayleyGroup::from_table(cyclic_table(6)).order() == 6);
  Table bad = cyclic_table(4);
  bad[1][1] = 3;  // breaks the Latin square
  CHECK_THROWS_AS(CayleyGroup::from_table(bad), std::invalid_argument);
  Table nonassoc = {{0, 1, 2}, {1, 0, 1}, {2, 2, 0}};
  CHECK_THROWS_AS(CayleyGroup::from_table(nonassoc), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGroup::from_table(Table{}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyGroup::from_table(cyclic_table(20), 10), CapExceeded);
}

TEST_CASE("from a permutation group") {
  const CayleyGroup a5 = CayleyGroup::from_perm_group(alternating_group(5));
  CHECK(a5.order() == 60);
  CHECK(a5.has_table());
  CHECK(a5.label(a5.identity()) == "()");
  CHECK_FALSE(a5.is_abelian());
  std::set<std::uint64_t> orders;
  for (std::uint32_t x = 0; x < 60; ++x) orders.insert(a5.element_order(x));
  CHECK(orders == std::set<std::uint64_t>{1, 2, 3, 5});
  CHECK(closure(a5, a5.generators()).size() == 60);
  CHECK_THROWS_AS(CayleyGroup::from_perm_group(symmetric_group(9), 1000), CapExceeded);
}

TEST_CASE("products and quotients") {
  const CayleyGroup c2 = CayleyGroup::cyclic(2);
  const CayleyGroup c3 = CayleyGroup::cyclic(3);
  const CayleyGroup c6 = CayleyGroup::direct_product(c2, c3);
  CHECK(c6.order() == 6);
  CHECK(c6.is_abelian());

  // S3 as C3 x| C2 with inversion
  const CayleyGroup s3 = CayleyGroup::semidirect(c3, c2, {power_map(3, 1), power_map(3, 2)});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK_THROWS_AS(CayleyGroup::semidirect(c3, c2, {power_map(3, 1), power_map(3, 0)}), std::invalid_argument);
  // h -> act[h] must be a homomorphism: C2 cannot act trivially then by inversion twice
  CHECK_THROWS_AS(CayleyGroup::semidirect(c3, c3, {power_map(3, 1), power_map(3, 2), power_map(3, 2)}),
                  std::invalid_argument);

  const CayleyGroup c12 = CayleyGroup::cyclic(12);
  const CayleyGroup q = CayleyGroup::quotient(c12, {0, 4, 8});
  CHECK(q.order() == 4);
  CHECK(q.is_abelian());
  CHECK_THROWS_AS(CayleyGroup::quotient(s3, {0, 3}), VerificationError);

  const CayleyGroup sub = CayleyGroup::subgroup(c12, {0, 3, 6, 9});
  CHECK(sub.order() == 4);
}

TEST_CASE("large groups answer without a table") {
  const CayleyGroup g = CayleyGroup::from_perm_group(symmetric_group(7));
  CHECK(g.order() == 5040);
  CHECK_FALSE(g.has_table());
  CHECK_THROWS_AS(g.table(), CapExceeded);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const auto a = static_cast<std::uint32_t>(rng() % 5040);
    const auto b = static_cast<std::uint32_t>(rng() % 5040);
    const auto c = static_cast<std::uint32_t>(rng() % 5040);
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    CHECK(g.mul(a, g.inv(a)) == g.identity());
  }
}

TEST_CASE("json round trip and the SL(2,5) data file") {
  const CayleyGroup s3 = CayleyGroup::from_perm_group(symmetric_group(3));
  const auto back = std::get<CayleyGroup>(group_from_json(cayley_group_to_json(s3)));
  CHECK(back.table() == s3.table());

  const PermGroup a5 = alternating_group(5);
  const auto perm = std::get<PermGroup>(group_from_json(perm_group_to_json(a5)));
  CHECK(perm.order() == 60);

  const auto sl = load_group_file(std::string(BURNSIDE_DATA_DIR) + "/sl25.json");
  const CayleyGroup& g = std::get<CayleyGroup>(sl);
  CHECK(g.order() == 120);
  // SL(2,5) has a unique involution
  int involutions = 0;
  for (std::uint32_t x = 0; x < 120; ++x) involutions += g.element_order(x) == 2;
  CHECK(involutions == 1);

  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"({"order": 2})")), ParseError);
  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"({"degree": 3, "generators": [[1,1,2]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_group_file("/nonexistent/group.json"), std::invalid_argument);
}

TEST_CASE("group handles") {
  const GroupHandle h = resolve_group("alt5");
  CHECK(h.order() == 60);
  CHECK(h.cayley().order() == 60);
  const GroupHandle big = resolve_group("sym9");
  CHECK(big.order() == 362880);
  CHECK_THROWS_AS(big.cayley(), CapExceeded);
  const GroupHandle file = resolve_group(std::string(BURNSIDE_DATA_DIR) + "/sl25.json");
  CHECK_FALSE(file.perm());
  CHECK(file.order() == 120);
}

TEST_CASE("property: random subgroup closures are closed") {
  const CayleyGroup g = CayleyGroup::from_perm_group(symmetric_group(5));
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    std::vector<CayleyGroup::Element> gens;
    for (int j = 0; j < 1 + static_cast<int>(rng() % 2); ++j) gens.push_back(static_cast<std::uint32_t>(rng() % 120));
    const Subgroup h = closure(g, gens);
    CHECK(120 % h.size() == 0);
    for (auto a : h.elements)
      for (auto b : h.generators) CHECK(h.contains(g.mul(a, b)));
  }
}
