#include <doctest.h>

#include <random>

#include "burnside/cayley_group.hpp"
#include "burnside/errors.hpp"
#include "burnside/group_io.hpp"
#include "burnside/make_group.hpp"
#include "burnside/structure.hpp"

using namespace burnside;

namespace {

CayleyGroup cay(std::string_view descriptor) { return CayleyGroup::from_perm_group(make_group(descriptor)); }

CayleyGroup sl25() {
  return std::get<CayleyGroup>(load_group_file(std::string(BURNSIDE_DATA_DIR) + "/sl25.json"));
}

std::uint64_t factor_product(const CompositionReport& r) {
  std::uint64_t p = 1;
  for (const auto& f : r.factors) p *= f.order;
  return p;
}

}  // namespace

TEST_CASE("normal subgroups and minimal normal subgroups") {
  const CayleyGroup s4 = cay("sym4");
  CHECK(normal_subgroups(s4).size() == 4);
  const auto mins = minimal_normal_subgroups(s4);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].size() == 4);

  const CayleyGroup a5 = cay("alt5");
  CHECK(normal_subgroups(a5).size() == 2);
  CHECK(minimal_normal_subgroups(a5).front().size() == 60);

  const CayleyGroup aa = cay("direct_product(alt5, alt5)");
  CHECK(minimal_normal_subgroups(aa).size() == 2);
  CHECK(normal_subgroups(aa).size() == 4);
}

TEST_CASE("conjugacy classes") {
  const CayleyGroup a5 = cay("alt5");
  const auto classes = conjugacy_classes(a5, whole_group(a5));
  CHECK(classes.size() == 5);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("radical and layer") {
  const CayleyGroup s5 = cay("sym5");
  const Subgroup r = solvable_radical_over(s5, trivial_subgroup(s5));
  CHECK(r.size() == 1);
  CHECK(layer_over(s5, r).size() == 60);

  const CayleyGroup sl = sl25();
  CHECK(solvable_radical_over(sl, trivial_subgroup(sl)).size() == 2);

  const CayleyGroup s4 = cay("sym4");
  CHECK(solvable_radical_over(s4, trivial_subgroup(s4)).size() == 24);
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_solvable(sl));
}

TEST_CASE("semisimple factors") {
  const CayleyGroup aa = cay("direct_product(alt5, alt6)");
  CHECK(is_semisimple_over(aa, whole_group(aa), trivial_subgroup(aa)));
  const CayleyGroup c2a5 = cay("direct_product(c2, alt5)");
  CHECK_FALSE(is_semisimple_over(c2a5, whole_group(c2a5), trivial_subgroup(c2a5)));
  const CayleyGroup s5 = cay("sym5");
  CHECK_FALSE(is_semisimple_over(s5, whole_group(s5), trivial_subgroup(s5)));
}

TEST_CASE("composition factors") {
  const auto r = composition_report(cay("sym4"));
  CHECK(r.factors.size() == 4);
  CHECK(factor_product(r) == 24);
  CHECK_FALSE(r.is_anabelian());

  const auto sl = composition_report(sl25());
  REQUIRE(sl.factors.size() == 2);
  CHECK(factor_product(sl) == 120);
  bool saw_alt5 = false;
  for (const auto& f : sl.factors)
    if (!f.abelian) saw_alt5 = f.name == std::optional<std::string>("Alt(5)");
  CHECK(saw_alt5);

  const auto a = composition_report(cay("direct_product(alt5, alt6)"));
  CHECK(a.is_anabelian());
  CHECK(a.factors.size() == 2);
  CHECK(a.series.front().size() == 1);
  CHECK(a.series.back().size() == 21600);
  const auto p = composition_report(cay("psl2(7)"));
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0].order == 168);
}

TEST_CASE("nonsolvable length") {
  CHECK(nonsolvable_length(cay("sym4")).lambda == 0);
  CHECK(nonsolvable_length(cay("dihedral(4)")).lambda == 0);
  CHECK(nonsolvable_length(CayleyGroup::cyclic(30)).lambda == 0);
  for (auto d : {"alt5", "sym5", "direct_product(c2, alt5)", "psl2(8)"}) {
    const auto r = nonsolvable_length(cay(d));
    CHECK(r.lambda == 1);
    CHECK(r.certified);
  }
  CHECK(nonsolvable_length(sl25()).lambda == 1);
  const auto big = nonsolvable_length(cay("direct_product(alt5, alt6)"));
  CHECK(big.lambda == 1);
  CHECK(big.certified);
  // series steps end at G and alternate tags
  const auto s5 = nonsolvable_length(cay("sym5"));
  REQUIRE(!s5.series.empty());
  CHECK(s5.series.back().subgroup.size() == 120);
}

TEST_CASE("anabelian detection") {
  for (auto d : {"alt5", "alt6", "direct_product(alt5, alt5)", "direct_product(alt5, alt6)", "psl2(7)"})
    CHECK(is_anabelian(cay(d)));
  for (auto d : {"sym5", "direct_product(c2, alt5)", "sym4", "c7"}) CHECK_FALSE(is_anabelian(cay(d)));
  CHECK_FALSE(is_anabelian(sl25()));
}

TEST_CASE("property: composition factor orders multiply to the group order") {
  std::mt19937_64 rng(51);
  const std::vector<std::string> pool{"c2", "c3", "c4", "sym3", "alt4", "alt5", "dihedral(5)"};
  for (int i = 0; i < 20; ++i) {
    const std::string d =
        "direct_product(" + pool[rng() % pool.size()] + ", " + pool[rng() % pool.size()] + ")";
    const CayleyGroup g = cay(d);
    const auto r = composition_report(g);
    CAPTURE(d);
    CHECK(factor_product(r) == g.order());
    CHECK(r.is_anabelian() == is_anabelian(g));
    for (std::size_t j = 1; j < r.series.size(); ++j) CHECK(r.series[j].contains(r.series[j - 1]));
  }
}

TEST_CASE("property: derived series descends to the solvable residual") {
  for (auto d : {"sym4", "sym5", "direct_product(c3, alt5)", "dihedral(6)"}) {
    const CayleyGroup g = cay(d);
    const auto series = derived_series(g, whole_group(g));
    for (std::size_t j = 1; j < series.size(); ++j) {
      CHECK(series[j - 1].contains(series[j]));
      CHECK(is_normal(g, series[j], whole_group(g)));
    }
    CHECK((series.back().size() == 1) == is_solvable(g));
  }
}
