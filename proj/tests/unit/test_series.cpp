#include <doctest.h>

#include <fstream>

#include "burnside/errors.hpp"
#include "burnside/make_group.hpp"
#include "burnside/series.hpp"

using namespace burnside;

namespace {

std::vector<std::vector<int>> blocks_of(int size, int count) {
  std::vector<std::vector<int>> b(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < size; ++j) b[static_cast<std::size_t>(i)].push_back(i * size + j);
  return b;
}

nlohmann::json load(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("wreath series from the data file") {
  const PermGroup w = make_group("wreath(alt5, alt5)");
  const auto series = series_from_json(load(std::string(BURNSIDE_DATA_DIR) + "/series/alt5_wr_alt5.json"), 25);
  REQUIRE(series.size() == 3);
  CHECK(series[1].kind == KernelDescriptor::Kind::BlockKernel);
  CHECK(series[1].blocks.front() == std::vector<int>{0, 1, 2, 3, 4});
  const SeriesVerification v = verify_series_lambda(w, series);
  CHECK(v.lambda_upper_bound == 2);
  REQUIRE(v.factors.size() == 2);
  for (const auto& f : v.factors) {
    CHECK(f.semisimple);
    CHECK_FALSE(f.solvable);
  }
  CHECK(v.factors[1].factor_order == "60");
}

TEST_CASE("solvable and mixed series") {
  const PermGroup s4 = make_group("sym4");
  const SeriesVerification v = verify_series_lambda(
      s4, {KernelDescriptor::trivial(), KernelDescriptor::derived(), KernelDescriptor::whole()});
  CHECK(v.lambda_upper_bound == 0);

  const PermGroup w = make_group("wreath(c2, alt5)");
  const SeriesVerification m = verify_series_lambda(
      w, {KernelDescriptor::trivial(), KernelDescriptor::block_kernel(blocks_of(2, 5)), KernelDescriptor::whole()});
  CHECK(m.lambda_upper_bound == 1);
  CHECK(m.factors[0].solvable);
  CHECK(m.factors[1].semisimple);
}

TEST_CASE("rejected series") {
  const PermGroup a5 = make_group("alt5");
  CHECK_THROWS_AS(verify_series_lambda(a5, {KernelDescriptor::whole()}), VerificationError);
  CHECK_THROWS_AS(verify_series_lambda(a5, {KernelDescriptor::whole(), KernelDescriptor::whole()}),
                  VerificationError);
  const Permutation c = Permutation::from_cycles(5, {{1, 2, 3}});
  // a 3-cycle does not generate a normal subgroup of Alt(5)
  CHECK_THROWS_AS(verify_series_lambda(a5, {KernelDescriptor::trivial(), KernelDescriptor::generated({c}),
                                            KernelDescriptor::whole()}),
                  VerificationError);
  // S4 over the trivial group is neither solvable... it is, but S5 is not semisimple
  const PermGroup s5 = make_group("sym5");
  CHECK_THROWS_AS(verify_series_lambda(s5, {KernelDescriptor::trivial(), KernelDescriptor::whole()}),
                  VerificationError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"([{"kind": "bogus"}])"), 5), std::invalid_argument);
}

TEST_CASE("json descriptors") {
  const auto k = kernel_descriptor_from_json(nlohmann::json::parse(R"({"kind": "generated", "generators": [[2,3,1,4,5]]})"), 5);
  CHECK(k.kind == KernelDescriptor::Kind::Generated);
  CHECK(k.generators.front() == Permutation::from_cycles(5, {{1, 2, 3}}));
  CHECK(kernel_descriptor_from_json(nlohmann::json::parse(R"({"kind": "derived"})"), 5).kind ==
        KernelDescriptor::Kind::Derived);
}
