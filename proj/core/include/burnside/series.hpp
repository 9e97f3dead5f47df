#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "burnside/perm_group.hpp"

namespace burnside {

/// One term of a claimed normal series of a permutation group.
struct KernelDescriptor {
  enum class Kind { Trivial, Whole, BlockKernel, Derived, Generated };
  Kind kind = Kind::Trivial;
  std::vector<std::vector<int>> blocks;   // BlockKernel, 0-based points
  std::vector<Permutation> generators;    // Generated

  static KernelDescriptor trivial() { return {}; }
  static KernelDescriptor whole() { return {Kind::Whole, {}, {}}; }
  static KernelDescriptor block_kernel(std::vector<std::vector<int>> blocks) {
    return {Kind::BlockKernel, std::move(blocks), {}};
  }
  static KernelDescriptor derived() { return {Kind::Derived, {}, {}}; }
  static KernelDescriptor generated(std::vector<Permutation> gens) {
    return {Kind::Generated, {}, std::move(gens)};
  }

  std::string to_string() const;
};

/// JSON forms: {"kind":"trivial"}, {"kind":"whole"}, {"kind":"derived"},
/// {"kind":"block_kernel","blocks":[[1,2,3],...]} (1-based points),
/// {"kind":"generated","generators":[[images...],...]} (1-based images).
KernelDescriptor kernel_descriptor_from_json(const nlohmann::json& j, std::size_t degree);
std::vector<KernelDescriptor> series_from_json(const nlohmann::json& j, std::size_t degree);

struct SeriesFactorCheck {
  std::string from;
  std::string to;
  std::string factor_order;       // decimal
  bool solvable = false;
  bool semisimple = false;
  std::string method;             // how the factor was certified
};

struct SeriesVerification {
  std::uint64_t lambda_upper_bound = 0;
  std::vector<SeriesFactorCheck> factors;
};

/// Checks that the series starts at the trivial group, ends at G, is
/// increasing and normal in G, and that every factor is solvable or
/// semisimple. Returns the number of semisimple nonsolvable factors, an
/// upper bound for the nonsolvable length. Throws VerificationError naming
/// the failing step.
SeriesVerification verify_series_lambda(const PermGroup& g, const std::vector<KernelDescriptor>& series,
                                        std::uint64_t cayley_cap = 100000);

}  // namespace burnside
