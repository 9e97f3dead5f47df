#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burnside/permutation.hpp"

namespace burnside {

namespace detail {
struct ChainCache;
}

/// A permutation group given by generators. The stabilizer chain is built
/// on first use (deterministic Schreier-Sims) and shared between copies;
/// concurrent first use is safe.
class PermGroup {
 public:
  using Element = Permutation;

  /// Identity generators are dropped. `base_prefix` (0-based points) is
  /// used as the start of the base, which makes the pointwise stabilizer
  /// of those points available as a chain level.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<int> base_prefix = {});

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool is_trivial() const noexcept { return generators_.empty(); }

  Element identity() const { return Permutation::identity(degree_); }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return a.inverse(); }
  bool contains(const Element& g) const;

  /// Throws CapExceeded if the order does not fit in 64 bits.
  std::uint64_t order() const;
  boost::multiprecision::cpp_int order_big() const;

  std::vector<int> base() const;
  std::vector<std::size_t> transversal_sizes() const;
  /// Strong generators fixing the first `level` base points; together they
  /// generate that pointwise stabilizer.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  /// All elements, in chain order. Throws CapExceeded above `cap`.
  std::vector<Permutation> elements(std::uint64_t cap) const;
  /// Uniform random element.
  Permutation random_element(std::mt19937_64& rng) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool is_normal_in(const PermGroup& other) const;

  /// Orbits on 0..degree-1, each sorted, ordered by smallest point.
  std::vector<std::vector<int>> orbits() const;
  /// Action on an invariant point set; point points[i] becomes i.
  /// Throws VerificationError if the set is not invariant.
  PermGroup restricted(std::span<const int> points) const;

 private:
  const detail::ChainCache& chain() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<int> base_prefix_;
  std::shared_ptr<detail::ChainCache> cache_;
};

/// Smallest normal subgroup of `g` containing `s`.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s);
PermGroup derived_subgroup(const PermGroup& g);
/// G = G_0 > G_1 > ... down to the first repeated term.
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_perfect(const PermGroup& g);

/// Action of `g` on a block system (0-based points; blocks must be disjoint
/// and permuted by every generator) together with its kernel.
struct BlockAction {
  PermGroup image;   // on blocks.size() points
  PermGroup kernel;  // on the original points
};
BlockAction block_action(const PermGroup& g, const std::vector<std::vector<int>>& blocks);

/// Image of `h` (a subgroup of the group acting) under the block action.
PermGroup block_image(const PermGroup& h, const std::vector<std::vector<int>>& blocks);

}  // namespace burnside
