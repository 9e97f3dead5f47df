#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "burnside/perm_group.hpp"

namespace burnside {

/// A finite group whose elements are 0..order-1. The product is a table
/// lookup when the order is at most kTableLimit; larger groups keep the rule
/// they were built from (permutation products, componentwise products, coset
/// representatives) and answer through it.
///
/// Cheap to copy; copies share state.
class CayleyGroup {
 public:
  using Element = std::uint32_t;

  static constexpr std::size_t kTableLimit = 2048;
  static constexpr std::uint64_t kDefaultCap = 100000;

  /// Validates closure, identity, inverses, and associativity (every
  /// triple up to order 512, 200000 seeded random triples above).
  /// Throws std::invalid_argument on failure.
  static CayleyGroup from_table(const std::vector<std::vector<std::uint32_t>>& table,
                                std::uint64_t cap = kDefaultCap);
  /// Enumerates the group. Element i is the i-th smallest permutation in
  /// lexicographic order of image arrays; labels are cycle strings.
  static CayleyGroup from_perm_group(const PermGroup& g, std::uint64_t cap = kDefaultCap);
  static CayleyGroup cyclic(std::uint32_t n);
  /// (a, b) has index a * |B| + b.
  static CayleyGroup direct_product(const CayleyGroup& a, const CayleyGroup& b,
                                    std::uint64_t cap = kDefaultCap);
  /// N x| H with (x1,h1)(x2,h2) = (x1 * act[h1][x2], h1 h2); (x, h) has
  /// index h * |N| + x. `act[h]` must be an automorphism of N and h -> act[h]
  /// a homomorphism; both are verified (std::invalid_argument).
  static CayleyGroup semidirect(const CayleyGroup& n, const CayleyGroup& h,
                                const std::vector<std::vector<Element>>& act,
                                std::uint64_t cap = kDefaultCap);
  /// G/N for a normal subgroup given by its elements. Coset i is the one
  /// whose smallest element is the i-th smallest coset minimum.
  /// Throws VerificationError if N is not a normal subgroup.
  static CayleyGroup quotient(const CayleyGroup& g, const std::vector<Element>& normal);
  /// The subgroup with the given (closed) element set, in sorted order.
  static CayleyGroup subgroup(const CayleyGroup& g, const std::vector<Element>& elements);

  std::uint32_t order() const noexcept;
  Element identity() const noexcept;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  bool contains(Element a) const noexcept { return a < order(); }
  bool has_table() const noexcept;

  /// A small generating set: greedy over elements in index order.
  const std::vector<Element>& generators() const noexcept;
  std::uint64_t element_order(Element a) const;
  std::string label(Element a) const;
  bool is_abelian() const;

  /// Full table, row-major. Throws CapExceeded above kTableLimit.
  std::vector<std::vector<std::uint32_t>> table() const;

  struct Impl;

 private:
  explicit CayleyGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace burnside
