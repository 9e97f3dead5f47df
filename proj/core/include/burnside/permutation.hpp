#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace burnside {

/// A permutation of {0, ..., degree-1}. Files and user-facing text use the
/// points 1..degree; conversion happens in from_one_based/to_one_based.
///
/// Products compose left to right: (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(std::size_t degree);
  static Permutation from_one_based(std::span<const long long> images);
  /// Cycles given with points 1..degree, e.g. {{1,2,3},{4,5}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint16_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Order as an element (lcm of cycle lengths).
  std::uint64_t order() const;
  /// Same permutation on a larger point set, fixing the new points.
  Permutation extended(std::size_t degree) const;

  std::vector<long long> to_one_based() const;
  /// Disjoint-cycle notation with points 1..degree; "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace burnside
