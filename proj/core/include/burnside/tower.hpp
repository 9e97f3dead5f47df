#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace burnside {

/// 100 significant decimal digits; binary exponent range about +-2^31.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                           boost::multiprecision::et_off>;

/// Level-index representation of a nonnegative real x = E_h(f), where
/// E_0(t) = t and E_{h+1}(t) = exp(E_h(t)).
///
/// Canonical form: h = 0 iff x < 1, and f is in [0, 1) whenever h >= 1.
/// With that normalisation the lexicographic order on (h, f) is the order
/// of the represented reals, so comparison never leaves the representation.
///
/// Values are immutable. `inexact()` is sticky: it is set when an operation
/// had to drop a contribution that is below the working precision of the
/// larger operand (mixed-height products and sums), and is inherited by
/// everything computed from such a value.
class TowerNumber {
 public:
  /// Zero.
  TowerNumber() = default;

  /// Number of logarithms needed to bring x below 1. Throws
  /// std::domain_error for negative or non-finite x.
  static TowerNumber from_real(const Real& x);
  static TowerNumber from_real(double x) { return from_real(Real(x)); }

  /// Builds (h, f) directly; f must satisfy the canonical-form bounds.
  static TowerNumber from_parts(std::uint64_t height, const Real& index, bool inexact = false);

  /// Accepts "E_h(f)" (optionally followed by " [...]") or a plain
  /// nonnegative decimal. Throws ParseError.
  static TowerNumber parse(std::string_view text);

  std::uint64_t height() const noexcept { return height_; }
  const Real& index() const noexcept { return index_; }
  bool inexact() const noexcept { return inexact_; }
  bool is_zero() const noexcept { return height_ == 0 && index_ == 0; }

  /// The represented real when height <= 4 (every such value fits the
  /// exponent range of Real); nullopt above.
  std::optional<Real> to_real() const;

  TowerNumber with_inexact(bool flag) const;

  /// "E_h(f)" with f rounded to 6 decimals.
  std::string to_string() const;
  /// to_string() plus " [= decimal]" when the value is below 1e30.
  std::string to_display() const;
  /// Index printed with `digits` significant digits (for JSON export).
  std::string index_string(int digits = 60) const;

  friend bool operator==(const TowerNumber& a, const TowerNumber& b) {
    return a.height_ == b.height_ && a.index_ == b.index_;
  }
  friend std::strong_ordering operator<=>(const TowerNumber& a, const TowerNumber& b);

 private:
  std::uint64_t height_ = 0;
  Real index_ = 0;
  bool inexact_ = false;
};

TowerNumber exp_t(const TowerNumber& x);

/// Inverse of exp_t. Throws std::domain_error when the value is below 1
/// (the logarithm would be zero-crossing or undefined).
TowerNumber ln_t(const TowerNumber& x);

TowerNumber mul_t(const TowerNumber& x, const TowerNumber& y);

/// Sum of two nonnegative values. Used for logarithms of products; there
/// is deliberately no subtraction.
TowerNumber add_t(const TowerNumber& x, const TowerNumber& y);

std::strong_ordering cmp_t(const TowerNumber& x, const TowerNumber& y);

/// k-fold exp_t; O(1) in k.
TowerNumber big_E(std::uint64_t k, const TowerNumber& x);

/// x^p for real p >= 0, via exp(p ln x).
TowerNumber pow_t(const TowerNumber& x, const Real& p);

}  // namespace burnside
