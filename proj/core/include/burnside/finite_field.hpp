#pragma once

#include <cstdint>
#include <vector>

namespace burnside {

/// GF(q), q = p^e small, with elements 0..q-1 read as polynomials over
/// GF(p) in base p. Addition and multiplication are table lookups.
class FiniteField {
 public:
  /// Throws std::invalid_argument unless q is a prime power <= 1024.
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  /// Throws std::domain_error for 0.
  std::uint32_t inv(std::uint32_t a) const;
  /// A generator of the multiplicative group.
  std::uint32_t primitive() const noexcept { return primitive_; }

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  int e_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::uint32_t primitive_ = 1;
};

}  // namespace burnside
