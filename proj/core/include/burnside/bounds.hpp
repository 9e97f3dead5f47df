#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burnside/catalog.hpp"
#include "burnside/tower.hpp"
#include "burnside/word.hpp"

namespace burnside {

struct BoundConstants {
  double c = 2;    // constant of the semisimple bound, must be >= 2
  double c1 = 1;   // grid cutoff q^(c1 k) <= l
  double c2 = 1;   // rank cutoff k <= c2 ln l
  double c3 = 1;   // Lie closed form
  double c4 = 1;   // Lie closed form
  TowerNumber sporadic_max = default_sporadic_max();
};

struct BoundParams {
  std::uint64_t d = 2;   // rank
  std::uint64_t l = 2;   // law length, >= 2
  std::uint64_t k = 1;   // nonsolvable length, >= 1
  BoundConstants constants;

  /// Throws std::invalid_argument unless d >= 1, l >= 2, k >= 1, c >= 2
  /// and c1..c4 > 0.
  void validate() const;
  /// x = c d l ln l.
  Real x() const;
};

/// exp(l^2 ln l exp(d l ln l)).
TowerNumber alt_product_bound(const BoundParams& p);

struct LieBound {
  LieFamily family;
  TowerNumber closed;   // exp(c3 ln(l)^3 exp(l^(c4 d ln l)))
  TowerNumber grid;     // product of (q^b)^((q^b)^d) over the cutoff grid
  std::vector<std::pair<int, std::uint64_t>> grid_points;  // (k, q)
};

LieBound lie_product_bound(const BoundParams& p, LieFamily family);
std::vector<LieBound> lie_product_bounds(const BoundParams& p);

struct SemisimpleBound {
  TowerNumber alt;
  std::vector<LieBound> lie;
  TowerNumber sporadic_factor;  // SPORADIC_MAX^d
  TowerNumber product;          // alt * prod_X max(closed, grid) * sporadic
  TowerNumber normalized;       // E_2(c d l ln l)
  bool product_within_normalized = false;
};

SemisimpleBound semisimple_bound(const BoundParams& p);

struct AnabelianBound {
  TowerNumber recursive;     // prod_i E_2(x_i), x_i = c l ln(l) d_i, d_{i+1} = d_i E_2(x_i)
  TowerNumber intermediate;  // E_{2k}(x + ln ln(2 x^2))
  TowerNumber closed;        // E_{2k}(2x)
};

AnabelianBound anabelian_bound(const BoundParams& p);

/// (d-1) * index + 1, and the simplification d * index.
struct SchreierBound {
  TowerNumber exact;
  TowerNumber simplified;
};
SchreierBound schreier_generator_bound(std::uint64_t d, const TowerNumber& index);

struct BoundReport {
  std::uint64_t d = 0;
  std::uint64_t l = 0;
  std::uint64_t lambda_used = 0;
  Real x = 0;
  BoundConstants constants;
  SemisimpleBound semisimple;
  AnabelianBound anabelian;
  TowerNumber main_bound;
  std::vector<std::string> notes;
};

/// Full staged report for given (d, l, k).
BoundReport bound_report(const BoundParams& p);

/// l = word_length(w), k = min(l, lambda_override). Throws
/// std::invalid_argument for the trivial word or l < 2 after that.
BoundReport main_theorem_bound(const Word& w, std::uint64_t d,
                               std::optional<std::uint64_t> lambda_override = std::nullopt,
                               const BoundConstants& constants = {});

}  // namespace burnside
