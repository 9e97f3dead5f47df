#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "burnside/tower.hpp"

namespace burnside {

/// The sixteen Lie types, in the order of the classification tables.
enum class LieFamily {
  A,
  A2,    // 2A_k (unitary)
  B,
  C,
  D,
  D2,    // 2D_k
  E6,
  E6_2,  // 2E6
  E7,
  E8,
  F4,
  G2,
  D4_3,  // 3D4
  B2_2,  // 2B2 (Suzuki)
  F4_2,  // 2F4 (Ree)
  G2_2,  // 2G2 (Ree)
};

inline constexpr std::array<LieFamily, 16> kAllFamilies = {
    LieFamily::A,  LieFamily::A2,   LieFamily::B,  LieFamily::C,  LieFamily::D,    LieFamily::D2,
    LieFamily::E6, LieFamily::E6_2, LieFamily::E7, LieFamily::E8, LieFamily::F4,   LieFamily::G2,
    LieFamily::D4_3, LieFamily::B2_2, LieFamily::F4_2, LieFamily::G2_2};

enum class FieldConstraint { AnyPrimePower, OddPowerOf2, OddPowerOf3 };

struct FamilyInfo {
  LieFamily family;
  std::string_view symbol;      // "A", "2A", ..., "2G2"
  int min_rank;                 // smallest admissible k
  std::optional<int> fixed_rank;  // exceptional families
  FieldConstraint field;
};

const FamilyInfo& family_info(LieFamily f);
std::string_view family_symbol(LieFamily f);
/// Accepts the ASCII symbols ("2B2") and superscript forms ("²B2").
std::optional<LieFamily> parse_family(std::string_view symbol);

/// Closed interval [low, high] for the law-length exponent a(X).
struct AValue {
  int low = 0;
  int high = 0;
  friend bool operator==(const AValue&, const AValue&) = default;
};

/// Throws std::invalid_argument for an inadmissible rank. For families of
/// fixed rank `k` may be omitted or must equal that rank.
AValue a_value(LieFamily family, std::optional<int> k = std::nullopt);
int b_value(LieFamily family, std::optional<int> k = std::nullopt);

struct AlternatingId {
  int m = 5;
  friend bool operator==(const AlternatingId&, const AlternatingId&) = default;
};
struct LieId {
  LieFamily family = LieFamily::A;
  int k = 1;
  std::uint64_t q = 4;
  friend bool operator==(const LieId&, const LieId&) = default;
};
struct SporadicId {
  int index = 1;  // 1..26, no further data is carried
  friend bool operator==(const SporadicId&, const SporadicId&) = default;
};

/// A nonabelian finite simple group, up to the coincidences noted in the
/// README (e.g. A_1(4) = A_1(5) = Alt(5) are distinct ids).
class SimpleGroupId {
 public:
  using Variant = std::variant<AlternatingId, LieId, SporadicId>;

  static SimpleGroupId alternating(int m);
  /// Rank is ignored (and may be omitted) for fixed-rank families.
  static SimpleGroupId lie(LieFamily family, std::optional<int> k, std::uint64_t q);
  static SimpleGroupId sporadic(int index);

  const Variant& variant() const noexcept { return v_; }
  std::string to_string() const;

  friend bool operator==(const SimpleGroupId&, const SimpleGroupId&) = default;

 private:
  explicit SimpleGroupId(Variant v) : v_(v) {}
  Variant v_;
};

/// p and e with q = p^e, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

/// Whether (family, k, q) meets the field constraint of the family.
bool satisfies_field_constraint(LieFamily family, std::uint64_t q);

/// Whether the parameters name a simple group. Rejects the small
/// non-simple members A_1(2), A_1(3), 2A_2(2), B_2(2), G_2(2), 2B_2(2),
/// 2G_2(3) and the Tits boundary case 2F_4(2).
bool is_simple_lie(LieFamily family, int k, std::uint64_t q);

/// Default SPORADIC_MAX = E_1(100).
TowerNumber default_sporadic_max();

/// q^b(X) for Lie type (implicit constant 1), m!/2 for Alt(m),
/// `sporadic_max` for sporadic placeholders.
TowerNumber order_upper_bound(const SimpleGroupId& id,
                              const TowerNumber& sporadic_max = default_sporadic_max());

/// m!/2 for m <= 20; q(q^2-1)/gcd(2,q-1) for A_1(q); nullopt otherwise.
std::optional<std::uint64_t> exact_order(const SimpleGroupId& id);

/// floor(c * q^a_low) for Lie type, floor(c * sqrt(q)) for 2B2,
/// floor(c * m) for Alt(m), 1 for sporadics. Saturates at UINT64_MAX.
std::uint64_t law_length_lower_bound(const SimpleGroupId& id, double c_lower);

/// All candidates with law_length_lower_bound <= length, in the order
/// Alt ascending, then families in table order with (k, q)
/// lexicographic, then the 26 sporadic placeholders.
/// Throws std::invalid_argument for length 0.
std::vector<SimpleGroupId> candidates_for_law_length(std::uint64_t length, double c_lower,
                                                     int d = 2);

/// Names a simple group of the given order if exactly one catalog entry
/// with a known exact order matches (Alt(m) for m <= 20 and PSL(2,q) for
/// q < 2^16, with Alt(5), Alt(6), Alt(8) preferred over their PSL aliases).
std::optional<std::string> recognize_simple_order(std::uint64_t order);

/// {family, k, q, a_low, a_high, b, bound} rows for every family and every
/// admissible rank in 1..max_rank; q and bound are null.
nlohmann::ordered_json catalog_tables_json(int max_rank = 10);

/// Same schema for a candidate list; bound is the law-length lower bound.
nlohmann::ordered_json candidates_json(const std::vector<SimpleGroupId>& ids, double c_lower);

}  // namespace burnside
