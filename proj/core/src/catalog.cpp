#include "burnside/catalog.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace burnside {

namespace {

constexpr std::array<FamilyInfo, 16> kFamilies = {{
    {LieFamily::A, "A", 1, std::nullopt, FieldConstraint::AnyPrimePower},
    {LieFamily::A2, "2A", 2, std::nullopt, FieldConstraint::AnyPrimePower},
    {LieFamily::B, "B", 2, std::nullopt, FieldConstraint::AnyPrimePower},
    {LieFamily::C, "C", 3, std::nullopt, FieldConstraint::AnyPrimePower},
    {LieFamily::D, "D", 4, std::nullopt, FieldConstraint::AnyPrimePower},
    {LieFamily::D2, "2D", 4, std::nullopt, FieldConstraint::AnyPrimePower},
    {LieFamily::E6, "E6", 6, 6, FieldConstraint::AnyPrimePower},
    {LieFamily::E6_2, "2E6", 6, 6, FieldConstraint::AnyPrimePower},
    {LieFamily::E7, "E7", 7, 7, FieldConstraint::AnyPrimePower},
    {LieFamily::E8, "E8", 8, 8, FieldConstraint::AnyPrimePower},
    {LieFamily::F4, "F4", 4, 4, FieldConstraint::AnyPrimePower},
    {LieFamily::G2, "G2", 2, 2, FieldConstraint::AnyPrimePower},
    {LieFamily::D4_3, "3D4", 4, 4, FieldConstraint::AnyPrimePower},
    {LieFamily::B2_2, "2B2", 2, 2, FieldConstraint::OddPowerOf2},
    {LieFamily::F4_2, "2F4", 4, 4, FieldConstraint::OddPowerOf2},
    {LieFamily::G2_2, "2G2", 2, 2, FieldConstraint::OddPowerOf3},
}};

int resolve_rank(LieFamily family, std::optional<int> k) {
  const auto& info = family_info(family);
  if (info.fixed_rank) {
    if (k && *k != *info.fixed_rank) {
      throw std::invalid_argument(std::string(info.symbol) + " has fixed rank " +
                                  std::to_string(*info.fixed_rank));
    }
    return *info.fixed_rank;
  }
  if (!k) throw std::invalid_argument(std::string(info.symbol) + "_k needs a rank");
  if (*k < info.min_rank) {
    throw std::invalid_argument(std::string(info.symbol) + "_k requires k >= " +
                                std::to_string(info.min_rank));
  }
  return *k;
}

// Saturating integer power.
std::uint64_t ipow_sat(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

std::uint64_t scaled_floor(long double c, long double v) {
  const long double p = std::floor(c * v);
  if (p >= 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
  return p <= 0 ? 0 : static_cast<std::uint64_t>(p);
}

std::uint64_t lie_bound(LieFamily family, int k, std::uint64_t q, double c) {
  if (family == LieFamily::B2_2) {
    return scaled_floor(c, std::sqrt(static_cast<long double>(q)));
  }
  const std::uint64_t qa = ipow_sat(q, a_value(family, k).low);
  if (qa == std::numeric_limits<std::uint64_t>::max()) return qa;
  return scaled_floor(c, static_cast<long double>(qa));
}

}  // namespace

const FamilyInfo& family_info(LieFamily f) { return kFamilies[static_cast<std::size_t>(f)]; }

std::string_view family_symbol(LieFamily f) { return family_info(f).symbol; }

std::optional<LieFamily> parse_family(std::string_view symbol) {
  std::string s(symbol);
  // Superscript two and three (UTF-8) in front of the letter.
  if (s.rfind("²", 0) == 0) s = "2" + s.substr(2);
  if (s.rfind("³", 0) == 0) s = "3" + s.substr(2);
  std::string compact;
  for (char c : s) {
    if (c != '_' && c != ' ') compact += c;
  }
  for (const auto& info : kFamilies) {
    if (compact == info.symbol) return info.family;
  }
  return std::nullopt;
}

AValue a_value(LieFamily family, std::optional<int> k_in) {
  const int k = resolve_rank(family, k_in);
  switch (family) {
    case LieFamily::A:
    case LieFamily::A2:
      return {(k + 1) / 2, (k + 1) / 2};
    case LieFamily::B:
      return {2 * (k / 2), k};
    case LieFamily::C:
      return {k, k};
    case LieFamily::D:
      return {k - 2, k - 1};
    case LieFamily::D2:
      return {2 * (k / 2), 2 * (k / 2)};
    case LieFamily::E6:
    case LieFamily::E6_2:
    case LieFamily::F4:
      return {4, 4};
    case LieFamily::E7:
    case LieFamily::E8:
      return {7, 7};
    case LieFamily::G2:
    case LieFamily::B2_2:
    case LieFamily::G2_2:
      return {1, 1};
    case LieFamily::D4_3:
      return {3, 3};
    case LieFamily::F4_2:
      return {2, 2};
  }
  throw std::logic_error("unknown family");
}

int b_value(LieFamily family, std::optional<int> k_in) {
  const int k = resolve_rank(family, k_in);
  switch (family) {
    case LieFamily::A:
    case LieFamily::A2:
      return k * k + 2 * k;
    case LieFamily::B:
    case LieFamily::C:
      return 2 * k * k + k;
    case LieFamily::D:
    case LieFamily::D2:
      return 2 * k * k - k;
    case LieFamily::B2_2: return 5;
    case LieFamily::D4_3: return 28;
    case LieFamily::F4: return 52;
    case LieFamily::F4_2: return 26;
    case LieFamily::G2: return 14;
    case LieFamily::G2_2: return 7;
    case LieFamily::E6:
    case LieFamily::E6_2: return 78;
    case LieFamily::E7: return 133;
    case LieFamily::E8: return 248;
  }
  throw std::logic_error("unknown family");
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(q, 1);
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(p, e);
}

bool satisfies_field_constraint(LieFamily family, std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp) return false;
  switch (family_info(family).field) {
    case FieldConstraint::AnyPrimePower:
      return true;
    case FieldConstraint::OddPowerOf2:
      return pp->first == 2 && pp->second % 2 == 1;
    case FieldConstraint::OddPowerOf3:
      return pp->first == 3 && pp->second % 2 == 1;
  }
  return false;
}

bool is_simple_lie(LieFamily family, int k, std::uint64_t q) {
  if (!satisfies_field_constraint(family, q)) return false;
  const auto& info = family_info(family);
  if (info.fixed_rank ? k != *info.fixed_rank : k < info.min_rank) return false;
  switch (family) {
    case LieFamily::A: return !(k == 1 && q <= 3);
    case LieFamily::A2: return !(k == 2 && q == 2);
    case LieFamily::B: return !(k == 2 && q == 2);
    case LieFamily::G2: return q != 2;
    case LieFamily::B2_2: return q != 2;
    case LieFamily::G2_2: return q != 3;
    case LieFamily::F4_2: return q != 2;
    default: return true;
  }
}

SimpleGroupId SimpleGroupId::alternating(int m) {
  if (m < 5) throw std::invalid_argument("Alt(m) is simple and nonabelian only for m >= 5");
  return SimpleGroupId(AlternatingId{m});
}

SimpleGroupId SimpleGroupId::lie(LieFamily family, std::optional<int> k, std::uint64_t q) {
  const int rank = resolve_rank(family, k);
  if (!is_simple_lie(family, rank, q)) {
    throw std::invalid_argument(std::string(family_symbol(family)) + "_" + std::to_string(rank) +
                                "(" + std::to_string(q) + ") is not an admissible simple group");
  }
  return SimpleGroupId(LieId{family, rank, q});
}

SimpleGroupId SimpleGroupId::sporadic(int index) {
  if (index < 1 || index > 26) throw std::invalid_argument("sporadic index must be in 1..26");
  return SimpleGroupId(SporadicId{index});
}

std::string SimpleGroupId::to_string() const {
  struct Visitor {
    std::string operator()(const AlternatingId& a) const { return "Alt(" + std::to_string(a.m) + ")"; }
    std::string operator()(const LieId& l) const {
      const auto& info = family_info(l.family);
      std::string s(info.symbol);
      if (!info.fixed_rank) s += "_" + std::to_string(l.k);
      return s + "(" + std::to_string(l.q) + ")";
    }
    std::string operator()(const SporadicId& s) const {
      return "Sporadic#" + std::to_string(s.index);
    }
  };
  return std::visit(Visitor{}, v_);
}

TowerNumber default_sporadic_max() { return exp_t(TowerNumber::from_real(Real(100))); }

TowerNumber order_upper_bound(const SimpleGroupId& id, const TowerNumber& sporadic_max) {
  struct Visitor {
    const TowerNumber& sporadic_max;
    TowerNumber operator()(const AlternatingId& a) const {
      Real log_order = -log(Real(2));
      for (int i = 2; i <= a.m; ++i) log_order += log(Real(i));
      if (a.m <= 1000) {
        Real v = 1;
        for (int i = 3; i <= a.m; ++i) v *= i;
        return TowerNumber::from_real(v);
      }
      return exp_t(TowerNumber::from_real(log_order));
    }
    TowerNumber operator()(const LieId& l) const {
      return exp_t(TowerNumber::from_real(Real(b_value(l.family, l.k)) * log(Real(l.q))))
          .with_inexact(false);
    }
    TowerNumber operator()(const SporadicId&) const { return sporadic_max; }
  };
  // q^b is an integer; evaluate it exactly when it fits comfortably.
  if (const auto* l = std::get_if<LieId>(&id.variant())) {
    const Real v = pow(Real(l->q), b_value(l->family, l->k));
    if (v < Real("1e1000")) return TowerNumber::from_real(v);
  }
  return std::visit(Visitor{sporadic_max}, id.variant());
}

std::optional<std::uint64_t> exact_order(const SimpleGroupId& id) {
  if (const auto* a = std::get_if<AlternatingId>(&id.variant())) {
    if (a->m > 20) return std::nullopt;
    std::uint64_t v = 1;
    for (int i = 3; i <= a->m; ++i) v *= static_cast<std::uint64_t>(i);
    return v;
  }
  if (const auto* l = std::get_if<LieId>(&id.variant())) {
    if (l->family != LieFamily::A || l->k != 1) return std::nullopt;
    const std::uint64_t q = l->q;
    if (q >= (1ULL << 21)) return std::nullopt;
    return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
  }
  return std::nullopt;
}

std::uint64_t law_length_lower_bound(const SimpleGroupId& id, double c_lower) {
  if (!(c_lower > 0)) throw std::invalid_argument("c_lower must be positive");
  if (const auto* a = std::get_if<AlternatingId>(&id.variant())) {
    return scaled_floor(c_lower, static_cast<long double>(a->m));
  }
  if (const auto* l = std::get_if<LieId>(&id.variant())) return lie_bound(l->family, l->k, l->q, c_lower);
  return 1;
}

std::vector<SimpleGroupId> candidates_for_law_length(std::uint64_t length, double c_lower, int d) {
  if (length == 0) throw std::invalid_argument("law length must be positive");
  if (!(c_lower > 0)) throw std::invalid_argument("c_lower must be positive");
  if (d < 1) throw std::invalid_argument("rank d must be positive");
  std::vector<SimpleGroupId> out;
  for (int m = 5; scaled_floor(c_lower, m) <= length; ++m) out.push_back(SimpleGroupId::alternating(m));

  for (LieFamily family : kAllFamilies) {
    const auto& info = family_info(family);
    const int k_first = info.fixed_rank.value_or(info.min_rank);
    const int k_last = info.fixed_rank.value_or(std::numeric_limits<int>::max());
    for (int k = k_first; k <= k_last; ++k) {
      // a(X) is nondecreasing in k, so q = 2 failing ends the rank scan.
      if (lie_bound(family, k, 2, c_lower) > length) break;
      for (std::uint64_t q = 2;; ++q) {
        if (!prime_power(q)) continue;
        if (lie_bound(family, k, q, c_lower) > length) break;
        if (is_simple_lie(family, k, q)) out.push_back(SimpleGroupId::lie(family, k, q));
      }
    }
  }
  for (int i = 1; i <= 26; ++i) out.push_back(SimpleGroupId::sporadic(i));
  return out;
}

std::optional<std::string> recognize_simple_order(std::uint64_t order) {
  if (order == 20160) return "Alt(8) or A_2(4)";
  std::uint64_t v = 1;
  for (int m = 3; m <= 20; ++m) {
    v *= static_cast<std::uint64_t>(m);
    if (m >= 5 && v == order) return "Alt(" + std::to_string(m) + ")";
  }
  for (std::uint64_t q = 4; q < (1U << 16); ++q) {
    if (!prime_power(q)) continue;
    const std::uint64_t o = q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1);
    if (o == order) return "PSL(2," + std::to_string(q) + ")";
    if (o > order) break;
  }
  return std::nullopt;
}

namespace {

nlohmann::ordered_json row(std::string family, std::optional<int> k, std::optional<std::uint64_t> q,
                           std::optional<AValue> a, std::optional<int> b,
                           std::optional<std::uint64_t> bound) {
  nlohmann::ordered_json j;
  j["family"] = std::move(family);
  j["k"] = k ? nlohmann::ordered_json(*k) : nlohmann::ordered_json(nullptr);
  j["q"] = q ? nlohmann::ordered_json(*q) : nlohmann::ordered_json(nullptr);
  j["a_low"] = a ? nlohmann::ordered_json(a->low) : nlohmann::ordered_json(nullptr);
  j["a_high"] = a ? nlohmann::ordered_json(a->high) : nlohmann::ordered_json(nullptr);
  j["b"] = b ? nlohmann::ordered_json(*b) : nlohmann::ordered_json(nullptr);
  j["bound"] = bound ? nlohmann::ordered_json(*bound) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace

nlohmann::ordered_json catalog_tables_json(int max_rank) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (LieFamily family : kAllFamilies) {
    const auto& info = family_info(family);
    for (int k = 1; k <= max_rank; ++k) {
      if (info.fixed_rank ? k != *info.fixed_rank : k < info.min_rank) continue;
      rows.push_back(row(std::string(info.symbol), k, std::nullopt, a_value(family, k),
                         b_value(family, k), std::nullopt));
    }
  }
  return rows;
}

nlohmann::ordered_json candidates_json(const std::vector<SimpleGroupId>& ids, double c_lower) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& id : ids) {
    const std::uint64_t bound = law_length_lower_bound(id, c_lower);
    if (const auto* a = std::get_if<AlternatingId>(&id.variant())) {
      rows.push_back(row("Alt", a->m, std::nullopt, std::nullopt, std::nullopt, bound));
    } else if (const auto* l = std::get_if<LieId>(&id.variant())) {
      rows.push_back(row(std::string(family_symbol(l->family)), l->k, l->q, a_value(l->family, l->k),
                         b_value(l->family, l->k), bound));
    } else {
      const auto& s = std::get<SporadicId>(id.variant());
      rows.push_back(row("Sporadic", s.index, std::nullopt, std::nullopt, std::nullopt, bound));
    }
  }
  return rows;
}

}  // namespace burnside
