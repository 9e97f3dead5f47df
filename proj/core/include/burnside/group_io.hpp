#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "burnside/cayley_group.hpp"
#include "burnside/make_group.hpp"
#include "burnside/perm_group.hpp"

namespace burnside {

/// Permutation group: {"degree": n, "generators": [[images 1..n], ...]}.
/// Cayley group: {"order": n, "table": [[0-based entries], ...]}.
/// Throws ParseError for malformed JSON or missing fields and
/// std::invalid_argument for data that is not a group.
std::variant<PermGroup, CayleyGroup> group_from_json(const nlohmann::json& j,
                                                     std::uint64_t cayley_cap = CayleyGroup::kDefaultCap);
std::variant<PermGroup, CayleyGroup> load_group_file(const std::string& path,
                                                     std::uint64_t cayley_cap = CayleyGroup::kDefaultCap);

nlohmann::json perm_group_to_json(const PermGroup& g);
nlohmann::json cayley_group_to_json(const CayleyGroup& g);

/// A group from the command line: either substrate, with the Cayley form
/// built on demand.
class GroupHandle {
 public:
  explicit GroupHandle(PermGroup g, std::string description);
  explicit GroupHandle(CayleyGroup g, std::string description);

  const std::string& description() const noexcept { return description_; }
  const std::optional<PermGroup>& perm() const noexcept { return perm_; }
  std::uint64_t order() const;
  /// Throws CapExceeded if the order is above `cap`.
  const CayleyGroup& cayley(std::uint64_t cap = CayleyGroup::kDefaultCap) const;

 private:
  std::string description_;
  std::optional<PermGroup> perm_;
  mutable std::optional<CayleyGroup> cayley_;
};

/// A descriptor (see make_group.hpp) or a path ending in ".json".
GroupHandle resolve_group(std::string_view text, const GroupLimits& limits = {},
                          std::uint64_t cayley_cap = CayleyGroup::kDefaultCap);

}  // namespace burnside
