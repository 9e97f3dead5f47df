#include "burnside/group_io.hpp"

#include <fstream>
#include <sstream>

#include "burnside/errors.hpp"

namespace burnside {

std::variant<PermGroup, CayleyGroup> group_from_json(const nlohmann::json& j, std::uint64_t cayley_cap) {
  if (!j.is_object()) throw ParseError(0, "group file must hold a JSON object");
  try {
    if (j.contains("table")) {
      const auto table = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
      if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
        throw ParseError(0, "'order' does not match the table size");
      }
      return CayleyGroup::from_table(table, cayley_cap);
    }
    if (j.contains("generators")) {
      const auto gens_raw = j.at("generators").get<std::vector<std::vector<long long>>>();
      std::size_t degree = j.contains("degree") ? j.at("degree").get<std::size_t>()
                                                : (gens_raw.empty() ? 0 : gens_raw.front().size());
      if (degree == 0) throw ParseError(0, "permutation group needs a positive degree");
      std::vector<Permutation> gens;
      for (const auto& g : gens_raw) {
        if (g.size() != degree) throw ParseError(0, "generator length differs from degree");
        gens.push_back(Permutation::from_one_based(g));
      }
      return PermGroup(degree, std::move(gens));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("group file: ") + e.what());
  }
  throw ParseError(0, "group file needs 'generators' or 'table'");
}

std::variant<PermGroup, CayleyGroup> load_group_file(const std::string& path, std::uint64_t cayley_cap) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, path + ": " + e.what());
  }
  return group_from_json(j, cayley_cap);
}

nlohmann::json perm_group_to_json(const PermGroup& g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_one_based());
  return {{"degree", g.degree()}, {"generators", gens}};
}

nlohmann::json cayley_group_to_json(const CayleyGroup& g) {
  return {{"order", g.order()}, {"table", g.table()}};
}

GroupHandle::GroupHandle(PermGroup g, std::string description)
    : description_(std::move(description)), perm_(std::move(g)) {}

GroupHandle::GroupHandle(CayleyGroup g, std::string description)
    : description_(std::move(description)), cayley_(std::move(g)) {}

std::uint64_t GroupHandle::order() const { return perm_ ? perm_->order() : cayley_->order(); }

const CayleyGroup& GroupHandle::cayley(std::uint64_t cap) const {
  if (!cayley_) cayley_ = CayleyGroup::from_perm_group(*perm_, cap);
  if (cayley_->order() > cap) {
    throw CapExceeded("group of order " + std::to_string(cayley_->order()) + " exceeds CAYLEY_CAP");
  }
  return *cayley_;
}

GroupHandle resolve_group(std::string_view text, const GroupLimits& limits, std::uint64_t cayley_cap) {
  const std::string s(text);
  const bool is_path = s.size() > 5 && s.compare(s.size() - 5, 5, ".json") == 0 && s.find('(') == std::string::npos;
  if (is_path) {
    auto loaded = load_group_file(s, cayley_cap);
    if (auto* p = std::get_if<PermGroup>(&loaded)) return GroupHandle(std::move(*p), s);
    return GroupHandle(std::get<CayleyGroup>(std::move(loaded)), s);
  }
  const GroupDescriptor d = parse_group_descriptor(text);
  if (d.name == "from_file" || d.name == "file") {
    auto loaded = load_group_file(d.path, cayley_cap);
    if (auto* p = std::get_if<PermGroup>(&loaded)) return GroupHandle(std::move(*p), d.to_string());
    return GroupHandle(std::get<CayleyGroup>(std::move(loaded)), d.to_string());
  }
  return GroupHandle(make_group(d, limits), d.to_string());
}

}  // namespace burnside
