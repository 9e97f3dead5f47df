#include "burnside/series.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "burnside/cayley_group.hpp"
#include "burnside/errors.hpp"
#include "burnside/structure.hpp"

namespace burnside {

namespace {

using boost::multiprecision::cpp_int;

bool cayley_semisimple(const CayleyGroup& c) {
  return is_semisimple_over(c, whole_group(c), trivial_subgroup(c));
}

// Certifies a factor realized faithfully as a permutation group.
std::optional<std::string> certify_semisimple(const PermGroup& f, std::uint64_t cap) {
  const cpp_int order = f.order_big();
  if (order == 1) return std::nullopt;
  const auto orbits = f.orbits();
  cpp_int product = 1;
  std::vector<PermGroup> parts;
  for (const auto& o : orbits) {
    if (o.size() == 1) continue;
    parts.push_back(f.restricted(o));
    product *= parts.back().order_big();
  }
  if (product == order) {
    bool ok = true;
    for (const auto& p : parts) {
      if (p.order_big() == 1) continue;
      if (p.order_big() > cap) {
        ok = false;
        break;
      }
      if (!cayley_semisimple(CayleyGroup::from_perm_group(p, cap))) return std::nullopt;
    }
    if (ok) return "direct product of its " + std::to_string(parts.size()) + " orbit actions, each semisimple";
  }
  if (order <= cap) {
    if (cayley_semisimple(CayleyGroup::from_perm_group(f, cap))) return "Cayley form, minimal normal subgroups";
    return std::nullopt;
  }
  return std::nullopt;
}

PermGroup resolve(const PermGroup& g, const KernelDescriptor& d) {
  switch (d.kind) {
    case KernelDescriptor::Kind::Trivial:
      return PermGroup::trivial(g.degree());
    case KernelDescriptor::Kind::Whole:
      return g;
    case KernelDescriptor::Kind::BlockKernel:
      return block_action(g, d.blocks).kernel;
    case KernelDescriptor::Kind::Derived:
      return derived_subgroup(g);
    case KernelDescriptor::Kind::Generated:
      return PermGroup(g.degree(), d.generators);
  }
  throw std::logic_error("unknown kernel descriptor");
}

std::vector<int> parse_points(const nlohmann::json& arr, std::size_t degree) {
  std::vector<int> pts;
  for (const auto& v : arr) {
    const long long p = v.get<long long>();
    if (p < 1 || static_cast<std::size_t>(p) > degree) throw VerificationError("block point out of range");
    pts.push_back(static_cast<int>(p - 1));
  }
  return pts;
}

}  // namespace

std::string KernelDescriptor::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Whole: return "whole";
    case Kind::Derived: return "derived";
    case Kind::BlockKernel: return "block_kernel(" + std::to_string(blocks.size()) + " blocks)";
    case Kind::Generated: return "generated(" + std::to_string(generators.size()) + " generators)";
  }
  return "?";
}

KernelDescriptor kernel_descriptor_from_json(const nlohmann::json& j, std::size_t degree) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "trivial") return KernelDescriptor::trivial();
  if (kind == "whole") return KernelDescriptor::whole();
  if (kind == "derived") return KernelDescriptor::derived();
  if (kind == "block_kernel") {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(parse_points(b, degree));
    return KernelDescriptor::block_kernel(std::move(blocks));
  }
  if (kind == "generated") {
    std::vector<Permutation> gens;
    for (const auto& g : j.at("generators")) {
      const auto im = g.get<std::vector<long long>>();
      if (im.size() != degree) throw std::invalid_argument("generator has wrong degree");
      gens.push_back(Permutation::from_one_based(im));
    }
    return KernelDescriptor::generated(std::move(gens));
  }
  throw std::invalid_argument("unknown series term kind '" + kind + "'");
}

std::vector<KernelDescriptor> series_from_json(const nlohmann::json& j, std::size_t degree) {
  const nlohmann::json& arr = j.is_object() ? j.at("series") : j;
  std::vector<KernelDescriptor> out;
  for (const auto& t : arr) out.push_back(kernel_descriptor_from_json(t, degree));
  return out;
}

SeriesVerification verify_series_lambda(const PermGroup& g, const std::vector<KernelDescriptor>& series,
                                        std::uint64_t cayley_cap) {
  if (series.size() < 2) throw VerificationError("a series needs at least the trivial group and G");
  std::vector<PermGroup> terms;
  for (const auto& d : series) terms.push_back(resolve(g, d));
  if (terms.front().order_big() != 1) throw VerificationError("series does not start at the trivial group");
  if (terms.back().order_big() != g.order_big()) throw VerificationError("series does not end at G");

  SeriesVerification out;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    const PermGroup& lo = terms[i];
    const PermGroup& hi = terms[i + 1];
    const std::string step = "step " + std::to_string(i + 1) + " (" + series[i].to_string() + " < " +
                             series[i + 1].to_string() + ")";
    if (!hi.is_normal_in(g)) throw VerificationError(step + ": upper term is not normal in G");
    if (!lo.is_subgroup_of(hi)) throw VerificationError(step + ": terms are not nested");
    const cpp_int index = hi.order_big() / lo.order_big();
    if (index <= 1) throw VerificationError(step + ": repeated term");

    SeriesFactorCheck check;
    check.from = series[i].to_string();
    check.to = series[i + 1].to_string();
    check.factor_order = index.str();

    std::optional<PermGroup> faithful;
    if (lo.is_trivial()) {
      faithful = hi;
    } else if (series[i].kind == KernelDescriptor::Kind::BlockKernel) {
      faithful = block_image(hi, series[i].blocks);
    }
    if (faithful) {
      if (is_solvable(*faithful)) {
        check.solvable = true;
        check.method = "derived series of the factor reaches 1";
      } else if (auto how = certify_semisimple(*faithful, cayley_cap)) {
        check.semisimple = true;
        check.method = *how;
      }
    } else if (hi.order_big() <= cayley_cap) {
      const CayleyGroup c = CayleyGroup::from_perm_group(hi, cayley_cap);
      std::vector<CayleyGroup::Element> lower;
      const auto elems = hi.elements(cayley_cap);
      auto sorted = elems;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (lo.contains(sorted[k])) lower.push_back(static_cast<CayleyGroup::Element>(k));
      }
      const CayleyGroup q = CayleyGroup::quotient(c, lower);
      if (is_solvable(q)) {
        check.solvable = true;
        check.method = "quotient in Cayley form is solvable";
      } else if (cayley_semisimple(q)) {
        check.semisimple = true;
        check.method = "quotient in Cayley form, minimal normal subgroups";
      }
    } else {
      throw VerificationError(step + ": factor has no faithful permutation image and exceeds CAYLEY_CAP");
    }
    if (!check.solvable && !check.semisimple) {
      throw VerificationError(step + ": factor of order " + check.factor_order +
                              " is neither solvable nor certifiably semisimple");
    }
    if (check.semisimple) ++out.lambda_upper_bound;
    out.factors.push_back(std::move(check));
  }
  return out;
}

}  // namespace burnside
