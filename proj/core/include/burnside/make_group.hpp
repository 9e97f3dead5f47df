#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "burnside/perm_group.hpp"

namespace burnside {

struct GroupLimits {
  int max_alt_degree = 16;
  std::uint64_t max_q = 32;
  std::size_t max_degree = 1024;
};

PermGroup alternating_group(int m);
PermGroup symmetric_group(int m);
PermGroup cyclic_group(int n);
/// Symmetries of the n-gon, order 2n, on n points (n >= 3).
PermGroup dihedral_group(int n);
/// PSL(2,q) acting on the q+1 points of the projective line; points
/// 0..q-1 are the field elements and q is infinity.
PermGroup psl2_group(std::uint64_t q);
/// Acting on the disjoint union of the factors' point sets.
PermGroup direct_product(const std::vector<PermGroup>& factors);
/// G wr H in its imprimitive action on deg(G) * deg(H) points; block i
/// is {i*deg(G), ..., (i+1)*deg(G) - 1}.
PermGroup wreath_product(const PermGroup& g, const PermGroup& h);

/// A parsed group descriptor. Forms (names are case-insensitive):
///   alternating(m) alt(m) alt5     symmetric(m) sym(m) sym4
///   cyclic(n) c(n) c12            dihedral(n)
///   psl2(q)                       direct_product(G, H, ...)
///   wreath(G, H)                  from_file(path)
struct GroupDescriptor {
  std::string name;
  std::vector<std::uint64_t> numbers;
  std::vector<GroupDescriptor> groups;
  std::string path;

  std::string to_string() const;
};

/// Throws ParseError.
GroupDescriptor parse_group_descriptor(std::string_view text);

/// Builds a permutation group. Cayley-table files are rejected here; see
/// resolve_group in group_io.hpp. Throws std::invalid_argument for
/// parameters outside `limits`, ParseError for malformed text or files.
PermGroup make_group(const GroupDescriptor& d, const GroupLimits& limits = {});
PermGroup make_group(std::string_view text, const GroupLimits& limits = {});

}  // namespace burnside
