#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burnside/cayley_group.hpp"

namespace burnside {

/// A subgroup of an ambient CayleyGroup, stored as a sorted element list,
/// a membership bitmap and a generating set.
struct Subgroup {
  std::vector<CayleyGroup::Element> elements;
  std::vector<bool> member;
  std::vector<CayleyGroup::Element> generators;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(CayleyGroup::Element x) const { return member[x]; }
  bool contains(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup trivial_subgroup(const CayleyGroup& g);
Subgroup whole_group(const CayleyGroup& g);
Subgroup closure(const CayleyGroup& g, const std::vector<CayleyGroup::Element>& gens);
Subgroup join(const CayleyGroup& g, const Subgroup& a, const Subgroup& b);
/// Smallest subgroup of `within` normal in `within` that contains `gens`.
Subgroup normal_closure(const CayleyGroup& g, const Subgroup& within,
                        const std::vector<CayleyGroup::Element>& gens);
bool is_normal(const CayleyGroup& g, const Subgroup& n, const Subgroup& within);

/// Classes of `h` under conjugation by `h`; the first element of each is
/// its smallest.
std::vector<std::vector<CayleyGroup::Element>> conjugacy_classes(const CayleyGroup& g, const Subgroup& h);

/// Whether N/M is abelian (M normal in N).
bool is_abelian_over(const CayleyGroup& g, const Subgroup& n, const Subgroup& m);
/// [H, H].
Subgroup derived_subgroup(const CayleyGroup& g, const Subgroup& h);
std::vector<Subgroup> derived_series(const CayleyGroup& g, const Subgroup& h);
/// Whether H/M is solvable (M normal in H).
bool is_solvable_over(const CayleyGroup& g, const Subgroup& h, const Subgroup& m);
bool is_solvable(const CayleyGroup& g);

/// Subgroups N with M < N, N normal in H, and N/M minimal normal in H/M.
/// Requires M normal in H.
std::vector<Subgroup> minimal_normal_over(const CayleyGroup& g, const Subgroup& h, const Subgroup& m);
std::vector<Subgroup> minimal_normal_subgroups(const CayleyGroup& g);

/// Whether N/M is a nontrivial direct product of nonabelian simple groups.
bool is_semisimple_over(const CayleyGroup& g, const Subgroup& n, const Subgroup& m);

/// Largest normal subgroup R >= M of G with R/M solvable.
Subgroup solvable_radical_over(const CayleyGroup& g, const Subgroup& m);
/// Join of the minimal normal subgroups of G over R.
Subgroup layer_over(const CayleyGroup& g, const Subgroup& r);

/// Every normal subgroup of G. Throws CapExceeded above `limit` elements.
std::vector<Subgroup> normal_subgroups(const CayleyGroup& g, std::uint64_t limit = 5000);

struct CompositionFactor {
  bool abelian = false;
  std::uint64_t order = 1;              // p for a cyclic factor
  std::optional<std::string> name;      // catalog name of a nonabelian factor, if recognized
  std::string to_string() const;
};

struct CompositionReport {
  std::uint64_t group_order = 1;
  std::vector<CompositionFactor> factors;
  std::vector<Subgroup> series;  // trivial, ..., whole
  bool is_anabelian() const;
};

CompositionReport composition_report(const CayleyGroup& g);
bool is_anabelian(const CayleyGroup& g);

enum class SeriesTag { Solvable, Semisimple };

struct LambdaStep {
  Subgroup subgroup;  // top of the factor
  SeriesTag tag;
};

struct LambdaReport {
  std::uint64_t lambda = 0;
  std::vector<LambdaStep> series;  // starts above the trivial subgroup, ends at G
  bool certified = false;          // minimality checked over all normal series
  bool upper_bound = false;        // set when not certified
  std::vector<std::string> notes;
};

/// Radical-layer recursion. For |G| <= certify_limit every normal series is
/// examined and the minimum must agree with the recursion (a disagreement
/// throws VerificationError); above it the result is flagged upper_bound.
LambdaReport nonsolvable_length(const CayleyGroup& g, std::uint64_t certify_limit = 5000);

}  // namespace burnside
