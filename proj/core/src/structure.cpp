#include "burnside/structure.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "burnside/catalog.hpp"
#include "burnside/errors.hpp"

namespace burnside {

using Element = CayleyGroup::Element;

namespace {

Subgroup empty_like(const CayleyGroup& g) {
  Subgroup s;
  s.member.assign(g.order(), false);
  s.elements.push_back(g.identity());
  s.member[g.identity()] = true;
  return s;
}

// Adds x as a generator and recloses. Leaves `elements` unsorted.
void grow(const CayleyGroup& g, Subgroup& s, Element x) {
  if (s.member[x]) return;
  s.generators.push_back(x);
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    for (Element t : s.generators) {
      const Element y = g.mul(s.elements[i], t);
      if (!s.member[y]) {
        s.member[y] = true;
        s.elements.push_back(y);
      }
    }
  }
}

void finish(Subgroup& s) { std::sort(s.elements.begin(), s.elements.end()); }

Element conj(const CayleyGroup& g, Element x, Element by) { return g.mul(g.mul(g.inv(by), x), by); }

Element commutator(const CayleyGroup& g, Element a, Element b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

// Normal closure in `within`, starting from an already closed subgroup.
void normalize_in(const CayleyGroup& g, Subgroup& s, const Subgroup& within) {
  for (std::size_t j = 0; j < s.generators.size(); ++j) {
    for (Element h : within.generators) {
      const Element c = conj(g, s.generators[j], h);
      if (!s.member[c]) grow(g, s, c);
    }
  }
}

std::vector<Element> commutators_of(const CayleyGroup& g, const std::vector<Element>& gens) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) out.push_back(commutator(g, gens[i], gens[j]));
  }
  return out;
}

}  // namespace

bool Subgroup::contains(const Subgroup& other) const {
  if (other.size() > size()) return false;
  return std::all_of(other.elements.begin(), other.elements.end(), [&](Element x) { return member[x]; });
}

Subgroup trivial_subgroup(const CayleyGroup& g) { return empty_like(g); }

Subgroup whole_group(const CayleyGroup& g) {
  Subgroup s;
  s.member.assign(g.order(), true);
  s.elements.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) s.elements[x] = x;
  s.generators = g.generators();
  return s;
}

Subgroup closure(const CayleyGroup& g, const std::vector<Element>& gens) {
  Subgroup s = empty_like(g);
  for (Element x : gens) grow(g, s, x);
  finish(s);
  return s;
}

Subgroup join(const CayleyGroup& g, const Subgroup& a, const Subgroup& b) {
  Subgroup s = a;
  for (Element x : b.generators) grow(g, s, x);
  finish(s);
  return s;
}

Subgroup normal_closure(const CayleyGroup& g, const Subgroup& within, const std::vector<Element>& gens) {
  Subgroup s = empty_like(g);
  for (Element x : gens) {
    if (!within.member[x]) throw std::invalid_argument("normal_closure: generator outside the ambient subgroup");
    grow(g, s, x);
  }
  normalize_in(g, s, within);
  finish(s);
  return s;
}

bool is_normal(const CayleyGroup& g, const Subgroup& n, const Subgroup& within) {
  if (!within.contains(n)) return false;
  for (Element x : n.generators) {
    for (Element h : within.generators) {
      if (!n.member[conj(g, x, h)]) return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> conjugacy_classes(const CayleyGroup& g, const Subgroup& h) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Element>> classes;
  for (Element x : h.elements) {
    if (seen[x]) continue;
    std::vector<Element> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Element s : h.generators) {
        const Element y = conj(g, cls[i], s);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_abelian_over(const CayleyGroup& g, const Subgroup& n, const Subgroup& m) {
  for (Element c : commutators_of(g, n.generators)) {
    if (!m.member[c]) return false;
  }
  return true;
}

Subgroup derived_subgroup(const CayleyGroup& g, const Subgroup& h) {
  return normal_closure(g, h, commutators_of(g, h.generators));
}

std::vector<Subgroup> derived_series(const CayleyGroup& g, const Subgroup& h) {
  std::vector<Subgroup> series{h};
  while (true) {
    Subgroup next = derived_subgroup(g, series.back());
    if (next.size() == series.back().size()) break;
    const bool trivial = next.size() == 1;
    series.push_back(std::move(next));
    if (trivial) break;
  }
  return series;
}

bool is_solvable_over(const CayleyGroup& g, const Subgroup& h, const Subgroup& m) {
  Subgroup d = h;
  while (true) {
    if (d.size() == m.size()) return true;
    Subgroup next = m;
    for (Element c : commutators_of(g, d.generators)) grow(g, next, c);
    normalize_in(g, next, d);
    finish(next);
    if (next.size() == d.size()) return false;
    d = std::move(next);
  }
}

bool is_solvable(const CayleyGroup& g) {
  return is_solvable_over(g, whole_group(g), trivial_subgroup(g));
}

std::vector<Subgroup> minimal_normal_over(const CayleyGroup& g, const Subgroup& h, const Subgroup& m) {
  std::vector<Subgroup> candidates;
  for (const auto& cls : conjugacy_classes(g, h)) {
    const Element x = cls.front();
    if (m.member[x]) continue;
    Subgroup s = m;
    grow(g, s, x);
    normalize_in(g, s, h);
    finish(s);
    if (std::none_of(candidates.begin(), candidates.end(), [&](const Subgroup& c) { return c == s; })) {
      candidates.push_back(std::move(s));
    }
  }
  std::vector<Subgroup> minimal;
  for (const auto& c : candidates) {
    const bool has_smaller = std::any_of(candidates.begin(), candidates.end(), [&](const Subgroup& o) {
      return o.size() < c.size() && c.contains(o);
    });
    if (!has_smaller) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements < b.elements;
  });
  return minimal;
}

std::vector<Subgroup> minimal_normal_subgroups(const CayleyGroup& g) {
  return minimal_normal_over(g, whole_group(g), trivial_subgroup(g));
}

bool is_semisimple_over(const CayleyGroup& g, const Subgroup& n, const Subgroup& m) {
  if (n.size() == m.size()) return false;
  Subgroup socle = m;
  for (const auto& k : minimal_normal_over(g, n, m)) {
    if (is_abelian_over(g, k, m)) return false;
    for (Element x : k.generators) grow(g, socle, x);
  }
  return socle.elements.size() == n.size();
}

Subgroup solvable_radical_over(const CayleyGroup& g, const Subgroup& m) {
  const Subgroup all = whole_group(g);
  Subgroup r = m;
  while (true) {
    bool grew = false;
    for (const auto& k : minimal_normal_over(g, all, r)) {
      if (!is_abelian_over(g, k, r)) continue;
      for (Element x : k.generators) grow(g, r, x);
      grew = true;
    }
    finish(r);
    if (!grew) return r;
  }
}

Subgroup layer_over(const CayleyGroup& g, const Subgroup& r) {
  Subgroup l = r;
  for (const auto& k : minimal_normal_over(g, whole_group(g), r)) {
    for (Element x : k.generators) grow(g, l, x);
  }
  finish(l);
  return l;
}

std::vector<Subgroup> normal_subgroups(const CayleyGroup& g, std::uint64_t limit) {
  if (g.order() > limit) {
    throw CapExceeded("normal subgroup enumeration limited to order " + std::to_string(limit));
  }
  const Subgroup all = whole_group(g);
  std::vector<Subgroup> found{trivial_subgroup(g)};
  std::map<std::vector<Element>, bool> known{{found.front().elements, true}};
  auto add = [&](Subgroup s) {
    if (known.emplace(s.elements, true).second) {
      found.push_back(std::move(s));
      return true;
    }
    return false;
  };
  for (const auto& cls : conjugacy_classes(g, all)) {
    if (cls.front() == g.identity()) continue;
    add(normal_closure(g, all, {cls.front()}));
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 1; j < i; ++j) add(join(g, found[i], found[j]));
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements < b.elements;
  });
  return found;
}

std::string CompositionFactor::to_string() const {
  if (abelian) return "C" + std::to_string(order);
  return name ? *name : "simple(" + std::to_string(order) + ")";
}

bool CompositionReport::is_anabelian() const {
  return std::none_of(factors.begin(), factors.end(), [](const CompositionFactor& f) { return f.abelian; });
}

CompositionReport composition_report(const CayleyGroup& g) {
  CompositionReport rep;
  rep.group_order = g.order();
  const Subgroup all = whole_group(g);
  Subgroup m = trivial_subgroup(g);
  rep.series.push_back(m);
  while (m.size() < g.order()) {
    const auto mins = minimal_normal_over(g, all, m);
    if (mins.empty()) throw std::logic_error("composition_report: no minimal normal subgroup");
    const Subgroup& n = mins.front();
    if (is_abelian_over(g, n, m)) {
      Subgroup s = m;
      while (s.size() < n.size()) {
        Element x = 0;
        for (Element y : n.elements) {
          if (!s.member[y]) {
            x = y;
            break;
          }
        }
        const std::size_t before = s.size();
        grow(g, s, x);
        finish(s);
        rep.factors.push_back({true, s.size() / before, std::nullopt});
        rep.series.push_back(s);
      }
    } else {
      Subgroup s = m;
      for (const auto& t : minimal_normal_over(g, n, m)) {
        const std::size_t before = s.size();
        for (Element x : t.generators) grow(g, s, x);
        finish(s);
        const std::uint64_t order = s.size() / before;
        rep.factors.push_back({false, order, recognize_simple_order(order)});
        rep.series.push_back(s);
      }
      if (!(s == n)) throw std::logic_error("composition_report: chief factor not covered by its simple factors");
    }
    m = n;
  }
  return rep;
}

bool is_anabelian(const CayleyGroup& g) { return composition_report(g).is_anabelian(); }

LambdaReport nonsolvable_length(const CayleyGroup& g, std::uint64_t certify_limit) {
  LambdaReport rep;
  const Subgroup all = whole_group(g);
  Subgroup m = trivial_subgroup(g);
  while (true) {
    if (is_solvable_over(g, all, m)) {
      if (m.size() < all.size()) rep.series.push_back({all, SeriesTag::Solvable});
      break;
    }
    Subgroup r = solvable_radical_over(g, m);
    if (r.size() > m.size()) rep.series.push_back({r, SeriesTag::Solvable});
    Subgroup l = layer_over(g, r);
    if (l.size() == r.size()) throw std::logic_error("nonsolvable_length: empty layer");
    rep.series.push_back({l, SeriesTag::Semisimple});
    ++rep.lambda;
    m = std::move(l);
  }
  rep.notes.push_back("canonical series: solvable radical, then the layer above it, repeated");

  if (rep.lambda <= 1 && g.order() > certify_limit) {
    // lambda = 0 exactly for solvable groups, so 0 and 1 need no search
    rep.certified = true;
    rep.notes.push_back(rep.lambda == 0 ? "solvable" : "nonsolvable with a single semisimple layer");
    return rep;
  }
  if (g.order() > certify_limit) {
    rep.upper_bound = true;
    rep.notes.push_back("order above " + std::to_string(certify_limit) +
                        ": minimality over all normal series not checked, lambda is an upper bound");
    return rep;
  }
  // Minimum number of semisimple steps over all normal series, by dynamic
  // programming over the lattice of normal subgroups.
  const auto normals = normal_subgroups(g, certify_limit);
  constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> best(normals.size(), kInf);
  best[0] = 0;
  for (std::size_t i = 1; i < normals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (best[j] == kInf || normals[j].size() >= normals[i].size() || !normals[i].contains(normals[j])) continue;
      std::uint64_t cost = kInf;
      if (is_solvable_over(g, normals[i], normals[j])) {
        cost = 0;
      } else if (is_semisimple_over(g, normals[i], normals[j])) {
        cost = 1;
      }
      if (cost != kInf) best[i] = std::min(best[i], best[j] + cost);
    }
  }
  const std::uint64_t certified = best.back();
  if (certified != rep.lambda) {
    throw VerificationError("nonsolvable_length: canonical series gives " + std::to_string(rep.lambda) +
                            " but some normal series gives " + std::to_string(certified));
  }
  rep.certified = true;
  rep.notes.push_back("minimal over all " + std::to_string(normals.size()) + " normal subgroups");
  return rep;
}

}  // namespace burnside
