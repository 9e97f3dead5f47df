#include "burnside/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "burnside/errors.hpp"

namespace burnside {

namespace detail {

struct Level {
  std::uint16_t base = 0;
  std::vector<Permutation> gens;      // generate the stabilizer of the earlier base points
  std::vector<int> rep_index;         // point -> index into orbit/reps, -1 outside the orbit
  std::vector<std::uint16_t> orbit;
  std::vector<Permutation> reps;      // reps[i] maps base to orbit[i]
  std::vector<Permutation> rep_invs;
};

struct ChainCache {
  std::once_flag once;
  std::vector<Level> levels;
};

}  // namespace detail

namespace {

using detail::Level;

void rebuild_orbit(Level& lv, std::size_t degree) {
  lv.rep_index.assign(degree, -1);
  lv.orbit.assign(1, lv.base);
  lv.reps.assign(1, Permutation::identity(degree));
  lv.rep_invs.assign(1, Permutation::identity(degree));
  lv.rep_index[lv.base] = 0;
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    const std::uint16_t p = lv.orbit[i];
    for (const auto& s : lv.gens) {
      const std::uint16_t q = s[p];
      if (lv.rep_index[q] >= 0) continue;
      lv.rep_index[q] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(q);
      lv.reps.push_back(lv.reps[i] * s);
      lv.rep_invs.push_back(lv.reps.back().inverse());
    }
  }
}

// Sift h through levels [start, levels.size()). Returns the residue and the
// level where sifting stopped (levels.size() if it went through).
std::pair<Permutation, std::size_t> strip(const std::vector<Level>& levels, Permutation h,
                                          std::size_t start) {
  for (std::size_t l = start; l < levels.size(); ++l) {
    const int idx = levels[l].rep_index[h[levels[l].base]];
    if (idx < 0) return {std::move(h), l};
    h = h * levels[l].rep_invs[static_cast<std::size_t>(idx)];
  }
  return {std::move(h), levels.size()};
}

std::uint16_t first_moved(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g[i] != i) return static_cast<std::uint16_t>(i);
  }
  throw std::logic_error("first_moved on identity");
}

bool fixes(const Permutation& g, const std::vector<std::uint16_t>& pts, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (g[pts[i]] != pts[i]) return false;
  }
  return true;
}

void schreier_sims(std::vector<Level>& levels, std::size_t degree,
                   const std::vector<Permutation>& gens, const std::vector<int>& prefix) {
  std::vector<std::uint16_t> base;
  for (int p : prefix) {
    const auto u = static_cast<std::uint16_t>(p);
    if (std::find(base.begin(), base.end(), u) == base.end()) base.push_back(u);
  }
  for (const auto& g : gens) {
    if (fixes(g, base, base.size())) base.push_back(first_moved(g));
  }
  levels.assign(base.size(), Level{});
  for (std::size_t i = 0; i < base.size(); ++i) {
    levels[i].base = base[i];
    for (const auto& g : gens) {
      if (fixes(g, base, i)) levels[i].gens.push_back(g);
    }
    rebuild_orbit(levels[i], degree);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    bool jumped = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels[li].orbit.size() && !jumped; ++oi) {
      for (std::size_t si = 0; si < levels[li].gens.size(); ++si) {
        const Level& lv = levels[li];
        const Permutation us = lv.reps[oi] * lv.gens[si];
        const int qi = lv.rep_index[us[lv.base]];
        if (us == lv.reps[static_cast<std::size_t>(qi)]) continue;
        const Permutation h = us * lv.rep_invs[static_cast<std::size_t>(qi)];
        auto [res, j] = strip(levels, h, li + 1);
        if (j == levels.size() && res.is_identity()) continue;
        if (j == levels.size()) {
          Level fresh;
          fresh.base = first_moved(res);
          levels.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels[l].gens.push_back(res);
          rebuild_orbit(levels[l], degree);
        }
        i = static_cast<std::ptrdiff_t>(j);
        jumped = true;
        break;
      }
    }
    if (!jumped) --i;
  }
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<int> base_prefix)
    : degree_(degree), base_prefix_(std::move(base_prefix)),
      cache_(std::make_shared<detail::ChainCache>()) {
  if (degree == 0) throw std::invalid_argument("permutation group of degree 0");
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (int p : base_prefix_) {
    if (p < 0 || static_cast<std::size_t>(p) >= degree) {
      throw std::invalid_argument("base point out of range");
    }
  }
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

const detail::ChainCache& PermGroup::chain() const {
  std::call_once(cache_->once,
                 [this] { schreier_sims(cache_->levels, degree_, generators_, base_prefix_); });
  return *cache_;
}

bool PermGroup::contains(const Element& g) const {
  if (g.degree() != degree_) return false;
  const auto& levels = chain().levels;
  auto [res, j] = strip(levels, g, 0);
  return j == levels.size() && res.is_identity();
}

std::uint64_t PermGroup::order() const {
  std::uint64_t o = 1;
  for (const auto& lv : chain().levels) {
    if (__builtin_mul_overflow(o, static_cast<std::uint64_t>(lv.orbit.size()), &o)) {
      throw CapExceeded("group order exceeds 64 bits");
    }
  }
  return o;
}

boost::multiprecision::cpp_int PermGroup::order_big() const {
  boost::multiprecision::cpp_int o = 1;
  for (const auto& lv : chain().levels) o *= lv.orbit.size();
  return o;
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& lv : chain().levels) b.push_back(lv.base);
  return b;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> t;
  for (const auto& lv : chain().levels) t.push_back(lv.orbit.size());
  return t;
}

std::vector<Permutation> PermGroup::stabilizer_generators(std::size_t level) const {
  const auto& levels = chain().levels;
  if (level >= levels.size()) return {};
  return levels[level].gens;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  const auto& levels = chain().levels;
  boost::multiprecision::cpp_int total = order_big();
  if (total > cap) throw CapExceeded("group order exceeds element enumeration cap " + std::to_string(cap));
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // g = u_{L-1} ... u_1 u_0, built from the deepest level up.
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * levels[l].reps.size());
    for (const auto& g : out) {
      for (const auto& u : levels[l].reps) next.push_back(g * u);
    }
    out = std::move(next);
  }
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  const auto& levels = chain().levels;
  Permutation g = Permutation::identity(degree_);
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels[l].reps.size() - 1);
    g = g * levels[l].reps[pick(rng)];
  }
  return g;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& g) { return other.contains(g); });
}

bool PermGroup::is_normal_in(const PermGroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (const auto& x : generators_) {
    for (const auto& g : other.generators()) {
      if (!contains(g.inverse() * x * g)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < degree_; ++i) {
      const int a = find(static_cast<int>(i));
      const int b = find(g[i]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(degree_, -1);
  for (std::size_t i = 0; i < degree_; ++i) {
    const int r = find(static_cast<int>(i));
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(static_cast<int>(i));
  }
  return out;
}

PermGroup PermGroup::restricted(std::span<const int> points) const {
  std::vector<int> pos(degree_, -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int p = points[i];
    if (p < 0 || static_cast<std::size_t>(p) >= degree_ || pos[static_cast<std::size_t>(p)] >= 0) {
      throw std::invalid_argument("restricted: bad point list");
    }
    pos[static_cast<std::size_t>(p)] = static_cast<int>(i);
  }
  std::vector<Permutation> gens;
  for (const auto& g : generators_) {
    std::vector<std::uint16_t> im(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int q = pos[g[static_cast<std::size_t>(points[i])]];
      if (q < 0) throw VerificationError("restricted: point set is not invariant");
      im[i] = static_cast<std::uint16_t>(q);
    }
    gens.emplace_back(std::move(im));
  }
  return PermGroup(points.size(), std::move(gens));
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s) {
  std::vector<Permutation> gens;
  for (const auto& x : s) {
    if (!x.is_identity()) gens.push_back(x);
  }
  PermGroup n(g.degree(), gens);
  std::vector<Permutation> queue = gens;
  while (!queue.empty()) {
    const Permutation x = queue.back();
    queue.pop_back();
    for (const auto& y : g.generators()) {
      Permutation c = y.inverse() * x * y;
      if (n.contains(c)) continue;
      gens.push_back(c);
      queue.push_back(std::move(c));
      n = PermGroup(g.degree(), gens);
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
    }
  }
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order_big() == series.back().order_big()) break;
    const bool trivial = next.is_trivial();
    series.push_back(std::move(next));
    if (trivial) break;
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().order_big() == 1; }

bool is_perfect(const PermGroup& g) { return derived_subgroup(g).order_big() == g.order_big(); }

namespace {

std::vector<int> block_of_point(std::size_t degree, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(degree, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw VerificationError("empty block");
    for (int p : blocks[b]) {
      if (p < 0 || static_cast<std::size_t>(p) >= degree) throw VerificationError("block point out of range");
      if (owner[static_cast<std::size_t>(p)] >= 0) throw VerificationError("blocks are not disjoint");
      owner[static_cast<std::size_t>(p)] = static_cast<int>(b);
    }
  }
  return owner;
}

std::vector<std::uint16_t> block_images(const Permutation& g, const std::vector<std::vector<int>>& blocks,
                                        const std::vector<int>& owner) {
  std::vector<std::uint16_t> im(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const int target = owner[g[static_cast<std::size_t>(blocks[b].front())]];
    if (target < 0) throw VerificationError("block system is not invariant");
    for (int p : blocks[b]) {
      if (owner[g[static_cast<std::size_t>(p)]] != target) {
        throw VerificationError("block " + std::to_string(b + 1) + " is split by a generator");
      }
    }
    if (blocks[static_cast<std::size_t>(target)].size() != blocks[b].size()) {
      throw VerificationError("blocks of different sizes are exchanged");
    }
    im[b] = static_cast<std::uint16_t>(target);
  }
  return im;
}

}  // namespace

PermGroup block_image(const PermGroup& h, const std::vector<std::vector<int>>& blocks) {
  const auto owner = block_of_point(h.degree(), blocks);
  std::vector<Permutation> gens;
  for (const auto& g : h.generators()) gens.emplace_back(block_images(g, blocks, owner));
  return PermGroup(blocks.size(), std::move(gens));
}

BlockAction block_action(const PermGroup& g, const std::vector<std::vector<int>>& blocks) {
  const std::size_t n = g.degree();
  const std::size_t m = blocks.size();
  const auto owner = block_of_point(n, blocks);
  // Let G act on points and blocks at once; the pointwise stabilizer of the
  // block points is the kernel.
  std::vector<Permutation> wide;
  std::vector<Permutation> top;
  for (const auto& x : g.generators()) {
    const auto im = block_images(x, blocks, owner);
    std::vector<std::uint16_t> w(x.images());
    for (std::size_t b = 0; b < m; ++b) w.push_back(static_cast<std::uint16_t>(n + im[b]));
    wide.emplace_back(std::move(w));
    top.emplace_back(im);
  }
  std::vector<int> prefix(m);
  std::iota(prefix.begin(), prefix.end(), static_cast<int>(n));
  PermGroup big(n + m, wide, prefix);
  std::vector<Permutation> kernel_gens;
  for (const auto& k : big.stabilizer_generators(m)) {
    std::vector<std::uint16_t> im(k.images().begin(), k.images().begin() + static_cast<std::ptrdiff_t>(n));
    kernel_gens.emplace_back(std::move(im));
  }
  return BlockAction{PermGroup(m, std::move(top)), PermGroup(n, std::move(kernel_gens))};
}

}  // namespace burnside
