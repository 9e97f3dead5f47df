#include "burnside/laws.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "burnside/errors.hpp"
#include "burnside/structure.hpp"

namespace burnside {

namespace {

using Element = CayleyGroup::Element;

// n^r, or nullopt above `cap`.
std::optional<std::uint64_t> tuple_count(std::uint64_t n, int r, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) {
    if (__builtin_mul_overflow(total, n, &total) || total > cap) return std::nullopt;
  }
  return total;
}

// A word as a flat list of (variable, sign) letters, for fast evaluation of
// short words; long syllables fall back to repeated squaring.
struct Program {
  struct Step {
    int var;
    std::int64_t exponent;
  };
  std::vector<Step> steps;
  int rank = 1;

  explicit Program(const Word& w) : rank(w.rank()) {
    for (const auto& s : w.syllables()) steps.push_back({s.generator - 1, s.exponent});
  }

  template <class Mul, class Inv, class E>
  E run(const E* a, const E& one, Mul mul, Inv inv) const {
    E result = one;
    for (const auto& s : steps) {
      E base = a[s.var];
      std::uint64_t e = s.exponent < 0 ? static_cast<std::uint64_t>(-s.exponent) : static_cast<std::uint64_t>(s.exponent);
      if (s.exponent < 0) base = inv(base);
      if (e <= 4) {
        for (std::uint64_t k = 0; k < e; ++k) result = mul(result, base);
        continue;
      }
      E acc = one;
      while (e > 0) {
        if (e & 1U) acc = mul(acc, base);
        e >>= 1U;
        if (e > 0) base = mul(base, base);
      }
      result = mul(result, acc);
    }
    return result;
  }
};

// First failing tuple index (lexicographic) in [lo, hi) of the first
// coordinate, or nullopt.
template <class E, class Mul, class Inv>
std::optional<std::vector<std::size_t>> scan(const Program& prog, const std::vector<E>& elems, const E& one,
                                             Mul mul, Inv inv, std::size_t lo, std::size_t hi) {
  const auto r = static_cast<std::size_t>(prog.rank);
  const std::size_t n = elems.size();
  std::vector<std::size_t> idx(r, 0);
  std::vector<E> a(r, one);
  idx[0] = lo;
  if (lo >= hi) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i) a[i] = elems[idx[i]];
  while (true) {
    if (!(prog.run(a.data(), one, mul, inv) == one)) return idx;
    std::size_t pos = r;
    while (pos-- > 0) {
      ++idx[pos];
      const std::size_t limit = pos == 0 ? hi : n;
      if (idx[pos] < limit) {
        a[pos] = elems[idx[pos]];
        break;
      }
      if (pos == 0) return std::nullopt;
      idx[pos] = 0;
      a[pos] = elems[0];
    }
  }
}

template <class E, class Mul, class Inv, class Label>
LawCheck exhaustive_check(const Word& w, const std::vector<E>& elems, const E& one, Mul mul, Inv inv,
                          Label label, unsigned threads) {
  const Program prog(w);
  const std::size_t n = elems.size();
  const unsigned parts = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::optional<std::vector<std::size_t>>> found(parts);
  auto work = [&](unsigned p) {
    const std::size_t lo = n * p / parts;
    const std::size_t hi = n * (p + 1) / parts;
    found[p] = scan(prog, elems, one, mul, inv, lo, hi);
  };
  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned p = 0; p < parts; ++p) pool.emplace_back(work, p);
    for (auto& t : pool) t.join();
  }
  LawCheck out;
  out.exhaustive = true;
  std::uint64_t total = 1;
  for (int i = 0; i < w.rank(); ++i) total *= n;
  out.tuples_checked = total;
  for (const auto& f : found) {
    if (!f) continue;
    out.verdict = LawVerdict::Fails;
    std::uint64_t index = 0;
    for (std::size_t i : *f) {
      index = index * n + i;
      out.witness.push_back(label(elems[i]));
    }
    out.tuples_checked = index + 1;
    break;
  }
  return out;
}

}  // namespace

std::string to_string(LawVerdict v) {
  switch (v) {
    case LawVerdict::Holds: return "holds";
    case LawVerdict::Fails: return "fails";
    case LawVerdict::SampledNoCounterexample: return "sampled-no-counterexample";
  }
  return "?";
}

LawCheck is_law(const Word& w, const CayleyGroup& g, const LawOptions& opt) {
  const auto mul = [&g](Element a, Element b) { return g.mul(a, b); };
  const auto inv = [&g](Element a) { return g.inv(a); };
  if (opt.exhaustive) {
    if (!tuple_count(g.order(), w.rank(), opt.exhaust_cap)) {
      throw CapExceeded("exhaustive law check needs " + std::to_string(g.order()) + "^" +
                        std::to_string(w.rank()) + " evaluations, above EXHAUST_CAP " +
                        std::to_string(opt.exhaust_cap));
    }
    std::vector<Element> elems(g.order());
    std::iota(elems.begin(), elems.end(), Element{0});
    return exhaustive_check(w, elems, g.identity(), mul, inv, [&g](Element a) { return g.label(a); },
                            opt.threads);
  }
  LawCheck out;
  out.exhaustive = false;
  out.seed = opt.seed;
  out.verdict = LawVerdict::SampledNoCounterexample;
  const Program prog(w);
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Element> pick(0, g.order() - 1);
  std::vector<Element> a(static_cast<std::size_t>(w.rank()));
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    for (auto& x : a) x = pick(rng);
    ++out.tuples_checked;
    if (prog.run(a.data(), g.identity(), mul, inv) != g.identity()) {
      out.verdict = LawVerdict::Fails;
      for (auto x : a) out.witness.push_back(g.label(x));
      break;
    }
  }
  return out;
}

LawCheck is_law(const Word& w, const PermGroup& g, const LawOptions& opt) {
  const auto mul = [](const Permutation& a, const Permutation& b) { return a * b; };
  const auto inv = [](const Permutation& a) { return a.inverse(); };
  const Permutation one = g.identity();
  if (opt.exhaustive) {
    const auto order = g.order_big();
    if (order > std::min<std::uint64_t>(opt.exhaust_cap, 10000000) ||
        !tuple_count(static_cast<std::uint64_t>(order), w.rank(), opt.exhaust_cap)) {
      throw CapExceeded("exhaustive law check over a group of order " + order.str() + " exceeds EXHAUST_CAP");
    }
    const auto elems = g.elements(10000000);
    return exhaustive_check(w, elems, one, mul, inv, [](const Permutation& p) { return p.to_cycle_string(); },
                            opt.threads);
  }
  LawCheck out;
  out.exhaustive = false;
  out.seed = opt.seed;
  out.verdict = LawVerdict::SampledNoCounterexample;
  const Program prog(w);
  std::mt19937_64 rng(opt.seed);
  std::vector<Permutation> a(static_cast<std::size_t>(w.rank()), one);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    for (auto& x : a) x = g.random_element(rng);
    ++out.tuples_checked;
    if (!(prog.run(a.data(), one, mul, inv) == one)) {
      out.verdict = LawVerdict::Fails;
      for (const auto& x : a) out.witness.push_back(x.to_cycle_string());
      break;
    }
  }
  return out;
}

std::uint64_t group_exponent(const CayleyGroup& g) {
  std::uint64_t e = 1;
  for (Element a = 0; a < g.order(); ++a) e = std::lcm(e, g.element_order(a));
  return e;
}

std::uint64_t group_exponent(const PermGroup& g, std::uint64_t enumeration_cap) {
  std::uint64_t e = 1;
  for (const auto& p : g.elements(enumeration_cap)) e = std::lcm(e, p.order());
  return e;
}

namespace {

bool generates(const CayleyGroup& g, const Element* gens, int d, std::vector<Element>& buf,
               std::vector<std::uint32_t>& stamp, std::uint32_t mark) {
  buf.clear();
  buf.push_back(g.identity());
  stamp[g.identity()] = mark;
  for (std::size_t i = 0; i < buf.size(); ++i) {
    for (int k = 0; k < d; ++k) {
      const Element y = g.mul(buf[i], gens[k]);
      if (stamp[y] != mark) {
        stamp[y] = mark;
        buf.push_back(y);
        if (buf.size() == g.order()) return true;
      }
    }
  }
  return buf.size() == g.order();
}

}  // namespace

std::uint64_t count_generating_tuples(const CayleyGroup& g, int d, std::uint64_t cap, unsigned threads) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (!tuple_count(g.order(), d, cap)) {
    throw CapExceeded("counting generating tuples needs " + std::to_string(g.order()) + "^" + std::to_string(d) +
                      " closures, above EXHAUST_CAP");
  }
  const std::uint32_t n = g.order();
  if (n == 1) return 1;
  const unsigned parts = std::max(1U, std::min(threads, n));
  std::vector<std::uint64_t> counts(parts, 0);
  auto work = [&](unsigned p) {
    const std::uint32_t lo = static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * p / parts);
    const std::uint32_t hi = static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * (p + 1) / parts);
    std::vector<Element> tuple(static_cast<std::size_t>(d), 0);
    std::vector<Element> buf;
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t mark = 0;
    tuple[0] = lo;
    if (lo >= hi) return;
    while (true) {
      if (++mark == 0) {
        std::fill(stamp.begin(), stamp.end(), 0);
        mark = 1;
      }
      if (generates(g, tuple.data(), d, buf, stamp, mark)) ++counts[p];
      std::size_t pos = static_cast<std::size_t>(d);
      bool done = false;
      while (pos-- > 0) {
        ++tuple[pos];
        if (tuple[pos] < (pos == 0 ? hi : n)) break;
        if (pos == 0) {
          done = true;
          break;
        }
        tuple[pos] = 0;
      }
      if (done) break;
    }
  };
  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned p = 0; p < parts; ++p) pool.emplace_back(work, p);
    for (auto& t : pool) t.join();
  }
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t automorphism_count(const CayleyGroup& g, std::uint64_t cap) {
  const std::uint32_t n = g.order();
  if (n == 1) return 1;
  // A generating set that is as small as possible: one element, else a
  // pair, else the greedy set.
  std::vector<Element> gens;
  {
    std::vector<Element> buf;
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t mark = 0;
    for (Element a = 0; a < n && gens.empty(); ++a) {
      if (generates(g, &a, 1, buf, stamp, ++mark)) gens = {a};
    }
    if (gens.empty() && static_cast<std::uint64_t>(n) * n <= cap) {
      for (Element a = 0; a < n && gens.empty(); ++a) {
        for (Element b = a + 1; b < n; ++b) {
          const Element pair[2] = {a, b};
          if (generates(g, pair, 2, buf, stamp, ++mark)) {
            gens = {a, b};
            break;
          }
        }
      }
    }
    if (gens.empty()) gens = g.generators();
  }
  const int r = static_cast<int>(gens.size());
  const auto candidates = tuple_count(n, r, cap);
  if (!candidates || *candidates > cap / n) {
    throw CapExceeded("automorphism search over " + std::to_string(n) + "^" + std::to_string(r) +
                      " candidate images exceeds EXHAUST_CAP");
  }
  std::vector<std::uint64_t> orders(n);
  for (Element a = 0; a < n; ++a) orders[a] = g.element_order(a);

  // Spanning tree of the Cayley graph: each element reached as parent * gen.
  std::vector<Element> order{g.identity()};
  std::vector<std::pair<Element, int>> parent(n, {0, -1});
  std::vector<bool> seen(n, false);
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int k = 0; k < r; ++k) {
      const Element y = g.mul(order[i], gens[static_cast<std::size_t>(k)]);
      if (!seen[y]) {
        seen[y] = true;
        parent[y] = {order[i], k};
        order.push_back(y);
      }
    }
  }

  std::uint64_t count = 0;
  std::vector<Element> img(static_cast<std::size_t>(r), 0);
  std::vector<Element> phi(n);
  std::vector<std::uint32_t> hit(n, 0);
  std::uint32_t mark = 0;
  while (true) {
    bool plausible = true;
    for (int k = 0; k < r && plausible; ++k) {
      plausible = orders[img[static_cast<std::size_t>(k)]] == orders[gens[static_cast<std::size_t>(k)]];
    }
    if (plausible) {
      phi[g.identity()] = g.identity();
      for (std::size_t i = 1; i < order.size(); ++i) {
        const auto [p, k] = parent[order[i]];
        phi[order[i]] = g.mul(phi[p], img[static_cast<std::size_t>(k)]);
      }
      bool ok = true;
      ++mark;
      for (Element x = 0; x < n && ok; ++x) {
        if (hit[phi[x]] == mark) ok = false;
        hit[phi[x]] = mark;
        for (int k = 0; k < r && ok; ++k) {
          ok = phi[g.mul(x, gens[static_cast<std::size_t>(k)])] == g.mul(phi[x], img[static_cast<std::size_t>(k)]);
        }
      }
      if (ok) ++count;
    }
    std::size_t pos = static_cast<std::size_t>(r);
    bool done = false;
    while (pos-- > 0) {
      if (++img[pos] < n) break;
      if (pos == 0) {
        done = true;
        break;
      }
      img[pos] = 0;
    }
    if (done) break;
  }
  return count;
}

GeneratedPower max_d_generated_power(const CayleyGroup& g, int d, std::uint64_t cap) {
  const auto mins = minimal_normal_subgroups(g);
  if (g.order() == 1 || g.is_abelian() || mins.size() != 1 || mins.front().size() != g.order()) {
    throw std::invalid_argument("max_d_generated_power needs a nonabelian simple group");
  }
  GeneratedPower out;
  out.generating_tuples = count_generating_tuples(g, d, cap);
  out.automorphisms = automorphism_count(g, cap);
  out.max_power = out.generating_tuples / out.automorphisms;
  out.crude_bound = *tuple_count(g.order(), d, std::numeric_limits<std::uint64_t>::max());
  return out;
}

std::vector<Word> canonical_cyclic_words(int length, int vars) {
  if (length < 1 || vars < 1) throw std::invalid_argument("canonical_cyclic_words: bad arguments");
  const int letters = 2 * vars;
  const auto inverse_letter = [](int a) { return a ^ 1; };
  std::vector<Word> out;
  std::vector<int> seq(static_cast<std::size_t>(length));
  const auto L = static_cast<std::size_t>(length);

  const auto canonical = [&]() {
    if (L >= 2 && seq[L - 1] == inverse_letter(seq[0])) return false;
    std::vector<int> inv(L);
    for (std::size_t i = 0; i < L; ++i) inv[i] = inverse_letter(seq[L - 1 - i]);
    for (std::size_t s = 0; s < L; ++s) {
      for (const auto* base : {&seq, &inv}) {
        for (std::size_t i = 0; i < L; ++i) {
          const int c = (*base)[(i + s) % L];
          if (c < seq[i]) return false;
          if (c > seq[i]) break;
        }
      }
    }
    return true;
  };

  const auto emit = [&]() {
    std::vector<Syllable> syl;
    for (int c : seq) syl.push_back({c / 2 + 1, (c % 2 == 0) ? 1 : -1});
    out.emplace_back(vars, std::move(syl));
  };

  // Odometer over freely reduced sequences, in lexicographic order.
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == L) {
      if (canonical()) emit();
      return;
    }
    for (int c = 0; c < letters; ++c) {
      if (pos > 0 && c == inverse_letter(seq[pos - 1])) continue;
      seq[pos] = c;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

ShortestLaw shortest_law_search(const CayleyGroup& g, std::uint64_t max_len, int vars, std::uint64_t exhaust_cap) {
  if (vars != 1 && vars != 2) throw std::invalid_argument("shortest_law_search supports 1 or 2 variables");
  if (max_len < 1) throw std::invalid_argument("max_len must be positive");
  if (!tuple_count(g.order(), vars, exhaust_cap)) {
    throw CapExceeded("law search needs " + std::to_string(g.order()) + "^" + std::to_string(vars) +
                      " evaluations per word, above EXHAUST_CAP; completed length frontier 0");
  }
  LawOptions opt;
  opt.exhaust_cap = exhaust_cap;
  ShortestLaw out;
  for (std::uint64_t len = 1; len <= max_len; ++len) {
    std::vector<Word> words;
    if (vars == 1) {
      words.emplace_back(1, std::vector<Syllable>{{1, static_cast<std::int64_t>(len)}});
    } else {
      words = canonical_cyclic_words(static_cast<int>(len), vars);
    }
    for (const auto& w : words) {
      ++out.words_tested;
      if (is_law(w, g, opt).verdict == LawVerdict::Holds) {
        out.law = w;
        out.complete_length = len - 1;
        return out;
      }
    }
    out.complete_length = len;
  }
  return out;
}

}  // namespace burnside
