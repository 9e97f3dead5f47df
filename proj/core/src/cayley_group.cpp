#include "burnside/cayley_group.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "burnside/errors.hpp"

namespace burnside {

struct CayleyGroup::Impl {
  std::uint32_t n = 1;
  Element identity = 0;
  std::vector<Element> inverse;
  std::vector<Element> table;  // row-major, empty when above kTableLimit
  std::function<Element(Element, Element)> rule;
  std::function<std::string(Element)> labeler;
  std::vector<Element> generators;

  Element mul(Element a, Element b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * n + b];
    return rule(a, b);
  }
};

namespace {

using Impl = CayleyGroup::Impl;
using Element = CayleyGroup::Element;

void check_cap(std::uint64_t n, std::uint64_t cap) {
  if (n > cap) {
    throw CapExceeded("group of order " + std::to_string(n) + " exceeds CAYLEY_CAP " + std::to_string(cap));
  }
  if (n > std::numeric_limits<std::uint32_t>::max()) throw CapExceeded("group order exceeds 32 bits");
}

void materialize(Impl& g) {
  if (g.n > CayleyGroup::kTableLimit || !g.table.empty()) return;
  std::vector<Element> t(static_cast<std::size_t>(g.n) * g.n);
  for (Element a = 0; a < g.n; ++a) {
    for (Element b = 0; b < g.n; ++b) t[static_cast<std::size_t>(a) * g.n + b] = g.rule(a, b);
  }
  g.table = std::move(t);
}

void choose_generators(Impl& g) {
  std::vector<bool> member(g.n, false);
  std::vector<Element> closure{g.identity};
  member[g.identity] = true;
  for (Element x = 0; x < g.n && closure.size() < g.n; ++x) {
    if (member[x]) continue;
    g.generators.push_back(x);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (Element s : g.generators) {
        const Element y = g.mul(closure[i], s);
        if (!member[y]) {
          member[y] = true;
          closure.push_back(y);
        }
      }
    }
  }
}

std::shared_ptr<const Impl> finish(std::shared_ptr<Impl> g) {
  materialize(*g);
  choose_generators(*g);
  return g;
}

// True iff the marked set is a subgroup; builds it as a closure so the cost
// is linear in its size times the number of generators found.
bool is_closed_subset(const CayleyGroup& g, const std::vector<bool>& in, const std::vector<Element>& members) {
  std::vector<bool> reached(in.size(), false);
  std::vector<Element> closure{g.identity()};
  std::vector<Element> gens;
  reached[g.identity()] = true;
  for (Element x : members) {
    if (reached[x]) continue;
    gens.push_back(x);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (Element s : gens) {
        const Element y = g.mul(closure[i], s);
        if (!in[y]) return false;
        if (!reached[y]) {
          reached[y] = true;
          closure.push_back(y);
        }
      }
    }
  }
  return closure.size() == members.size();
}

}  // namespace

CayleyGroup CayleyGroup::from_table(const std::vector<std::vector<std::uint32_t>>& table, std::uint64_t cap) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("Cayley table is empty");
  check_cap(n, cap);
  auto g = std::make_shared<Impl>();
  g->n = static_cast<std::uint32_t>(n);
  g->table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw std::invalid_argument("Cayley table row " + std::to_string(a) + " has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = table[a][b];
      if (v >= n) throw std::invalid_argument("Cayley table entry out of range");
      if (seen[v]) throw std::invalid_argument("Cayley table row " + std::to_string(a) + " repeats an entry");
      seen[v] = true;
      g->table[a * n + b] = v;
    }
  }
  std::optional<Element> e;
  for (Element c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g->mul(c, x) == x && g->mul(x, c) == x;
    if (ok) e = c;
  }
  if (!e) throw std::invalid_argument("Cayley table has no identity");
  g->identity = *e;
  g->inverse.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n; ++b) {
      if (g->mul(a, b) == *e) {
        if (g->mul(b, a) != *e) throw std::invalid_argument("Cayley table: one-sided inverse");
        g->inverse[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("Cayley table: element without inverse");
  }
  const auto assoc = [&](Element a, Element b, Element c) {
    if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c))) {
      throw std::invalid_argument("Cayley table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  if (n <= 512) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int i = 0; i < 200000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
  g->labeler = [](Element a) { return "g" + std::to_string(a); };
  choose_generators(*g);
  return CayleyGroup(g);
}

CayleyGroup CayleyGroup::from_perm_group(const PermGroup& pg, std::uint64_t cap) {
  struct Data {
    std::vector<Permutation> elems;
    std::unordered_map<Permutation, Element, PermutationHash> index;
  };
  auto data = std::make_shared<Data>();
  data->elems = pg.elements(cap);
  check_cap(data->elems.size(), cap);
  // Put the identity first.
  std::sort(data->elems.begin(), data->elems.end());
  data->index.reserve(data->elems.size() * 2);
  for (Element i = 0; i < data->elems.size(); ++i) data->index.emplace(data->elems[i], i);

  auto g = std::make_shared<Impl>();
  g->n = static_cast<std::uint32_t>(data->elems.size());
  g->identity = data->index.at(Permutation::identity(pg.degree()));
  g->rule = [data](Element a, Element b) { return data->index.at(data->elems[a] * data->elems[b]); };
  g->labeler = [data](Element a) { return data->elems[a].to_cycle_string(); };
  g->inverse.resize(g->n);
  for (Element a = 0; a < g->n; ++a) g->inverse[a] = data->index.at(data->elems[a].inverse());
  return CayleyGroup(finish(g));
}

CayleyGroup CayleyGroup::cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group of order 0");
  auto g = std::make_shared<Impl>();
  g->n = n;
  g->rule = [n](Element a, Element b) { return static_cast<Element>((static_cast<std::uint64_t>(a) + b) % n); };
  g->labeler = [](Element a) { return std::to_string(a); };
  g->inverse.resize(n);
  for (Element a = 0; a < n; ++a) g->inverse[a] = (n - a) % n;
  return CayleyGroup(finish(g));
}

CayleyGroup CayleyGroup::direct_product(const CayleyGroup& a, const CayleyGroup& b, std::uint64_t cap) {
  const std::uint64_t n = static_cast<std::uint64_t>(a.order()) * b.order();
  check_cap(n, cap);
  const std::uint32_t nb = b.order();
  auto g = std::make_shared<Impl>();
  g->n = static_cast<std::uint32_t>(n);
  g->identity = a.identity() * nb + b.identity();
  g->rule = [a, b, nb](Element x, Element y) {
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  };
  g->labeler = [a, b, nb](Element x) { return "(" + a.label(x / nb) + "," + b.label(x % nb) + ")"; };
  g->inverse.resize(g->n);
  for (Element x = 0; x < g->n; ++x) g->inverse[x] = a.inv(x / nb) * nb + b.inv(x % nb);
  return CayleyGroup(finish(g));
}

CayleyGroup CayleyGroup::semidirect(const CayleyGroup& n, const CayleyGroup& h,
                                    const std::vector<std::vector<Element>>& act, std::uint64_t cap) {
  const std::uint32_t nn = n.order();
  const std::uint32_t nh = h.order();
  check_cap(static_cast<std::uint64_t>(nn) * nh, cap);
  if (act.size() != nh) throw std::invalid_argument("semidirect: need one automorphism per element of H");
  for (Element y = 0; y < nh; ++y) {
    const auto& f = act[y];
    if (f.size() != nn) throw std::invalid_argument("semidirect: automorphism has wrong size");
    std::vector<bool> seen(nn, false);
    for (Element v : f) {
      if (v >= nn || seen[v]) throw std::invalid_argument("semidirect: action is not a bijection");
      seen[v] = true;
    }
    for (Element x = 0; x < nn; ++x) {
      for (Element s : n.generators()) {
        if (f[n.mul(x, s)] != n.mul(f[x], f[s])) {
          throw std::invalid_argument("semidirect: action is not by automorphisms");
        }
      }
    }
  }
  for (Element s : h.generators()) {
    for (Element y = 0; y < nh; ++y) {
      const auto& composite = act[h.mul(s, y)];
      for (Element x = 0; x < nn; ++x) {
        if (composite[x] != act[s][act[y][x]]) {
          throw std::invalid_argument("semidirect: action is not a homomorphism");
        }
      }
    }
  }
  auto table = std::make_shared<const std::vector<std::vector<Element>>>(act);
  auto g = std::make_shared<Impl>();
  g->n = nn * nh;
  g->identity = h.identity() * nn + n.identity();
  g->rule = [n, h, nn, table](Element a, Element b) {
    const Element x1 = a % nn, h1 = a / nn, x2 = b % nn, h2 = b / nn;
    return h.mul(h1, h2) * nn + n.mul(x1, (*table)[h1][x2]);
  };
  g->labeler = [n, h, nn](Element a) { return "(" + n.label(a % nn) + ";" + h.label(a / nn) + ")"; };
  g->inverse.resize(g->n);
  for (Element a = 0; a < g->n; ++a) {
    const Element hi = h.inv(a / nn);
    g->inverse[a] = hi * nn + (*table)[hi][n.inv(a % nn)];
  }
  return CayleyGroup(finish(g));
}

CayleyGroup CayleyGroup::quotient(const CayleyGroup& g, const std::vector<Element>& normal) {
  const std::uint32_t n = g.order();
  std::vector<bool> in(n, false);
  for (Element x : normal) {
    if (x >= n) throw VerificationError("quotient: element out of range");
    in[x] = true;
  }
  if (!in[g.identity()]) throw VerificationError("quotient: subgroup lacks the identity");
  std::vector<Element> members;
  for (Element x = 0; x < n; ++x) {
    if (in[x]) members.push_back(x);
  }
  if (!is_closed_subset(g, in, members)) throw VerificationError("quotient: element set is not a subgroup");
  for (Element x : members) {
    for (Element s : g.generators()) {
      if (!in[g.mul(g.mul(g.inv(s), x), s)]) throw VerificationError("quotient: subgroup is not normal");
    }
  }
  if (n % members.size() != 0) throw VerificationError("quotient: order does not divide");
  auto coset_of = std::make_shared<std::vector<Element>>(n, std::numeric_limits<Element>::max());
  auto reps = std::make_shared<std::vector<Element>>();
  for (Element x = 0; x < n; ++x) {
    if ((*coset_of)[x] != std::numeric_limits<Element>::max()) continue;
    const auto c = static_cast<Element>(reps->size());
    reps->push_back(x);
    for (Element m : members) (*coset_of)[g.mul(x, m)] = c;
  }
  auto q = std::make_shared<Impl>();
  q->n = static_cast<std::uint32_t>(reps->size());
  q->identity = (*coset_of)[g.identity()];
  q->rule = [g, coset_of, reps](Element a, Element b) { return (*coset_of)[g.mul((*reps)[a], (*reps)[b])]; };
  q->labeler = [g, reps](Element a) { return g.label((*reps)[a]) + "N"; };
  q->inverse.resize(q->n);
  for (Element a = 0; a < q->n; ++a) q->inverse[a] = (*coset_of)[g.inv((*reps)[a])];
  return CayleyGroup(finish(q));
}

CayleyGroup CayleyGroup::subgroup(const CayleyGroup& g, const std::vector<Element>& elements) {
  auto elems = std::make_shared<std::vector<Element>>(elements);
  std::sort(elems->begin(), elems->end());
  elems->erase(std::unique(elems->begin(), elems->end()), elems->end());
  auto pos = std::make_shared<std::vector<Element>>(g.order(), std::numeric_limits<Element>::max());
  for (Element i = 0; i < elems->size(); ++i) {
    if ((*elems)[i] >= g.order()) throw VerificationError("subgroup: element out of range");
    (*pos)[(*elems)[i]] = i;
  }
  std::vector<bool> in(g.order(), false);
  for (Element x : *elems) in[x] = true;
  if (!in[g.identity()] || !is_closed_subset(g, in, *elems)) {
    throw VerificationError("subgroup: element set is not closed");
  }
  auto s = std::make_shared<Impl>();
  s->n = static_cast<std::uint32_t>(elems->size());
  if ((*pos)[g.identity()] == std::numeric_limits<Element>::max()) {
    throw VerificationError("subgroup: identity missing");
  }
  s->identity = (*pos)[g.identity()];
  s->rule = [g, elems, pos](Element a, Element b) { return (*pos)[g.mul((*elems)[a], (*elems)[b])]; };
  s->labeler = [g, elems](Element a) { return g.label((*elems)[a]); };
  s->inverse.resize(s->n);
  for (Element a = 0; a < s->n; ++a) s->inverse[a] = (*pos)[g.inv((*elems)[a])];
  return CayleyGroup(finish(s));
}

std::uint32_t CayleyGroup::order() const noexcept { return impl_->n; }
CayleyGroup::Element CayleyGroup::identity() const noexcept { return impl_->identity; }
CayleyGroup::Element CayleyGroup::mul(Element a, Element b) const { return impl_->mul(a, b); }
CayleyGroup::Element CayleyGroup::inv(Element a) const { return impl_->inverse[a]; }
bool CayleyGroup::has_table() const noexcept { return !impl_->table.empty(); }
const std::vector<CayleyGroup::Element>& CayleyGroup::generators() const noexcept { return impl_->generators; }
std::string CayleyGroup::label(Element a) const { return impl_->labeler(a); }

std::uint64_t CayleyGroup::element_order(Element a) const {
  std::uint64_t k = 1;
  for (Element x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool CayleyGroup::is_abelian() const {
  const auto& gens = generators();
  for (Element a : gens) {
    for (Element b : gens) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> CayleyGroup::table() const {
  if (order() > kTableLimit) throw CapExceeded("table export limited to order " + std::to_string(kTableLimit));
  std::vector<std::vector<std::uint32_t>> t(order(), std::vector<std::uint32_t>(order()));
  for (Element a = 0; a < order(); ++a)
    for (Element b = 0; b < order(); ++b) t[a][b] = mul(a, b);
  return t;
}

}  // namespace burnside
