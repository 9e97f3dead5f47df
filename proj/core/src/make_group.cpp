#include "burnside/make_group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "burnside/catalog.hpp"
#include "burnside/errors.hpp"
#include "burnside/finite_field.hpp"
#include "burnside/group_io.hpp"

namespace burnside {

PermGroup alternating_group(int m) {
  if (m < 1) throw std::invalid_argument("alternating(m) needs m >= 1");
  const auto n = static_cast<std::size_t>(m);
  if (m < 3) return PermGroup::trivial(n);
  // (1,2,3) and an (m-1)- or m-cycle fixing or moving 1, depending on parity.
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{1, 2, 3}})};
  if (m > 3) {
    std::vector<int> cyc;
    if (m % 2 == 1) {
      for (int i = 1; i <= m; ++i) cyc.push_back(i);
    } else {
      for (int i = 2; i <= m; ++i) cyc.push_back(i);
    }
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup symmetric_group(int m) {
  if (m < 1) throw std::invalid_argument("symmetric(m) needs m >= 1");
  const auto n = static_cast<std::size_t>(m);
  if (m == 1) return PermGroup::trivial(1);
  std::vector<int> cyc;
  for (int i = 1; i <= m; ++i) cyc.push_back(i);
  return PermGroup(n, {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {cyc})});
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic(n) needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> cyc;
  for (int i = 1; i <= n; ++i) cyc.push_back(i);
  return PermGroup(static_cast<std::size_t>(n), {Permutation::from_cycles(static_cast<std::size_t>(n), {cyc})});
}

PermGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral(n) needs n >= 3");
  const auto deg = static_cast<std::size_t>(n);
  std::vector<int> cyc;
  for (int i = 1; i <= n; ++i) cyc.push_back(i);
  std::vector<std::vector<int>> flips;
  for (int i = 2, j = n; i < j; ++i, --j) flips.push_back({i, j});
  return PermGroup(deg, {Permutation::from_cycles(deg, {cyc}), Permutation::from_cycles(deg, flips)});
}

PermGroup psl2_group(std::uint64_t q) {
  if (!prime_power(q)) throw std::invalid_argument("psl2(q) needs a prime power q");
  const FiniteField f(static_cast<std::uint32_t>(q));
  const auto inf = static_cast<std::uint16_t>(q);
  const std::size_t deg = q + 1;
  std::vector<std::uint16_t> shift(deg), scale(deg), invert(deg);
  const std::uint32_t w2 = f.mul(f.primitive(), f.primitive());
  for (std::uint32_t z = 0; z < q; ++z) {
    shift[z] = static_cast<std::uint16_t>(f.add(z, 1));
    scale[z] = static_cast<std::uint16_t>(f.mul(w2, z));
    invert[z] = z == 0 ? inf : static_cast<std::uint16_t>(f.neg(f.inv(z)));
  }
  shift[inf] = inf;
  scale[inf] = inf;
  invert[inf] = 0;
  return PermGroup(deg, {Permutation(shift), Permutation(scale), Permutation(invert)});
}

PermGroup direct_product(const std::vector<PermGroup>& factors) {
  if (factors.empty()) throw std::invalid_argument("direct_product needs at least one factor");
  std::size_t total = 0;
  for (const auto& f : factors) total += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<std::uint16_t> im(total);
      for (std::size_t i = 0; i < total; ++i) im[i] = static_cast<std::uint16_t>(i);
      for (std::size_t i = 0; i < f.degree(); ++i) im[offset + i] = static_cast<std::uint16_t>(offset + g[i]);
      gens.emplace_back(std::move(im));
    }
    offset += f.degree();
  }
  return PermGroup(total, std::move(gens));
}

PermGroup wreath_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t m = g.degree();
  const std::size_t k = h.degree();
  const std::size_t total = m * k;
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < k; ++b) {
    for (const auto& x : g.generators()) {
      std::vector<std::uint16_t> im(total);
      for (std::size_t i = 0; i < total; ++i) im[i] = static_cast<std::uint16_t>(i);
      for (std::size_t i = 0; i < m; ++i) im[b * m + i] = static_cast<std::uint16_t>(b * m + x[i]);
      gens.emplace_back(std::move(im));
    }
  }
  for (const auto& y : h.generators()) {
    std::vector<std::uint16_t> im(total);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t i = 0; i < m; ++i) im[b * m + i] = static_cast<std::uint16_t>(y[b] * m + i);
    }
    gens.emplace_back(std::move(im));
  }
  return PermGroup(total, std::move(gens));
}

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  GroupDescriptor parse() {
    GroupDescriptor d = descriptor();
    skip();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters in group descriptor");
    return d;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000'000ULL) throw ParseError(start, "number too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected a number");
    return v;
  }

  GroupDescriptor descriptor() {
    skip();
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      name += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
      ++pos_;
    }
    if (name.empty()) throw ParseError(start, "expected a group name");
    GroupDescriptor d;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      d.name = name;
      if (name == "from_file" || name == "file") {
        const auto close = text_.find(')', pos_);
        if (close == std::string_view::npos) throw ParseError(pos_, "unterminated '('");
        std::string path(text_.substr(pos_, close - pos_));
        path.erase(0, path.find_first_not_of(" \t\"'"));
        path.erase(path.find_last_not_of(" \t\"'") + 1);
        if (path.empty()) throw ParseError(pos_, "empty file path");
        d.path = path;
        pos_ = close + 1;
        return d;
      }
      skip();
      if (pos_ < text_.size() && text_[pos_] == ')') throw ParseError(pos_, "empty argument list");
      while (true) {
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          d.numbers.push_back(number());
        } else {
          d.groups.push_back(descriptor());
        }
        skip();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw ParseError(pos_, "expected ',' or ')'");
      }
      return d;
    }
    // Short forms: alt5, sym4, c12, psl2_7 is not accepted.
    std::size_t cut = name.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
    if (name.rfind("psl2", 0) == 0 && cut <= 4) cut = name.size();
    std::string base = name.substr(0, cut);
    while (!base.empty() && base.back() == '_') base.pop_back();
    d.name = base;
    if (cut < name.size()) d.numbers.push_back(std::stoull(name.substr(cut)));
    return d;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string canonical_name(const std::string& n) {
  if (n == "alternating" || n == "alt" || n == "a") return "alternating";
  if (n == "symmetric" || n == "sym" || n == "s") return "symmetric";
  if (n == "cyclic" || n == "c" || n == "z") return "cyclic";
  if (n == "dihedral") return "dihedral";
  if (n == "psl2" || n == "psl") return "psl2";
  if (n == "direct_product" || n == "product" || n == "dp") return "direct_product";
  if (n == "wreath" || n == "wreath_product") return "wreath";
  if (n == "from_file" || n == "file") return "from_file";
  return n;
}

std::uint64_t single_number(const GroupDescriptor& d) {
  if (d.numbers.size() != 1 || !d.groups.empty()) {
    throw std::invalid_argument(d.name + " takes exactly one integer parameter");
  }
  return d.numbers.front();
}

}  // namespace

std::string GroupDescriptor::to_string() const {
  const std::string n = canonical_name(name);
  if (n == "from_file") return "from_file(" + path + ")";
  std::string s = n + "(";
  bool first = true;
  for (auto v : numbers) {
    s += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  for (const auto& g : groups) {
    s += (first ? "" : ",") + g.to_string();
    first = false;
  }
  return s + ")";
}

GroupDescriptor parse_group_descriptor(std::string_view text) { return DescriptorParser(text).parse(); }

PermGroup make_group(const GroupDescriptor& d, const GroupLimits& limits) {
  const std::string n = canonical_name(d.name);
  PermGroup g = [&]() -> PermGroup {
    if (n == "alternating" || n == "symmetric") {
      const std::uint64_t m = single_number(d);
      if (m < 1 || m > static_cast<std::uint64_t>(limits.max_alt_degree)) {
        throw std::invalid_argument(n + "(m) supported for 1 <= m <= " + std::to_string(limits.max_alt_degree));
      }
      return n == "alternating" ? alternating_group(static_cast<int>(m)) : symmetric_group(static_cast<int>(m));
    }
    if (n == "cyclic" || n == "dihedral") {
      const std::uint64_t m = single_number(d);
      if (m < 1 || m > limits.max_degree) {
        throw std::invalid_argument(n + "(n) supported for n <= " + std::to_string(limits.max_degree));
      }
      return n == "cyclic" ? cyclic_group(static_cast<int>(m)) : dihedral_group(static_cast<int>(m));
    }
    if (n == "psl2") {
      const std::uint64_t q = single_number(d);
      if (!prime_power(q)) throw std::invalid_argument("psl2(q): " + std::to_string(q) + " is not a prime power");
      if (q > limits.max_q) {
        throw std::invalid_argument("psl2(q) supported for q <= " + std::to_string(limits.max_q));
      }
      return psl2_group(q);
    }
    if (n == "direct_product") {
      if (!d.numbers.empty() || d.groups.empty()) {
        throw std::invalid_argument("direct_product takes a list of groups");
      }
      std::vector<PermGroup> fs;
      for (const auto& sub : d.groups) fs.push_back(make_group(sub, limits));
      return direct_product(fs);
    }
    if (n == "wreath") {
      if (!d.numbers.empty() || d.groups.size() != 2) throw std::invalid_argument("wreath takes two groups");
      return wreath_product(make_group(d.groups[0], limits), make_group(d.groups[1], limits));
    }
    if (n == "from_file") {
      auto loaded = load_group_file(d.path);
      if (auto* p = std::get_if<PermGroup>(&loaded)) return *p;
      throw std::invalid_argument(d.path + " holds a Cayley table, not a permutation group");
    }
    throw std::invalid_argument("unknown group '" + d.name + "'");
  }();
  if (g.degree() > limits.max_degree) {
    throw std::invalid_argument("degree " + std::to_string(g.degree()) + " exceeds the limit " +
                                std::to_string(limits.max_degree));
  }
  return g;
}

PermGroup make_group(std::string_view text, const GroupLimits& limits) {
  return make_group(parse_group_descriptor(text), limits);
}

}  // namespace burnside
