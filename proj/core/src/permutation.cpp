#include "burnside/permutation.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace burnside {

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > std::numeric_limits<std::uint16_t>::max()) {
    throw std::invalid_argument("permutation degree too large");
  }
  std::vector<std::uint16_t> im(degree);
  std::iota(im.begin(), im.end(), std::uint16_t{0});
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_one_based(std::span<const long long> images) {
  if (images.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw std::invalid_argument("permutation degree too large");
  }
  std::vector<std::uint16_t> im;
  im.reserve(images.size());
  for (long long v : images) {
    if (v < 1 || v > static_cast<long long>(images.size())) {
      throw std::invalid_argument("permutation image " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(images.size()));
    }
    im.push_back(static_cast<std::uint16_t>(v - 1));
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      const int b = c[(i + 1) % c.size()];
      if (a < 1 || static_cast<std::size_t>(a) > degree || b < 1 ||
          static_cast<std::size_t>(b) > degree) {
        throw std::invalid_argument("cycle point out of range");
      }
      if (used[static_cast<std::size_t>(a - 1)]) throw std::invalid_argument("cycles are not disjoint");
      used[static_cast<std::size_t>(a - 1)] = true;
      p.images_[static_cast<std::size_t>(a - 1)] = static_cast<std::uint16_t>(b - 1);
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw std::invalid_argument("cannot shrink a permutation");
  Permutation p = identity(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

std::vector<long long> Permutation::to_one_based() const {
  std::vector<long long> out;
  out.reserve(images_.size());
  for (auto v : images_) out.push_back(static_cast<long long>(v) + 1);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) s += ",";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ULL;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace burnside
