#include "burnside/tower.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

// An index this close to 1 is treated as the next level's 0: the two
// represent the same real to working precision (e.g. from_real(e)).
const Real kSnap("1e-90");

// ln of the largest finite Real is about 1.488e9; stay clear of it.
const Real kMaxLog("1.4e9");

// Once ln(a/b) is below -exp(kNegligibleLog), b/a cannot influence any
// 100-digit quantity derived from a.
const Real kNegligibleLog(60);

constexpr std::uint64_t kRealHeight = 4;

TowerNumber flagged(TowerNumber t, bool inexact) {
  return inexact ? t.with_inexact(true) : t;
}

Real value_of(const TowerNumber& t) { return *t.to_real(); }

// ln(b/a) for 0 <= b <= a; nullopt stands for -infinity (b == 0, or b/a
// below anything representable relative to a).
std::optional<Real> log_ratio(const TowerNumber& b, const TowerNumber& a) {
  if (b.is_zero()) return std::nullopt;
  if (a.height() <= kRealHeight) return log(value_of(b)) - log(value_of(a));

  // b <= E_{h-1}(0) = B and a >= e^B, so ln(a/b) >= B - ln B, beyond
  // exp(kNegligibleLog) once h >= 6
  if (a.height() >= 6 && b.height() + 2 <= a.height()) return std::nullopt;

  const TowerNumber la = ln_t(a);  // height >= 4
  if (b.height() == 0) {
    if (la.height() <= kRealHeight) return log(b.index()) - value_of(la);
    return std::nullopt;
  }
  const TowerNumber lb = ln_t(b);
  if (la.height() <= kRealHeight) return value_of(lb) - value_of(la);
  if (la == lb) return Real(0);

  // lb - la = -la * t with t = 1 - lb/la in (0, 1].
  const std::optional<Real> inner = log_ratio(lb, la);
  const Real t = inner ? Real(-boost::multiprecision::expm1(*inner)) : Real(1);
  if (t <= 0) return Real(0);
  const TowerNumber lla = ln_t(la);
  if (lla.height() > kRealHeight) return std::nullopt;
  const Real log_gap = value_of(lla) + log(t);
  if (log_gap > kNegligibleLog) return std::nullopt;
  return Real(-exp(log_gap));
}

}  // namespace

TowerNumber TowerNumber::from_real(const Real& x) {
  if (!boost::multiprecision::isfinite(x)) throw std::domain_error("from_real: non-finite input");
  if (x < 0) throw std::domain_error("from_real: negative input");
  TowerNumber t;
  Real v = x;
  while (v >= 1) {
    v = log(v);
    ++t.height_;
  }
  if (1 - v < kSnap) {
    v = 0;
    ++t.height_;
  }
  t.index_ = v;
  return t;
}

TowerNumber TowerNumber::from_parts(std::uint64_t height, const Real& index, bool inexact) {
  if (!(index >= 0 && index < 1)) {
    throw std::domain_error("tower index must lie in [0, 1)");
  }
  TowerNumber t;
  t.height_ = height;
  t.index_ = index;
  t.inexact_ = inexact;
  return t;
}

std::optional<Real> TowerNumber::to_real() const {
  if (height_ > kRealHeight) return std::nullopt;
  Real v = index_;
  for (std::uint64_t i = 0; i < height_; ++i) v = exp(v);
  return v;
}

TowerNumber TowerNumber::with_inexact(bool flag) const {
  TowerNumber t = *this;
  t.inexact_ = flag;
  return t;
}

std::string TowerNumber::to_string() const {
  return "E_" + std::to_string(height_) + "(" + index_.str(6, std::ios_base::fixed) + ")";
}

std::string TowerNumber::to_display() const {
  std::string s = to_string();
  if (height_ <= kRealHeight) {
    const Real v = value_of(*this);
    if (v < Real("1e30")) s += " [= " + v.str(15) + "]";
  }
  return s;
}

std::string TowerNumber::index_string(int digits) const {
  return index_.str(digits);
}

TowerNumber TowerNumber::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number_span = [&](bool allow_sign) {
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '.' || text[pos] == 'e' || text[pos] == 'E' ||
                                 ((text[pos] == '-' || text[pos] == '+') && pos > start &&
                                  (text[pos - 1] == 'e' || text[pos - 1] == 'E')))) {
      ++pos;
    }
    if (pos == start) throw ParseError(pos, "expected a number");
    return std::string(text.substr(start, pos - start));
  };
  auto to_real = [&](const std::string& s, std::size_t at) {
    try {
      return Real(s);
    } catch (const std::exception&) {
      throw ParseError(at, "malformed number '" + s + "'");
    }
  };

  skip();
  TowerNumber result;
  if (text.substr(pos, 2) == "E_") {
    pos += 2;
    const std::size_t hpos = pos;
    std::uint64_t h = 0;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(pos, "expected tower height");
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      h = h * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    (void)hpos;
    if (pos >= text.size() || text[pos] != '(') throw ParseError(pos, "expected '('");
    ++pos;
    skip();
    const std::size_t fpos = pos;
    const Real f = to_real(number_span(false), fpos);
    skip();
    if (pos >= text.size() || text[pos] != ')') throw ParseError(pos, "expected ')'");
    ++pos;
    if (!(f >= 0 && f < 1)) throw ParseError(fpos, "tower index must lie in [0, 1)");
    result = from_parts(h, f);
  } else {
    const std::size_t vpos = pos;
    const Real v = to_real(number_span(true), vpos);
    if (v < 0) throw ParseError(vpos, "tower values are nonnegative");
    result = from_real(v);
  }
  skip();
  if (pos < text.size() && text[pos] == '[') {
    const auto close = text.find(']', pos);
    if (close == std::string_view::npos) throw ParseError(pos, "unterminated '['");
    pos = close + 1;
    skip();
  }
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  return result;
}

std::strong_ordering operator<=>(const TowerNumber& a, const TowerNumber& b) {
  if (a.height_ != b.height_) return a.height_ <=> b.height_;
  if (a.index_ < b.index_) return std::strong_ordering::less;
  if (b.index_ < a.index_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_t(const TowerNumber& x, const TowerNumber& y) { return x <=> y; }

TowerNumber exp_t(const TowerNumber& x) {
  return TowerNumber::from_parts(x.height() + 1, x.index(), x.inexact());
}

TowerNumber ln_t(const TowerNumber& x) {
  if (x.height() == 0) {
    throw std::domain_error(x.is_zero() ? "ln_t: logarithm of zero"
                                        : "ln_t: logarithm of a value below 1 is negative");
  }
  return TowerNumber::from_parts(x.height() - 1, x.index(), x.inexact());
}

TowerNumber big_E(std::uint64_t k, const TowerNumber& x) {
  return TowerNumber::from_parts(x.height() + k, x.index(), x.inexact());
}

TowerNumber add_t(const TowerNumber& x, const TowerNumber& y) {
  const bool inexact = x.inexact() || y.inexact();
  const TowerNumber& big = x < y ? y : x;
  const TowerNumber& small = x < y ? x : y;
  if (small.is_zero()) return flagged(big, inexact);
  if (big.height() <= kRealHeight) {
    return flagged(TowerNumber::from_real(value_of(big) + value_of(small)), inexact);
  }
  const std::optional<Real> r = log_ratio(small, big);
  if (!r) return big.with_inexact(true);
  const Real delta = boost::multiprecision::log1p(exp(*r));
  if (delta == 0) return big.with_inexact(true);
  // ln(big + small) = ln(big) + log1p(small / big)
  return flagged(exp_t(add_t(ln_t(big), TowerNumber::from_real(delta))), inexact);
}

TowerNumber mul_t(const TowerNumber& x, const TowerNumber& y) {
  const bool inexact = x.inexact() || y.inexact();
  if (x.is_zero() || y.is_zero()) return flagged(TowerNumber(), inexact);
  if (x.height() <= kRealHeight && y.height() <= kRealHeight) {
    const Real a = value_of(x);
    const Real b = value_of(y);
    if (a < 1 || b < 1 || log(a) + log(b) < kMaxLog) {
      return flagged(TowerNumber::from_real(a * b), inexact);
    }
  }
  const TowerNumber& big = x < y ? y : x;
  const TowerNumber& small = x < y ? x : y;
  if (small.height() == 0) {
    // big * f with f < 1: ln(product) = ln(big) - |ln f|.
    const TowerNumber lb = ln_t(big);
    const Real shrink = -log(small.index());
    if (lb.height() <= kRealHeight) {
      const Real v = value_of(lb) - shrink;
      if (v < 0) return flagged(TowerNumber::from_real(exp(v)), inexact);
      return flagged(exp_t(TowerNumber::from_real(v)), inexact);
    }
    return big.with_inexact(true);
  }
  return flagged(exp_t(add_t(ln_t(big), ln_t(small))), inexact);
}

TowerNumber pow_t(const TowerNumber& x, const Real& p) {
  if (p < 0) throw std::domain_error("pow_t: negative exponent");
  if (p == 0) return TowerNumber::from_real(Real(1)).with_inexact(x.inexact());
  if (x.is_zero()) return x;
  if (x.height() <= kRealHeight) {
    const Real v = value_of(x);
    if (v < 1 || log(v) * p < kMaxLog) {
      return flagged(TowerNumber::from_real(pow(v, p)), x.inexact());
    }
  }
  return exp_t(mul_t(ln_t(x), TowerNumber::from_real(p)));
}

}  // namespace burnside
