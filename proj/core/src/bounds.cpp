#include "burnside/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace burnside {

namespace {

const TowerNumber kOne = TowerNumber::from_real(1.0);

TowerNumber max_t(const TowerNumber& a, const TowerNumber& b) {
  return cmp_t(a, b) == std::strong_ordering::less ? b : a;
}

// log of (q^b)^((q^b)^d) = (q^b)^d * b ln q
TowerNumber grid_log_term(std::uint64_t q, int b, std::uint64_t d) {
  const Real blnq = Real(b) * log(Real(q));
  return mul_t(exp_t(TowerNumber::from_real(Real(d) * blnq)), TowerNumber::from_real(blnq));
}

}  // namespace

void BoundParams::validate() const {
  if (d < 1) throw std::invalid_argument("rank d must be at least 1");
  if (l < 2) throw std::invalid_argument("law length must be at least 2");
  if (k < 1) throw std::invalid_argument("nonsolvable length must be at least 1");
  const auto& c = constants;
  if (!(c.c >= 2)) throw std::invalid_argument("constant c must be at least 2");
  if (!(c.c1 > 0 && c.c2 > 0 && c.c3 > 0 && c.c4 > 0)) {
    throw std::invalid_argument("constants c1..c4 must be positive");
  }
}

Real BoundParams::x() const {
  const Real L(l);
  return Real(constants.c) * Real(d) * L * log(L);
}

TowerNumber alt_product_bound(const BoundParams& p) {
  p.validate();
  const Real L(p.l);
  const Real lnl = log(L);
  // ln of the bound is l^2 ln l * exp(d l ln l)
  const TowerNumber inner = exp_t(TowerNumber::from_real(Real(p.d) * L * lnl));
  return exp_t(mul_t(TowerNumber::from_real(L * L * lnl), inner));
}

LieBound lie_product_bound(const BoundParams& p, LieFamily family) {
  p.validate();
  const auto& c = p.constants;
  const Real L(p.l);
  const Real lnl = log(L);

  LieBound out{family, {}, {}, {}};
  // l^(c4 d ln l) = exp(c4 d ln(l)^2)
  const TowerNumber e2 = big_E(2, TowerNumber::from_real(Real(c.c4) * Real(p.d) * lnl * lnl));
  out.closed = exp_t(mul_t(TowerNumber::from_real(Real(c.c3) * lnl * lnl * lnl), e2));

  const FamilyInfo& info = family_info(family);
  int k_lo = info.min_rank;
  int k_hi = info.min_rank;
  if (info.fixed_rank) {
    k_lo = k_hi = *info.fixed_rank;
  } else {
    const double cut = std::floor(c.c2 * std::log(static_cast<double>(p.l)));
    k_hi = std::max(info.min_rank, static_cast<int>(cut));
  }
  TowerNumber log_sum;
  for (int k = k_lo; k <= k_hi; ++k) {
    const int b = b_value(family, info.fixed_rank ? std::nullopt : std::optional<int>(k));
    const double exponent = c.c1 * k;
    for (std::uint64_t q = 2;; ++q) {
      if (std::pow(static_cast<double>(q), exponent) > static_cast<double>(p.l) * (1 + 1e-12)) break;
      if (!prime_power(q) || !satisfies_field_constraint(family, q)) continue;
      out.grid_points.emplace_back(k, q);
      log_sum = add_t(log_sum, grid_log_term(q, b, p.d));
    }
  }
  out.grid = out.grid_points.empty() ? kOne : exp_t(log_sum);
  return out;
}

std::vector<LieBound> lie_product_bounds(const BoundParams& p) {
  std::vector<LieBound> out;
  for (LieFamily f : kAllFamilies) out.push_back(lie_product_bound(p, f));
  return out;
}

SemisimpleBound semisimple_bound(const BoundParams& p) {
  p.validate();
  SemisimpleBound s;
  s.alt = alt_product_bound(p);
  s.lie = lie_product_bounds(p);
  s.sporadic_factor = pow_t(p.constants.sporadic_max, Real(p.d));
  s.product = mul_t(s.alt, s.sporadic_factor);
  for (const auto& lb : s.lie) s.product = mul_t(s.product, max_t(lb.closed, lb.grid));
  s.normalized = big_E(2, TowerNumber::from_real(p.x()));
  s.product_within_normalized = cmp_t(s.product, s.normalized) != std::strong_ordering::greater;
  return s;
}

AnabelianBound anabelian_bound(const BoundParams& p) {
  p.validate();
  const Real L(p.l);
  const TowerNumber scale = TowerNumber::from_real(Real(p.constants.c) * L * log(L));

  AnabelianBound a;
  TowerNumber di = TowerNumber::from_real(Real(p.d));
  TowerNumber product = kOne;
  for (std::uint64_t i = 0; i < p.k; ++i) {
    const TowerNumber layer = big_E(2, mul_t(scale, di));
    product = mul_t(product, layer);
    di = mul_t(di, layer);
  }
  a.recursive = product;

  const Real x = p.x();
  a.intermediate = big_E(2 * p.k, TowerNumber::from_real(x + log(log(2 * x * x))));
  a.closed = big_E(2 * p.k, TowerNumber::from_real(2 * x));
  return a;
}

SchreierBound schreier_generator_bound(std::uint64_t d, const TowerNumber& index) {
  if (d < 1) throw std::invalid_argument("rank d must be at least 1");
  SchreierBound s;
  s.exact = add_t(mul_t(TowerNumber::from_real(Real(d - 1)), index), kOne);
  s.simplified = mul_t(TowerNumber::from_real(Real(d)), index);
  return s;
}

BoundReport bound_report(const BoundParams& p) {
  p.validate();
  BoundReport r;
  r.d = p.d;
  r.l = p.l;
  r.lambda_used = p.k;
  r.x = p.x();
  r.constants = p.constants;
  r.semisimple = semisimple_bound(p);
  r.anabelian = anabelian_bound(p);
  r.main_bound = r.anabelian.closed;
  if (!r.semisimple.product_within_normalized) {
    r.notes.push_back(
        "semisimple product exceeds the normalized value E_2(c d l ln l) for these constants; "
        "the anabelian recursion uses the normalized value");
  }
  if (r.anabelian.recursive.inexact()) {
    r.notes.push_back("recursive value dropped contributions below working precision");
  }
  return r;
}

BoundReport main_theorem_bound(const Word& w, std::uint64_t d, std::optional<std::uint64_t> lambda_override,
                               const BoundConstants& constants) {
  const std::uint64_t l = word_length(w);
  if (l == 0) throw std::invalid_argument("the trivial word is not a law with a finite bound");
  if (l < 2) throw std::invalid_argument("law length must be at least 2");
  BoundParams p;
  p.d = d;
  p.l = l;
  p.k = lambda_override ? std::min(l, *lambda_override) : l;
  p.constants = constants;
  BoundReport r = bound_report(p);
  if (lambda_override && *lambda_override > l) {
    r.notes.push_back("lambda override capped at the law length");
  }
  return r;
}

}  // namespace burnside
