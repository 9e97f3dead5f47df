#include "burnside/finite_field.hpp"

#include <stdexcept>

#include "burnside/catalog.hpp"

namespace burnside {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, low degree first

Poly digits(std::uint32_t v, std::uint32_t p, int e) {
  Poly d(static_cast<std::size_t>(e), 0);
  for (int i = 0; i < e; ++i) {
    d[static_cast<std::size_t>(i)] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// a*b mod the monic polynomial `modulus` (degree e, leading 1 implicit).
Poly polymul(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p) {
  const std::size_t e = a.size();
  Poly prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t k = 2 * e - 1; k >= e; --k) {
    const std::uint32_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < e; ++i) {
      prod[k - e + i] = (prod[k - e + i] + (p - (c * modulus[i]) % p)) % p;
    }
  }
  prod.resize(e);
  return prod;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  const auto pp = prime_power(q);
  if (!pp || q > 1024) throw std::invalid_argument("GF(q) needs a prime power q <= 1024");
  p_ = static_cast<std::uint32_t>(pp->first);
  e_ = pp->second;

  add_.resize(static_cast<std::size_t>(q) * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly da = digits(a, p_, e_);
    Poly dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly db = digits(b, p_, e_);
      Poly s(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = undigits(s, p_);
    }
  }

  // Find a monic irreducible modulus of degree e by brute force: a monic
  // polynomial is irreducible iff the multiplication it defines has no
  // zero divisors.
  const auto build_mul = [&](const Poly& modulus) {
    std::vector<std::uint32_t> table(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Poly da = digits(a, p_, e_);
      for (std::uint32_t b = 0; b < q; ++b) {
        const std::uint32_t v = undigits(polymul(da, digits(b, p_, e_), modulus, p_), p_);
        if (a != 0 && b != 0 && v == 0) return std::vector<std::uint32_t>{};
        table[a * q + b] = v;
      }
    }
    return table;
  };
  if (e_ == 1) {
    mul_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) mul_[a * q + b] = (a * b) % q;
    }
  } else {
    for (std::uint32_t m = 0; m < q && mul_.empty(); ++m) mul_ = build_mul(digits(m, p_, e_));
    if (mul_.empty()) throw std::logic_error("no irreducible polynomial found");
  }

  inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = mul(x, g);
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = g;
      break;
    }
  }
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0 || a >= q_) throw std::domain_error("GF(q): no inverse");
  return inv_[a];
}

}  // namespace burnside
