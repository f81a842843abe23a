#include "degpow/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace degpow {

namespace {

using Poly = std::vector<int>;  // low-degree first

Poly digits(int value, int p, int length) {
  Poly out(length);
  for (int i = 0; i < length; ++i, value /= p) out[i] = value % p;
  return out;
}

int undigits(const Poly& c, int p) {
  int value = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) value = value * p + c[i];
  return value;
}

int mod_inverse(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::logic_error("mod_inverse: no inverse");
}

// Remainder of a modulo monic-or-not b over GF(p); b's leading coefficient
// is non-zero.
Poly poly_mod(Poly a, const Poly& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = mod_inverse(b.back(), p);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int factor = a[i] * lead_inv % p;
    if (!factor) continue;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = ((a[i - db + j] - factor * b[j]) % p + p) % p;
  }
  a.resize(std::max(db, 1));
  return a;
}

bool is_zero(const Poly& a) {
  for (int c : a)
    if (c) return false;
  return true;
}

bool is_irreducible(const Poly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int index = 0; index < count; ++index) {
      Poly g = digits(index, p, d);
      g.push_back(1);
      if (is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  // Enumerate (c_0, ..., c_{k-1}) with c_0 most significant.
  for (int index = 0; index < count; ++index) {
    Poly f(k + 1);
    for (int i = k - 1, rest = index; i >= 0; --i, rest /= p) f[i] = rest % p;
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

std::pair<int, int> prime_power_decomposition(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p) ++p;
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  return q == 1 ? std::pair{p, k} : std::pair{0, 0};
}

FiniteField::FiniteField(int q) : q_(q) {
  if (q > kMaxOrder)
    throw std::invalid_argument("finite_field: q must be at most 64, got " + std::to_string(q));
  std::tie(p_, k_) = prime_power_decomposition(q);
  if (!p_) throw std::invalid_argument("finite_field: " + std::to_string(q) + " is not a prime power");

  modulus_ = smallest_irreducible(p_, k_);
  add_.resize(q * q);
  mul_.resize(q * q);
  for (int a = 0; a < q; ++a) {
    const Poly pa = digits(a, p_, k_);
    for (int b = 0; b < q; ++b) {
      const Poly pb = digits(b, p_, k_);
      Poly sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
      Poly prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
      Poly reduced = poly_mod(prod, modulus_, p_);
      reduced.resize(k_);
      add_[a * q + b] = static_cast<std::uint8_t>(undigits(sum, p_));
      mul_[a * q + b] = static_cast<std::uint8_t>(undigits(reduced, p_));
    }
  }
}

int FiniteField::neg(int a) const {
  for (int x = 0; x < q_; ++x)
    if (add(a, x) == 0) return x;
  throw std::logic_error("FiniteField::neg: no additive inverse");
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  for (int x = 1; x < q_; ++x)
    if (mul(a, x) == 1) return x;
  throw std::logic_error("FiniteField::inv: no multiplicative inverse");
}

FiniteField finite_field(int q) { return FiniteField(q); }

}  // namespace degpow
