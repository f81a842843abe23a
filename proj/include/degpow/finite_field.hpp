#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace degpow {

/// Arithmetic tables for GF(q), q = p^k <= 64.
///
/// An element is the integer sum c_i p^i of its polynomial coefficients, so
/// for p = 2 it is the coefficient bit-vector. The reduction polynomial is
/// the monic irreducible of degree k whose coefficient vector
/// (c_0, c_1, ..., c_{k-1}) is lexicographically smallest.
class FiniteField {
 public:
  static constexpr int kMaxOrder = 64;

  /// Throws std::invalid_argument unless q is a prime power in [2, 64].
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }

  /// Coefficients c_0..c_k of the reduction polynomial (c_k = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const;
  int inv(int a) const;

 private:
  int q_, p_, k_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_;
};

/// Returns (p, k) with q = p^k, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power_decomposition(int q);

FiniteField finite_field(int q);

}  // namespace degpow
