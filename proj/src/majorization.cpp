#include "degpow/majorization.hpp"

#include <stdexcept>

namespace degpow {

namespace {

void check_lengths(const IntTuple& a, const IntTuple& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("majorization: tuple lengths differ (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
}

}  // namespace

bool weakly_majorizes(const IntTuple& y, const IntTuple& x) {
  check_lengths(x, y);
  long long px = 0, py = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    px += x[i];
    py += y[i];
    if (px > py) return false;
  }
  return true;
}

bool majorizes(const IntTuple& y, const IntTuple& x) {
  return weakly_majorizes(y, x) && x.sum() == y.sum();
}

ExactInt p_power_norm(const IntTuple& x, int p) {
  if (p < 1) throw std::invalid_argument("p_power_norm: p must be >= 1");
  ExactInt total = 0;
  for (int v : x) total += ipow(v, p);
  return total;
}

std::string_view to_string(Prop1Verdict v) {
  switch (v) {
    case Prop1Verdict::holds_strict: return "holds_strict";
    case Prop1Verdict::holds_equal: return "holds_equal";
    case Prop1Verdict::inapplicable: return "inapplicable";
    case Prop1Verdict::violation: return "VIOLATION";
  }
  return "?";
}

Prop1Verdict prop1_check(const IntTuple& x, const IntTuple& y, int p) {
  check_lengths(x, y);
  if (p <= 1) throw std::invalid_argument("prop1_check: p must be > 1");
  if (!weakly_majorizes(y, x)) return Prop1Verdict::inapplicable;
  const ExactInt nx = p_power_norm(x, p);
  const ExactInt ny = p_power_norm(y, p);
  if (nx < ny) return x == y ? Prop1Verdict::violation : Prop1Verdict::holds_strict;
  if (nx == ny) return x == y ? Prop1Verdict::holds_equal : Prop1Verdict::violation;
  return Prop1Verdict::violation;
}

}  // namespace degpow
