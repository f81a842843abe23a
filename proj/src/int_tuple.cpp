#include "degpow/int_tuple.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "degpow/exact_int.hpp"

namespace degpow {

ExactInt ipow(long long base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("ipow: negative exponent");
  ExactInt result = 1;
  ExactInt b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

IntTuple::IntTuple(std::initializer_list<int> values)
    : IntTuple(std::vector<int>(values)) {}

IntTuple::IntTuple(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("IntTuple: empty tuple");
  if (std::any_of(values_.begin(), values_.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("IntTuple: negative entry");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

long long IntTuple::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0LL);
}

std::string IntTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  out += ')';
  return out;
}

}  // namespace degpow
