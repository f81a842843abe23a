#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace degpow {

/// Non-increasing tuple of non-negative integers, length >= 1.
///
/// Construction sorts the input descending, so unsorted degree lists are
/// accepted as-is. Negative entries and empty input are rejected.
class IntTuple {
 public:
  IntTuple(std::initializer_list<int> values);
  explicit IntTuple(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  long long sum() const;

  /// "(4,2,2,2,2)"
  std::string to_string() const;

  friend bool operator==(const IntTuple&, const IntTuple&) = default;
  friend auto operator<=>(const IntTuple&, const IntTuple&) = default;

 private:
  std::vector<int> values_;
};

/// Degree sequences are the tuples the whole library compares.
using DegreeSequence = IntTuple;

}  // namespace degpow
