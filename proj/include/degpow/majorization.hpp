#pragma once

#include <string_view>

#include "degpow/exact_int.hpp"
#include "degpow/int_tuple.hpp"

namespace degpow {

/// True iff x is weakly majorized by y: every prefix sum of x is at most the
/// matching prefix sum of y. Throws on length mismatch.
bool weakly_majorizes(const IntTuple& y, const IntTuple& x);

/// Weak majorization with equal totals.
bool majorizes(const IntTuple& y, const IntTuple& x);

/// Sum of x_i^p.
ExactInt p_power_norm(const IntTuple& x, int p);

enum class Prop1Verdict { holds_strict, holds_equal, inapplicable, violation };

std::string_view to_string(Prop1Verdict v);

/// Evaluates the power-sum comparison implied by x weakly majorized by y.
/// `violation` means the norm order contradicted the majorization (or equal
/// norms for distinct tuples); it should never be returned. Requires p > 1.
Prop1Verdict prop1_check(const IntTuple& x, const IntTuple& y, int p);

}  // namespace degpow
