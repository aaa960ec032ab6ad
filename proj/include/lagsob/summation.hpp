#pragma once

#include "lagsob/poly.hpp"
#include "lagsob/rational.hpp"

#include <span>

namespace lagsob {

/// Interpolating polynomial of degree < xs.size() through (xs[i], ys[i]).
/// The nodes must be pairwise distinct.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// The unique P with P(x) - P(x-1) = f(x) and P(0) = 0.
Poly indefinite_sum(const Poly& f);

}  // namespace lagsob
