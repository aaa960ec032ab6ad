#pragma once

#include "lagsob/poly.hpp"
#include "lagsob/rational.hpp"

#include <cstddef>
#include <optional>

namespace lagsob {

struct RootScan {
  bool free = true;                      // p(n) != 0 for every integer n >= 0
  std::optional<std::size_t> witness;    // smallest vanishing n when !free
  Integer bound;                         // ceil of the Cauchy bound; the scan covers 0..bound
};

/// Cauchy bound 1 + max |a_i / a_d| for the moduli of the roots of p.
Rational cauchy_root_bound(const Poly& p);

/// Decides whether p vanishes at some integer in 0 .. ceil(cauchy bound).
/// Integers past the (tighter) Fujiwara bound and subranges a Sturm chain
/// shows to hold no real root are skipped; every remaining integer is
/// evaluated. Throws DomainError for the zero polynomial.
RootScan nonneg_integer_root_free(const Poly& p);

}  // namespace lagsob
