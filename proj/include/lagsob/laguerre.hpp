#pragma once

#include "lagsob/diffop.hpp"
#include "lagsob/poly.hpp"
#include "lagsob/rational.hpp"

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <vector>

namespace lagsob {

/// L_n^alpha(x) = sum_j (-x)^j / j! * C(n+alpha, n-j); zero for n < 0.
Poly laguerre_poly(long n, const Rational& alpha);

/// ((L_n^alpha)^{(i)}(0))_{i < count} from the closed form
/// (-1)^i C(n+alpha, n-i).
std::vector<Rational> laguerre_jet0(std::size_t n, const Rational& alpha, std::size_t count);

/// int_0^inf x^k x^beta e^{-x} dx = (beta+k)!. Negative input is a DomainError.
Integer weight_moment(long beta, long k);

/// D_alpha = -x d^2/dx^2 - (alpha + 1 - x) d/dx, with D_alpha L_n^alpha = n L_n^alpha.
DiffOp dalpha_op(const Rational& alpha);

/// Memoized L_n^alpha for one alpha. Safe for concurrent use.
class LaguerreFamily {
 public:
  explicit LaguerreFamily(Rational alpha) : alpha_(std::move(alpha)) {}
  LaguerreFamily(const LaguerreFamily& other) : alpha_(other.alpha_) {}

  const Rational& alpha() const { return alpha_; }
  /// Copy of L_n^alpha (zero for n < 0).
  Poly operator()(long n) const;

 private:
  Rational alpha_;
  mutable std::shared_mutex mutex_;
  mutable std::map<long, Poly> cache_;
};

}  // namespace lagsob
