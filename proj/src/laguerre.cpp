#include "lagsob/laguerre.hpp"

#include "lagsob/errors.hpp"

#include <mutex>

namespace lagsob {

namespace {

// C(n + alpha, n - j) = (alpha + j + 1)_{n-j} / (n-j)!
Rational laguerre_binomial(std::size_t n, std::size_t j, const Rational& alpha) {
  const std::size_t k = n - j;
  Rational out = pochhammer(alpha + Rational(static_cast<unsigned long>(j + 1)), k);
  out /= Rational(factorial(k));
  return out;
}

}  // namespace

Poly laguerre_poly(long n, const Rational& alpha) {
  if (n < 0) return {};
  const auto un = static_cast<std::size_t>(n);
  std::vector<Rational> c(un + 1);
  for (std::size_t j = 0; j <= un; ++j) {
    Rational term = laguerre_binomial(un, j, alpha) / Rational(factorial(j));
    c[j] = (j % 2 == 0) ? term : Rational(-term);
  }
  return Poly(std::move(c));
}

std::vector<Rational> laguerre_jet0(std::size_t n, const Rational& alpha, std::size_t count) {
  std::vector<Rational> jet(count);
  for (std::size_t i = 0; i < count && i <= n; ++i) {
    Rational b = laguerre_binomial(n, i, alpha);
    jet[i] = (i % 2 == 0) ? b : Rational(-b);
  }
  return jet;
}

Integer weight_moment(long beta, long k) {
  if (beta < 0 || k < 0) throw DomainError("weight_moment: beta and k must be nonnegative");
  return factorial(static_cast<std::size_t>(beta + k));
}

DiffOp dalpha_op(const Rational& alpha) {
  const Rational a1 = alpha + 1;
  return DiffOp{Poly{}, Poly{-a1, 1}, Poly{0, -1}};
}

Poly LaguerreFamily::operator()(long n) const {
  if (n < 0) return {};
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  }
  Poly p = laguerre_poly(n, alpha_);
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(n, std::move(p)).first->second;
}

}  // namespace lagsob
