#pragma once

#include "lagsob/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lagsob {

/// Degree of a polynomial; `std::nullopt` stands for the degree of the zero
/// polynomial (minus infinity). `std::optional` orders nullopt below every
/// engaged value, which is the ordering minus infinity needs.
using Degree = std::optional<std::size_t>;

/// deg f + deg g with minus infinity absorbing.
Degree add_degrees(Degree a, Degree b);

/// Univariate polynomial over Q, coefficients ascending by power.
/// Trailing zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> ascending);
  Poly(std::initializer_list<Rational> ascending);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t power);
  /// The polynomial x.
  static Poly x();

  Degree degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& at) const;

  Poly derivative(std::size_t times = 1) const;
  /// p(x + c).
  Poly shifted(const Rational& c) const;
  /// p(q(x)).
  Poly compose(const Poly& inner) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Quotient and remainder; divisor must be nonzero.
  struct DivMod;
  DivMod divmod(const Poly& divisor) const;
  /// Exact quotient; throws DomainError if the remainder is nonzero.
  Poly exact_div(const Poly& divisor) const;

  /// "-x^2/2 + 3x - 1" style rendering, descending powers.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct Poly::DivMod {
  Poly quotient;
  Poly remainder;
};

/// (x + c)_k = (x+c)(x+c+1)...(x+c+k-1) as a polynomial in x.
Poly rising_poly(const Rational& c, std::size_t k);

}  // namespace lagsob
