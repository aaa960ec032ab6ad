#pragma once

#include "lagsob/poly.hpp"
#include "lagsob/rational.hpp"

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace lagsob {

/// Differential operator sum_j f_j (d/dx)^j with polynomial coefficients.
/// Trailing zero coefficients are trimmed, so order() is the index of the
/// last stored coefficient.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<Poly> coeffs);
  DiffOp(std::initializer_list<Poly> coeffs);

  static DiffOp identity();
  /// d/dx.
  static DiffOp derivative();
  /// Multiplication by p.
  static DiffOp multiply(const Poly& p);

  /// nullopt for the zero operator.
  std::optional<std::size_t> order() const;
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Poly> coefficients() const { return coeffs_; }
  const Poly& coeff(std::size_t j) const;

  /// deg f_j <= j for every j, i.e. membership in the algebra that preserves
  /// polynomial degree.
  bool in_algebra_A() const;

  Poly apply(const Poly& p) const;
  Poly operator()(const Poly& p) const { return apply(p); }

  DiffOp& operator+=(const DiffOp& other);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b);
  friend DiffOp operator*(const Rational& c, DiffOp a);
  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  void trim();
  std::vector<Poly> coeffs_;
};

/// A o B, expanded with the Leibniz rule.
DiffOp compose(const DiffOp& a, const DiffOp& b);

/// P(A) by left Horner: (...((a_d A + a_{d-1}) A + ...) + a_0.
DiffOp poly_of_op(const Poly& p, const DiffOp& a);

/// Sequence descriptor for a D-operator: eps(n) for n >= 0.
struct DOperatorSpec {
  std::function<Rational(long)> epsilon;

  /// xi_{n,i} = eps_n eps_{n-1} ... eps_{n-i+1}, xi_{n,0} = 1.
  Rational xi(long n, std::size_t i) const;

  /// eps_n = -1, the Laguerre sequence for which the D-operator is d/dx.
  static DOperatorSpec laguerre();
};

/// Image of p_n under the D-operator built from `spec` over the family
/// `family(k)`:  sum_{j=1}^n (-1)^{j+1} eps_n ... eps_{n-j+1} p_{n-j}.
Poly doperator_image(std::size_t n, const DOperatorSpec& spec, const std::function<Poly(long)>& family);

/// Laguerre instance: the D-operator image of L_n^alpha. Throws
/// InconsistencyError if it differs from (L_n^alpha)'.
Poly doperator_image(std::size_t n, const Rational& alpha);

}  // namespace lagsob
