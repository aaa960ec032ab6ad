#pragma once

#include "lagsob/matrix.hpp"
#include "lagsob/poly.hpp"
#include "lagsob/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace lagsob {

/// Laguerre-Sobolev instance: int p q x^{alpha-m} e^{-x} dx + P(0) M Q(0)^T,
/// P(0) the jet (p(0), ..., p^{(m-1)}(0)).
struct SobolevSpec {
  long alpha = 0;
  std::size_t m = 1;
  RationalMatrix M;

  /// Throws DimensionError for a non-square or wrongly sized M and
  /// UnsupportedRegime when alpha < m or m == 0.
  void validate() const;
};

/// The polynomials R_1, ..., R_m; polys[l-1] holds R_l.
struct RSystem {
  std::vector<Poly> polys;
};

struct CasoratiData {
  Poly omega;
  bool root_free = false;
  std::optional<std::size_t> witness;
};

/// A general discrete Sobolev bilinear form
///   <p, q> = int p q dnu + P(lambda) M Q(lambda)^T
/// with nu given through its moments int x^k dnu.
struct SobolevForm {
  Rational lambda;
  std::function<Rational(std::size_t)> moment;
  RationalMatrix M;

  Rational integral(const Poly& p) const;
  Rational operator()(const Poly& p, const Poly& q) const;
};

/// General input: mass point lambda, the moments of nu, and polynomials
/// p_n orthogonal with respect to (x - lambda)^m nu.
///
/// The determinant defining q_n samples R_l at negative indices n - j. Those
/// values are not determined by p_n = 0 for n < 0, so they are supplied
/// either as a table (`negative_r(l-1, k-1)` = R_l(-k), k = 1..m) or by
/// polynomial extrapolation of R_l(0), ..., R_l(d) with d =
/// `extrapolation_degree`.
struct GeneralSobolevSpec {
  Rational lambda;
  std::vector<Rational> nu_moments;
  std::vector<Poly> basis;
  RationalMatrix M;
  std::optional<RationalMatrix> negative_r;
  std::optional<std::size_t> extrapolation_degree;
};

struct ConstructionResult {
  std::vector<Poly> qpolys;
  /// betas[n] = (beta_{n,1}, ..., beta_{n,m}) with q_n = Omega(n) (p_n + sum_j beta_{n,j} p_{n-j}).
  std::vector<RationalVector> betas;
  SobolevForm form;
  std::optional<SobolevSpec> spec;
};

/// R_l(x) = (alpha-m+l-1)!/(m-l)! (x+1)_{m-l}
///          + (l-1)! (x+1)_alpha sum_i (-1)^i M_{i,l-1}/(alpha+i)! (x-i+1)_i,
/// so that R_l(n) = <L_n^alpha, x^{l-1}>. The column index l-1 is what makes
/// q_n left orthogonal when M is not symmetric.
RSystem build_R(const SobolevSpec& spec);

/// Orientation factor (-1)^{m(m-1)/2}: the sign of listing the Casorati
/// columns by increasing argument, R_i(x-m), ..., R_i(x-1). Omega, every M_h
/// and every q_n carry it, so q_n = Omega(n) (p_n + ...) keeps holding and
/// D_{q,S} is scaled as a whole.
int casorati_orientation(std::size_t m);

/// Omega(x) = orientation(m) * det(R_i(x - j))_{i,j=1..m} and its
/// nonnegative-integer root scan.
CasoratiData casorati(const RSystem& r, std::size_t m);

/// orientation(m) times the (m+1)x(m+1) determinant with first row
/// L_{n-j}^alpha and rows R_i(n - j), j = 0..m. Throws InconsistencyError
/// if deg q_n != n.
Poly build_qn(std::size_t n, const SobolevSpec& spec, const RSystem& r);

/// Solves sum_j phi_j R_l(n-j) = -R_l(n), l = 1..m.
RationalVector betas_via_system(std::size_t n, const RSystem& r);

/// The Laguerre-Sobolev bilinear form of `spec` evaluated exactly.
Rational sobolev_form(const Poly& p, const Poly& q, const SobolevSpec& spec);
SobolevForm laguerre_form(const SobolevSpec& spec);

/// w_{n,i} = int x^i L_n^alpha x^{alpha-m} e^{-x} dx in closed form,
/// (n+1)_{m-i-1} / (m-i-1)! * (alpha-m+i)!, for 0 <= i < m. Valid as a
/// polynomial in n, so negative n is allowed.
Rational laguerre_w(long n, std::size_t i, const SobolevSpec& spec);

/// q_0 .. q_N for `spec`. Throws PreconditionError if Omega vanishes at a
/// nonnegative integer.
ConstructionResult construct(const SobolevSpec& spec, std::size_t n_max);

/// w_{n,i} = int (x - lambda)^i p_n dnu from the moment list.
Rational general_w(const GeneralSobolevSpec& spec, std::size_t n, std::size_t i);

/// R_l(n) for l = 1..m; n may be negative (see GeneralSobolevSpec).
RationalVector general_R(const GeneralSobolevSpec& spec, long n);

/// q_0 .. q_N through the general determinant. DomainError when the
/// moments or basis do not cover the requested range.
ConstructionResult general_sobolev(const GeneralSobolevSpec& spec, std::size_t n_max);

/// Laguerre data (lambda = 0, nu = x^{alpha-m} e^{-x}, p_n = L_n^alpha) for
/// `spec`, enough for q_0 .. q_N, negative indices by extrapolation.
GeneralSobolevSpec laguerre_general_spec(const SobolevSpec& spec, std::size_t n_max);

struct OrthogonalityIssue {
  enum class Kind { NonzeroBelowDegree, VanishingAtDegree };
  std::size_t n = 0;
  std::size_t l = 0;
  Kind kind = Kind::NonzeroBelowDegree;
  Rational residual;
};

struct OrthogonalityReport {
  std::size_t up_to = 0;
  /// <q_n, x^n> for n = 0..up_to.
  std::vector<Rational> diagonal;
  std::vector<OrthogonalityIssue> issues;
  bool passed() const { return issues.empty(); }
};

/// Checks <q_n, x^l> = 0 for l < n and <q_n, x^n> != 0 for n <= up_to.
OrthogonalityReport verify_left_orthogonality(const ConstructionResult& result, std::size_t up_to,
                                              std::size_t threads = 1);

}  // namespace lagsob
