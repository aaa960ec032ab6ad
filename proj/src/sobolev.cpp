#include "lagsob/sobolev.hpp"

#include "lagsob/errors.hpp"
#include "lagsob/laguerre.hpp"
#include "lagsob/roots.hpp"
#include "lagsob/summation.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <string>

namespace lagsob {

namespace {

std::vector<Rational> jet(const Poly& p, const Rational& at, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  Poly d = p;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(d(at));
    d = d.derivative();
  }
  return out;
}

Rational jet_pairing(const std::vector<Rational>& pj, const RationalMatrix& M, const std::vector<Rational>& qj) {
  Rational acc = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (is_zero(pj[i])) continue;
    for (std::size_t j = 0; j < M.cols(); ++j) acc += pj[i] * M(i, j) * qj[j];
  }
  return acc;
}

Rational ul(std::size_t k) { return Rational(static_cast<unsigned long>(k)); }

Poly assert_degree(Poly q, std::size_t n) {
  if (q.degree() != Degree(n))
    throw InconsistencyError("q_" + std::to_string(n) + " does not have degree " + std::to_string(n));
  return q;
}

RationalVector solve_betas(const std::vector<RationalVector>& r_at, std::size_t m) {
  // r_at[j][l] = R_{l+1}(n - j), j = 0..m
  RationalMatrix a(m, m);
  RationalVector b(m);
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t j = 1; j <= m; ++j) a(l, j - 1) = r_at[j][l];
    b[l] = -r_at[0][l];
  }
  return solve(a, b);
}

}  // namespace

int casorati_orientation(std::size_t m) { return (m * (m - 1) / 2) % 2 == 0 ? 1 : -1; }

void SobolevSpec::validate() const {
  if (m == 0) throw UnsupportedRegime("m must be at least 1");
  if (!M.is_square()) throw DimensionError("M must be square");
  if (M.rows() != m) throw DimensionError("M must be m x m");
  if (alpha < static_cast<long>(m)) throw UnsupportedRegime("requires alpha >= m");
}

Rational SobolevForm::integral(const Poly& p) const {
  Rational acc = 0;
  const auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!is_zero(c[k])) acc += c[k] * moment(k);
  return acc;
}

Rational SobolevForm::operator()(const Poly& p, const Poly& q) const {
  const std::size_t m = M.rows();
  return integral(p * q) + jet_pairing(jet(p, lambda, m), M, jet(q, lambda, m));
}

RSystem build_R(const SobolevSpec& spec) {
  spec.validate();
  const std::size_t m = spec.m;
  const auto alpha = static_cast<std::size_t>(spec.alpha);
  const Poly gamma_ratio = rising_poly(1, alpha);  // Gamma(alpha+1+x) / Gamma(1+x)
  RSystem r;
  r.polys.reserve(m);
  for (std::size_t l = 1; l <= m; ++l) {
    Rational lead(factorial(alpha - m + l - 1));
    lead /= Rational(factorial(m - l));
    Poly mass;
    for (std::size_t i = 0; i < m; ++i) {
      // column l-1: <p_n, x^{l-1}> pairs the jet of p_n with M(., l-1)
      const Rational& entry = spec.M(i, l - 1);
      if (is_zero(entry)) continue;
      Rational c = entry / Rational(factorial(alpha + i));
      if (i % 2 == 1) c = -c;
      mass += rising_poly(Rational(1) - ul(i), i) * c;
    }
    Poly rl = rising_poly(1, m - l) * lead;
    rl += gamma_ratio * mass * Rational(factorial(l - 1));
    r.polys.push_back(std::move(rl));
  }
  return r;
}

CasoratiData casorati(const RSystem& r, std::size_t m) {
  if (r.polys.size() != m) throw DimensionError("casorati: expected m polynomials");
  std::vector<Rational> shifts;
  for (std::size_t j = 1; j <= m; ++j) shifts.push_back(-ul(j));
  CasoratiData out;
  out.omega = poly_det(shift_matrix(r.polys, shifts)) * Rational(casorati_orientation(m));
  if (out.omega.is_zero()) {
    out.root_free = false;
    out.witness = 0;
    return out;
  }
  const RootScan scan = nonneg_integer_root_free(out.omega);
  out.root_free = scan.free;
  out.witness = scan.witness;
  return out;
}

Poly build_qn(std::size_t n, const SobolevSpec& spec, const RSystem& r) {
  const std::size_t m = spec.m;
  const Rational alpha(spec.alpha);
  PolyMatrix a(m + 1, m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    const long idx = static_cast<long>(n) - static_cast<long>(j);
    a(0, j) = laguerre_poly(idx, alpha);
    for (std::size_t i = 1; i <= m; ++i) a(i, j) = Poly::constant(r.polys[i - 1](Rational(idx)));
  }
  return assert_degree(poly_det(a) * Rational(casorati_orientation(m)), n);
}

RationalVector betas_via_system(std::size_t n, const RSystem& r) {
  const std::size_t m = r.polys.size();
  std::vector<RationalVector> r_at(m + 1, RationalVector(m));
  for (std::size_t j = 0; j <= m; ++j)
    for (std::size_t l = 0; l < m; ++l)
      r_at[j][l] = r.polys[l](Rational(static_cast<long>(n) - static_cast<long>(j)));
  return solve_betas(r_at, m);
}

SobolevForm laguerre_form(const SobolevSpec& spec) {
  spec.validate();
  const long beta = spec.alpha - static_cast<long>(spec.m);
  return SobolevForm{0, [beta](std::size_t k) { return Rational(weight_moment(beta, static_cast<long>(k))); },
                     spec.M};
}

Rational sobolev_form(const Poly& p, const Poly& q, const SobolevSpec& spec) { return laguerre_form(spec)(p, q); }

Rational laguerre_w(long n, std::size_t i, const SobolevSpec& spec) {
  if (i >= spec.m) throw DomainError("laguerre_w: index must be below m");
  const std::size_t k = spec.m - i - 1;
  Rational out = pochhammer(Rational(n + 1), k);
  out /= Rational(factorial(k));
  out *= Rational(factorial(static_cast<std::size_t>(spec.alpha) - spec.m + i));
  return out;
}

ConstructionResult construct(const SobolevSpec& spec, std::size_t n_max) {
  const RSystem r = build_R(spec);
  const CasoratiData cas = casorati(r, spec.m);
  if (!cas.root_free)
    throw PreconditionError("Casorati determinant vanishes at n = " + std::to_string(cas.witness.value_or(0)));
  ConstructionResult out{{}, {}, laguerre_form(spec), spec};
  out.qpolys.reserve(n_max + 1);
  out.betas.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.qpolys.push_back(build_qn(n, spec, r));
    out.betas.push_back(betas_via_system(n, r));
  }
  return out;
}

Rational general_w(const GeneralSobolevSpec& spec, std::size_t n, std::size_t i) {
  if (n >= spec.basis.size()) throw DomainError("general_sobolev: basis does not reach p_" + std::to_string(n));
  Poly shift = Poly::constant(1);
  const Poly linear{-spec.lambda, 1};
  for (std::size_t k = 0; k < i; ++k) shift *= linear;
  const Poly integrand = shift * spec.basis[n];
  const auto c = integrand.coefficients();
  if (c.size() > spec.nu_moments.size())
    throw DomainError("general_sobolev: moments of nu do not reach degree " + std::to_string(c.size() - 1));
  Rational acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * spec.nu_moments[k];
  return acc;
}

namespace {

RationalVector general_R_nonneg(const GeneralSobolevSpec& spec, std::size_t n) {
  const std::size_t m = spec.M.rows();
  const std::vector<Rational> pj = jet(spec.basis.at(n), spec.lambda, m);
  RationalVector out(m);
  for (std::size_t l = 1; l <= m; ++l) {
    Rational mass = 0;
    for (std::size_t i = 0; i < m; ++i) mass += spec.M(i, l - 1) * pj[i];
    out[l - 1] = general_w(spec, n, l - 1) + Rational(factorial(l - 1)) * mass;
  }
  return out;
}

}  // namespace

RationalVector general_R(const GeneralSobolevSpec& spec, long n) {
  const std::size_t m = spec.M.rows();
  if (n >= 0) {
    if (static_cast<std::size_t>(n) >= spec.basis.size())
      throw DomainError("general_sobolev: basis does not reach p_" + std::to_string(n));
    return general_R_nonneg(spec, static_cast<std::size_t>(n));
  }
  const auto k = static_cast<std::size_t>(-n);
  if (k > m) throw DomainError("general_sobolev: R needed only down to index -m");
  if (spec.negative_r) {
    RationalVector out(m);
    for (std::size_t l = 0; l < m; ++l) out[l] = (*spec.negative_r)(l, k - 1);
    return out;
  }
  if (!spec.extrapolation_degree)
    throw DomainError("general_sobolev: no rule for R at negative indices");
  const std::size_t d = *spec.extrapolation_degree;
  std::vector<Rational> xs;
  std::vector<RationalVector> samples;
  for (std::size_t t = 0; t <= d; ++t) {
    xs.push_back(ul(t));
    samples.push_back(general_R(spec, static_cast<long>(t)));
  }
  RationalVector out(m);
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<Rational> ys;
    for (const auto& s : samples) ys.push_back(s[l]);
    out[l] = interpolate(xs, ys)(Rational(n));
  }
  return out;
}

ConstructionResult general_sobolev(const GeneralSobolevSpec& spec, std::size_t n_max) {
  const std::size_t m = spec.M.rows();
  if (m == 0 || !spec.M.is_square()) throw DimensionError("general_sobolev: M must be square with m >= 1");
  if (spec.negative_r && (spec.negative_r->rows() != m || spec.negative_r->cols() != m))
    throw DimensionError("general_sobolev: negative-index table must be m x m");
  if (spec.basis.size() <= n_max) throw DomainError("general_sobolev: basis does not reach p_N");
  for (std::size_t n = 0; n < spec.basis.size(); ++n)
    if (spec.basis[n].degree() != Degree(n)) throw DomainError("general_sobolev: basis[n] must have degree n");

  // R table indexed by n + m, n = -m .. n_max.
  std::vector<RationalVector> table;
  for (long n = -static_cast<long>(m); n <= static_cast<long>(n_max); ++n) table.push_back(general_R(spec, n));

  std::vector<Rational> moments = spec.nu_moments;
  ConstructionResult out{{},
                         {},
                         SobolevForm{spec.lambda,
                                     [moments](std::size_t k) {
                                       if (k >= moments.size())
                                         throw DomainError("moments of nu do not reach degree " + std::to_string(k));
                                       return moments[k];
                                     },
                                     spec.M},
                         std::nullopt};
  for (std::size_t n = 0; n <= n_max; ++n) {
    PolyMatrix a(m + 1, m + 1);
    std::vector<RationalVector> r_at;
    for (std::size_t j = 0; j <= m; ++j) {
      const long idx = static_cast<long>(n) - static_cast<long>(j);
      a(0, j) = idx >= 0 ? spec.basis[static_cast<std::size_t>(idx)] : Poly{};
      const RationalVector& rv = table[static_cast<std::size_t>(idx + static_cast<long>(m))];
      for (std::size_t i = 1; i <= m; ++i) a(i, j) = Poly::constant(rv[i - 1]);
      r_at.push_back(rv);
    }
    out.qpolys.push_back(assert_degree(poly_det(a) * Rational(casorati_orientation(m)), n));
    out.betas.push_back(solve_betas(r_at, m));
  }
  return out;
}

GeneralSobolevSpec laguerre_general_spec(const SobolevSpec& spec, std::size_t n_max) {
  spec.validate();
  const std::size_t m = spec.m;
  const auto alpha = static_cast<std::size_t>(spec.alpha);
  const std::size_t d = alpha + m - 1;  // deg R_l <= alpha + m - 1
  const std::size_t top = std::max(n_max, d);
  const std::size_t moment_count = std::max(2 * n_max, top + m - 1) + 1;
  GeneralSobolevSpec g;
  g.lambda = 0;
  for (std::size_t k = 0; k < moment_count; ++k)
    g.nu_moments.emplace_back(weight_moment(spec.alpha - static_cast<long>(m), static_cast<long>(k)));
  const LaguerreFamily family{Rational(spec.alpha)};
  for (std::size_t n = 0; n <= top; ++n) g.basis.push_back(family(static_cast<long>(n)));
  g.M = spec.M;
  g.extrapolation_degree = d;
  return g;
}

OrthogonalityReport verify_left_orthogonality(const ConstructionResult& result, std::size_t up_to,
                                              std::size_t threads) {
  if (up_to >= result.qpolys.size()) throw DomainError("verify_left_orthogonality: q_n not built up to requested n");
  OrthogonalityReport report;
  report.up_to = up_to;
  report.diagonal.resize(up_to + 1);
  std::vector<std::vector<OrthogonalityIssue>> per_n(up_to + 1);
  detail::parallel_for(up_to + 1, threads, [&](std::size_t n) {
    const Poly& q = result.qpolys[n];
    for (std::size_t l = 0; l <= n; ++l) {
      Rational v = result.form(q, Poly::monomial(1, l));
      if (l < n && !is_zero(v))
        per_n[n].push_back({n, l, OrthogonalityIssue::Kind::NonzeroBelowDegree, v});
      if (l == n) {
        if (is_zero(v)) per_n[n].push_back({n, l, OrthogonalityIssue::Kind::VanishingAtDegree, v});
        report.diagonal[n] = v;
      }
    }
  });
  for (auto& issues : per_n) report.issues.insert(report.issues.end(), issues.begin(), issues.end());
  return report;
}

}  // namespace lagsob
