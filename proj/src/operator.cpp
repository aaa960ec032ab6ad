#include "lagsob/operator.hpp"

#include "lagsob/errors.hpp"
#include "lagsob/laguerre.hpp"
#include "lagsob/matrix.hpp"
#include "lagsob/roots.hpp"
#include "lagsob/summation.hpp"
#include "parallel.hpp"

#include <string>
#include <utility>

namespace lagsob {

Poly build_Mh(std::size_t h, const Poly& S, const RSystem& r) {
  const std::size_t m = r.polys.size();
  if (h < 1 || h > m) throw DomainError("build_Mh: h must lie in 1..m");
  std::vector<Poly> rows;
  for (std::size_t l = 1; l <= m; ++l)
    if (l != h) rows.push_back(r.polys[l - 1]);
  Poly out;
  for (std::size_t j = 1; j <= m; ++j) {
    // R_l(x - r) is the shift by -r
    std::vector<Rational> shifts;
    for (long rr = 1 - static_cast<long>(j); rr <= static_cast<long>(m) - static_cast<long>(j); ++rr)
      if (rr != 0) shifts.emplace_back(-rr);
    Poly term = S.shifted(Rational(static_cast<unsigned long>(j))) * poly_det(shift_matrix(rows, shifts));
    out += ((h + j) % 2 == 0) ? term : -term;
  }
  return out * Rational(casorati_orientation(m));
}

OperatorBundle build_operator(long alpha, Poly S, Poly omega, Poly PS, std::vector<Poly> Mh, RSystem R) {
  if (Mh.size() != R.polys.size()) throw DimensionError("build_operator: need one M_h per R_h");
  const DiffOp dp = dalpha_op(Rational(alpha));
  const DiffOp d = DiffOp::derivative();
  OperatorBundle b{std::move(S), std::move(omega), std::move(PS), std::move(Mh), std::move(R), {}, {}, {}};
  b.T1 = poly_of_op(b.PS, dp);
  for (std::size_t h = 0; h < b.Mh.size(); ++h)
    b.T2 += compose(poly_of_op(b.Mh[h], dp), compose(d, poly_of_op(b.R.polys[h], dp)));
  b.D = b.T1 + b.T2;
  return b;
}

OperatorBundle assemble_DqS(const SobolevSpec& spec, const Poly& S) {
  RSystem r = build_R(spec);
  CasoratiData cas = casorati(r, spec.m);
  if (!cas.root_free)
    throw PreconditionError("Casorati determinant vanishes at n = " + std::to_string(cas.witness.value_or(0)));
  Poly ps = indefinite_sum(S * cas.omega);
  std::vector<Poly> mh;
  for (std::size_t h = 1; h <= spec.m; ++h) mh.push_back(build_Mh(h, S, r));
  OperatorBundle b = build_operator(spec.alpha, S, std::move(cas.omega), std::move(ps), std::move(mh), std::move(r));

  if (!S.is_zero()) {
    const std::size_t expected = 2 * (*S.degree() + *b.omega.degree() + 1);
    if (b.D.order() != std::optional<std::size_t>(expected))
      throw InconsistencyError("D_{q,S} has order " + std::to_string(b.D.order().value_or(0)) + ", expected " +
                               std::to_string(expected));
  }
  if (!b.D.in_algebra_A()) throw InconsistencyError("D_{q,S} is not degree preserving");
  return b;
}

bool EigenReport::passed() const {
  for (const auto& e : entries)
    if (!e.residual.is_zero()) return false;
  return true;
}

std::vector<std::size_t> EigenReport::failing() const {
  std::vector<std::size_t> out;
  for (const auto& e : entries)
    if (!e.residual.is_zero()) out.push_back(e.n);
  return out;
}

EigenReport verify_eigen(const OperatorBundle& bundle, const ConstructionResult& result, std::size_t up_to,
                         std::size_t threads) {
  if (up_to >= result.qpolys.size()) throw DomainError("verify_eigen: q_n not built up to requested n");
  EigenReport report;
  report.entries.resize(up_to + 1);
  detail::parallel_for(up_to + 1, threads, [&](std::size_t n) {
    const Poly& q = result.qpolys[n];
    Rational lambda = bundle.eigenvalue(n);
    report.entries[n] = EigenResidual{n, lambda, bundle.D(q) - q * lambda};
  });
  return report;
}

}  // namespace lagsob
