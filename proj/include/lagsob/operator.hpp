#pragma once

#include "lagsob/diffop.hpp"
#include "lagsob/poly.hpp"
#include "lagsob/sobolev.hpp"

#include <cstddef>
#include <vector>

namespace lagsob {

/// M_h(x) = orientation(m) sum_{j=1}^m (-1)^{h+j} S(x+j) det(R_l(x-r)),
/// l != h, r in {1-j, ..., m-j} \ {0}. Throws DomainError unless 1 <= h <= m.
Poly build_Mh(std::size_t h, const Poly& S, const RSystem& r);

struct OperatorBundle {
  Poly S;
  Poly omega;
  /// P_S(x) - P_S(x-1) = S(x) Omega(x), P_S(0) = 0.
  Poly PS;
  /// Mh[h-1] = M_h.
  std::vector<Poly> Mh;
  RSystem R;
  /// T1 = P_S(D_alpha), T2 = sum_h M_h(D_alpha) d/dx R_h(D_alpha), D = T1 + T2.
  DiffOp T1;
  DiffOp T2;
  DiffOp D;

  Rational eigenvalue(std::size_t n) const { return PS(Rational(static_cast<unsigned long>(n))); }
};

/// Operator pieces for given P_S, M_h and R_h with D_p = D_alpha and the
/// Laguerre D-operator d/dx. Used by assemble_DqS and by callers that
/// perturb the ingredients.
OperatorBundle build_operator(long alpha, Poly S, Poly omega, Poly PS, std::vector<Poly> Mh, RSystem R);

/// D_{q,S} = P_S(D_alpha) + sum_h M_h(D_alpha) o d/dx o R_h(D_alpha).
/// Throws PreconditionError when Omega vanishes at a nonnegative integer,
/// InconsistencyError if the assembled order differs from
/// 2 (deg S + deg Omega + 1) or D leaves the degree-preserving algebra.
OperatorBundle assemble_DqS(const SobolevSpec& spec, const Poly& S);

struct EigenResidual {
  std::size_t n = 0;
  Rational eigenvalue;
  Poly residual;  // D(q_n) - P_S(n) q_n
};

struct EigenReport {
  std::vector<EigenResidual> entries;
  bool passed() const;
  std::vector<std::size_t> failing() const;
};

EigenReport verify_eigen(const OperatorBundle& bundle, const ConstructionResult& result, std::size_t up_to,
                         std::size_t threads = 1);

}  // namespace lagsob
