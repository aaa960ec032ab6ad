#pragma once

#include "lagsob/matrix.hpp"
#include "lagsob/poly.hpp"
#include "lagsob/sobolev.hpp"

#include <cstddef>
#include <vector>

namespace lagsob {

/// alpha-weighted rank of an m x m matrix.
///
/// With c_1..c_m the columns of M:
///   n_j = alpha + m - j  if c_{m-j+1} is not in span(c_{m-j+2}, ..., c_m), else 0;
///   Mtilde keeps, in their original order, the columns c_i outside
///   span(c_{i+1}, ..., c_m);
///   with f_1..f_m the rows of Mtilde,
///   m_j = m - j  if f_j is in span(f_{j+1}, ..., f_m), else 0   (j < m);
///   awr = sum n_j + sum m_j - m(m-1)/2.
/// span() of nothing is {0}.
struct WeightedRank {
  std::vector<long> nj;
  std::vector<long> mj;
  RationalMatrix mtilde;
  long value = 0;
};

WeightedRank weighted_rank(const RationalMatrix& M, long alpha);

struct DegreeCheck {
  Degree deg_omega;
  long awr = 0;
  bool match = false;
};

/// deg Omega against awr(M) for the instance.
DegreeCheck degree_matches_awr(const SobolevSpec& spec);

}  // namespace lagsob
