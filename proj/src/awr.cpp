#include "lagsob/awr.hpp"

#include "lagsob/errors.hpp"

namespace lagsob {

WeightedRank weighted_rank(const RationalMatrix& M, long alpha) {
  if (!M.is_square()) throw DimensionError("weighted_rank: M must be square");
  const std::size_t m = M.rows();
  const long lm = static_cast<long>(m);
  if (alpha < lm) throw UnsupportedRegime("weighted_rank: requires alpha >= m");

  WeightedRank w;
  // Column span tests, right to left: n_j looks at c_{m-j+1} (0-based column m-j).
  std::vector<bool> kept(m, false);
  std::vector<RationalVector> right;
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t col = m - j;
    RationalVector c = M.col(col);
    const bool independent = !span_member(c, right);
    kept[col] = independent;
    w.nj.push_back(independent ? alpha + lm - static_cast<long>(j) : 0);
    right.push_back(std::move(c));
  }

  std::size_t width = 0;
  for (bool k : kept) width += k ? 1 : 0;
  w.mtilde = RationalMatrix(m, width);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t t = 0;
    for (std::size_t c = 0; c < m; ++c)
      if (kept[c]) w.mtilde(i, t++) = M(i, c);
  }

  // Row span tests, top down; rows of width 0 are the zero vector.
  for (std::size_t j = 1; j < m; ++j) {
    std::vector<RationalVector> below;
    for (std::size_t i = j; i < m; ++i) below.push_back(w.mtilde.row(i));
    const bool dependent = span_member(w.mtilde.row(j - 1), below);
    w.mj.push_back(dependent ? lm - static_cast<long>(j) : 0);
  }

  long sum = 0;
  for (long v : w.nj) sum += v;
  for (long v : w.mj) sum += v;
  w.value = sum - lm * (lm - 1) / 2;
  return w;
}

DegreeCheck degree_matches_awr(const SobolevSpec& spec) {
  spec.validate();
  const CasoratiData cas = casorati(build_R(spec), spec.m);
  DegreeCheck out;
  out.deg_omega = cas.omega.degree();
  out.awr = weighted_rank(spec.M, spec.alpha).value;
  out.match = out.deg_omega && static_cast<long>(*out.deg_omega) == out.awr;
  return out;
}

}  // namespace lagsob
