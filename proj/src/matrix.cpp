#include "lagsob/matrix.hpp"

#include "lagsob/summation.hpp"

#include <algorithm>
#include <utility>

namespace lagsob {

namespace {

// Row echelon form in place, pivoting only in the first `width` columns;
// returns (rank, sign of the row permutation).
std::pair<std::size_t, int> eliminate(std::vector<RationalVector>& rows, std::size_t width) {
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return {r, sign};
}

std::vector<RationalVector> to_rows(const RationalMatrix& a) {
  std::vector<RationalVector> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return rows;
}

Poly bareiss(PolyMatrix a) {
  const std::size_t n = a.rows();
  Poly prev = Poly::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num.exact_div(prev);
      }
    }
    prev = a(k, k);
  }
  Poly out = a(n - 1, n - 1);
  return negate ? -out : out;
}

Poly by_interpolation(const PolyMatrix& a, std::size_t degree_bound) {
  const std::size_t n = a.rows();
  std::vector<Rational> xs, ys;
  xs.reserve(degree_bound + 1);
  ys.reserve(degree_bound + 1);
  RationalMatrix values(n, n);
  for (std::size_t t = 0; t <= degree_bound; ++t) {
    const Rational at(static_cast<unsigned long>(t));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) values(i, j) = a(i, j)(at);
    xs.push_back(at);
    ys.push_back(det(values));
  }
  return interpolate(xs, ys);
}

}  // namespace

Rational det(const RationalMatrix& a) {
  if (!a.is_square()) throw DimensionError("det: matrix is not square");
  const std::size_t n = a.rows();
  auto rows = to_rows(a);
  auto [r, sign] = eliminate(rows, n);
  if (r < n) return 0;
  Rational out = sign;
  for (std::size_t i = 0; i < n; ++i) out *= rows[i][i];
  return out;
}

RationalVector solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (!a.is_square()) throw DimensionError("solve: matrix is not square");
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  const std::size_t n = a.rows();
  std::vector<RationalVector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector r = a.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  auto [r, sign] = eliminate(rows, n);
  (void)sign;
  if (r < n) throw InconsistencyError("solve: singular system");
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rows[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= rows[i][j] * x[j];
    x[i] = acc / rows[i][i];
  }
  return x;
}

std::size_t rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t width = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != width) throw DimensionError("rank: vectors of different length");
  std::vector<RationalVector> rows(vectors.begin(), vectors.end());
  return eliminate(rows, width).first;
}

std::size_t rank(const RationalMatrix& a) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return a.cols() == 0 ? 0 : rank(rows);
}

bool span_member(std::span<const Rational> v, std::span<const RationalVector> basis) {
  for (const auto& b : basis)
    if (b.size() != v.size()) throw DimensionError("span_member: vectors of different length");
  const bool v_zero = std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
  if (v_zero) return true;
  if (basis.empty()) return false;
  std::vector<RationalVector> with(basis.begin(), basis.end());
  const std::size_t before = rank(with);
  with.emplace_back(v.begin(), v.end());
  return rank(with) == before;
}

Degree det_degree_bound(const PolyMatrix& a) {
  std::size_t row_sum = 0, col_sum = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Degree best;
    for (std::size_t j = 0; j < a.cols(); ++j) best = std::max(best, a(i, j).degree());
    if (!best) return std::nullopt;
    row_sum += *best;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Degree best;
    for (std::size_t i = 0; i < a.rows(); ++i) best = std::max(best, a(i, j).degree());
    if (!best) return std::nullopt;
    col_sum += *best;
  }
  return std::min(row_sum, col_sum);
}

Poly poly_det(const PolyMatrix& a) {
  if (!a.is_square()) throw DimensionError("poly_det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return a(0, 0);
  const Degree bound = det_degree_bound(a);
  if (!bound) return {};
  if (n <= 3) return bareiss(a);
  return by_interpolation(a, *bound);
}

PolyMatrix shift_matrix(std::span<const Poly> polys, std::span<const Rational> shifts) {
  PolyMatrix out(polys.size(), shifts.size());
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < shifts.size(); ++j) out(i, j) = polys[i].shifted(shifts[j]);
  return out;
}

}  // namespace lagsob
