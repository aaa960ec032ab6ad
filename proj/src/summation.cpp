#include "lagsob/summation.hpp"

#include "lagsob/errors.hpp"

#include <vector>

namespace lagsob {

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw DimensionError("interpolate: node/value count mismatch");
  // Newton divided differences, then Horner back to the monomial basis.
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (is_zero(gap)) throw DomainError("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  Poly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc *= Poly{-xs[i], 1};
    acc += Poly::constant(dd[i]);
  }
  return acc;
}

Poly indefinite_sum(const Poly& f) {
  if (f.is_zero()) return {};
  const std::size_t d = *f.degree();
  // Nodes -1, 0, ..., d carry the partial sums 0, f(0), f(0)+f(1), ...
  std::vector<Rational> xs, ys;
  xs.reserve(d + 2);
  ys.reserve(d + 2);
  Rational partial = 0;
  xs.emplace_back(-1);
  ys.push_back(partial);
  for (std::size_t k = 0; k <= d; ++k) {
    const Rational at(static_cast<unsigned long>(k));
    partial += f(at);
    xs.push_back(at);
    ys.push_back(partial);
  }
  Poly p = interpolate(xs, ys);
  return p - Poly::constant(p(Rational(0)));
}

}  // namespace lagsob
