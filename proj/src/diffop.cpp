#include "lagsob/diffop.hpp"

#include "lagsob/errors.hpp"
#include "lagsob/laguerre.hpp"

#include <algorithm>
#include <utility>

namespace lagsob {

DiffOp::DiffOp(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DiffOp::DiffOp(std::initializer_list<Poly> coeffs) : coeffs_(coeffs) { trim(); }

DiffOp DiffOp::identity() { return DiffOp{Poly::constant(1)}; }

DiffOp DiffOp::derivative() { return DiffOp{Poly{}, Poly::constant(1)}; }

DiffOp DiffOp::multiply(const Poly& p) { return DiffOp{p}; }

void DiffOp::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> DiffOp::order() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Poly& DiffOp::coeff(std::size_t j) const {
  static const Poly zero;
  return j < coeffs_.size() ? coeffs_[j] : zero;
}

bool DiffOp::in_algebra_A() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j].degree() > Degree(j)) return false;
  return true;
}

Poly DiffOp::apply(const Poly& p) const {
  Poly out;
  Poly d = p;
  for (std::size_t j = 0; j < coeffs_.size() && !d.is_zero(); ++j) {
    if (!coeffs_[j].is_zero()) out += coeffs_[j] * d;
    d = d.derivative();
  }
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  trim();
  return *this;
}

DiffOp operator-(DiffOp a, const DiffOp& b) { return a += (Rational(-1) * b); }

DiffOp operator*(const Rational& c, DiffOp a) {
  for (auto& f : a.coeffs_) f *= c;
  a.trim();
  return a;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // f_i D^i o g_k D^k = sum_t C(i,t) f_i g_k^{(t)} D^{i-t+k}
  const std::size_t oa = *a.order(), ob = *b.order();
  std::vector<Poly> out(oa + ob + 1);
  for (std::size_t k = 0; k <= ob; ++k) {
    const Poly& g = b.coeff(k);
    if (g.is_zero()) continue;
    std::vector<Poly> g_derivs{g};
    for (std::size_t i = 0; i <= oa; ++i) {
      const Poly& f = a.coeff(i);
      if (f.is_zero()) continue;
      Integer c = 1;  // C(i, t)
      for (std::size_t t = 0; t <= i; ++t) {
        if (t > 0) c = c * static_cast<unsigned long>(i - t + 1) / static_cast<unsigned long>(t);
        while (g_derivs.size() <= t) g_derivs.push_back(g_derivs.back().derivative());
        const Poly& gt = g_derivs[t];
        if (gt.is_zero()) break;
        out[i - t + k] += (f * gt) * Rational(c);
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp poly_of_op(const Poly& p, const DiffOp& a) {
  DiffOp acc;
  const auto coeffs = p.coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = compose(acc, a);
    acc += DiffOp::multiply(Poly::constant(coeffs[k]));
  }
  return acc;
}

Rational DOperatorSpec::xi(long n, std::size_t i) const {
  Rational out = 1;
  for (std::size_t j = 0; j < i; ++j) out *= epsilon(n - static_cast<long>(j));
  return out;
}

DOperatorSpec DOperatorSpec::laguerre() {
  return DOperatorSpec{[](long) { return Rational(-1); }};
}

Poly doperator_image(std::size_t n, const DOperatorSpec& spec, const std::function<Poly(long)>& family) {
  Poly out;
  const long ln = static_cast<long>(n);
  for (std::size_t j = 1; j <= n; ++j) {
    Rational c = spec.xi(ln, j);
    if (j % 2 == 0) c = -c;  // (-1)^{j+1}
    out += family(ln - static_cast<long>(j)) * c;
  }
  return out;
}

Poly doperator_image(std::size_t n, const Rational& alpha) {
  const LaguerreFamily family(alpha);
  Poly image = doperator_image(n, DOperatorSpec::laguerre(), [&](long k) { return family(k); });
  if (image != family(static_cast<long>(n)).derivative())
    throw InconsistencyError("D-operator image of L_n^alpha differs from its derivative");
  return image;
}

}  // namespace lagsob
