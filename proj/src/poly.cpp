#include "lagsob/poly.hpp"

#include "lagsob/errors.hpp"

#include <sstream>
#include <utility>

namespace lagsob {

Degree add_degrees(Degree a, Degree b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly::Poly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(1, 1); }

void Poly::trim() {
  while (!coeffs_.empty() && lagsob::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative(std::size_t times) const {
  if (times >= coeffs_.size()) return {};
  std::vector<Rational> out(coeffs_.size() - times);
  for (std::size_t k = times; k < coeffs_.size(); ++k) {
    // d^t/dx^t x^k = k!/(k-t)! x^(k-t)
    Rational falling = 1;
    for (std::size_t i = 0; i < times; ++i) falling *= static_cast<unsigned long>(k - i);
    out[k - times] = coeffs_[k] * falling;
  }
  return Poly(std::move(out));
}

Poly Poly::shifted(const Rational& c) const { return compose(Poly{c, 1}); }

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (lagsob::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (lagsob::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {Poly{}, *this};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational& lead = divisor.coeffs_.back();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (lagsob::is_zero(rem[k])) continue;
    Rational f = rem[k] / lead;
    quot[k - dd] = f;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= f * divisor.coeffs_[i];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (lagsob::is_zero(c)) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_num = mag.get_num() == 1;
    if (k == 0) {
      os << lagsob::to_string(mag);
      continue;
    }
    if (!unit_num) os << mag.get_num().get_str();
    os << 'x';
    if (k > 1) os << '^' << k;
    if (mag.get_den() != 1) os << '/' << mag.get_den().get_str();
  }
  return os.str();
}

Poly rising_poly(const Rational& c, std::size_t k) {
  Poly out = Poly::constant(1);
  for (std::size_t i = 0; i < k; ++i) out *= Poly{c + Rational(static_cast<unsigned long>(i)), 1};
  return out;
}

}  // namespace lagsob
