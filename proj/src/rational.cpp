#include "lagsob/rational.hpp"

#include "lagsob/errors.hpp"

#include <cctype>
#include <string>

namespace lagsob {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("malformed rational: \"" + std::string(text) + "\"");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer factorial(std::size_t k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

Rational pochhammer(const Rational& a, std::size_t k) {
  Rational out = 1;
  Rational term = a;
  for (std::size_t i = 0; i < k; ++i) {
    out *= term;
    term += 1;
  }
  return out;
}

Rational binomial(const Rational& top, std::size_t k) {
  // C(t, k) = t (t-1) ... (t-k+1) / k!
  Rational out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= top - Rational(static_cast<long>(i));
  out /= Rational(factorial(k));
  return out;
}

}  // namespace lagsob
