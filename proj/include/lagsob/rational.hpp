#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lagsob {

/// Exact rational in lowest terms with a positive denominator.
///
/// GMP keeps `mpq_class` canonical after every arithmetic operation, so the
/// invariants hold for every value produced by the library. Avoid `auto` on
/// arithmetic expressions: gmpxx returns expression templates.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", den omitted when 1.
std::string to_string(const Rational& q);

/// Accepts "a", "a/b", with optional leading '-' on the numerator.
/// Non-canonical input ("2/4") is reduced. Throws ParseError on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Integer factorial(std::size_t k);

/// Rising factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, std::size_t k);

/// Binomial coefficient C(top, k) for rational top and natural k.
Rational binomial(const Rational& top, std::size_t k);

}  // namespace lagsob
