#include "lagsob/roots.hpp"

#include "lagsob/errors.hpp"

#include <algorithm>
#include <vector>

namespace lagsob {

namespace {

Poly monic(const Poly& p) { return (Rational(1) / p.leading()) * p; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Integer multiple (positive factor) of p, so signs are unchanged.
std::vector<Integer> integer_scaled(const Poly& p) {
  Integer l = 1;
  for (const Rational& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const Rational& c : p.coefficients()) out.push_back(Integer(c.get_num() * (l / c.get_den())));
  return out;
}

// Sturm chain of the square-free part of p. For a < b that are not roots,
// sign_changes(a) - sign_changes(b) counts the real roots in (a, b).
class SturmChain {
 public:
  explicit SturmChain(const Poly& p) {
    Poly s = p.degree() == Degree(0) ? p : p.exact_div(gcd(p, p.derivative()));
    std::vector<Poly> chain{s};
    if (s.degree() > Degree(0)) chain.push_back(s.derivative());
    while (chain.back().degree() > Degree(0)) {
      Poly r = -chain[chain.size() - 2].divmod(chain.back()).remainder;
      if (r.is_zero()) break;
      chain.push_back(std::move(r));
    }
    for (const Poly& c : chain) chain_.push_back(integer_scaled(c));
  }

  /// Roots in the open interval (a/den, b/den), den > 0, or nullopt when an
  /// endpoint is a root.
  std::optional<long> roots_between(const Integer& a, const Integer& b, const Integer& den) const {
    if (sign_at(chain_.front(), a, den) == 0 || sign_at(chain_.front(), b, den) == 0) return std::nullopt;
    return sign_changes(a, den) - sign_changes(b, den);
  }

 private:
  // sign of c(num/den) from den^deg c(num/den), den > 0
  static int sign_at(const std::vector<Integer>& c, const Integer& num, const Integer& den) {
    Integer acc = c.back();
    Integer dpow = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      dpow *= den;
      acc = acc * num + c[i] * dpow;
    }
    return sgn(acc);
  }

  long sign_changes(const Integer& num, const Integer& den) const {
    long changes = 0;
    int prev = 0;
    for (const auto& c : chain_) {
      const int v = sign_at(c, num, den);
      if (v == 0) continue;
      if (prev != 0 && v != prev) ++changes;
      prev = v;
    }
    return changes;
  }

  std::vector<std::vector<Integer>> chain_;
};

// Fujiwara bound 2 max_k |a_{d-k}/a_d|^{1/k} (a_0 halved), rounded up.
// Much tighter than the Cauchy bound when the leading coefficient is small.
Integer fujiwara_bound(const Poly& p) {
  const std::size_t d = *p.degree();
  Integer best = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    Rational r = abs(p.coeff(d - k) / p.leading());
    if (k == d) r /= 2;
    Integer up, root;
    mpz_cdiv_q(up.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (mpz_root(root.get_mpz_t(), up.get_mpz_t(), static_cast<unsigned long>(k)) == 0) ++root;
    if (root > best) best = root;
  }
  return 2 * best;
}

// Smallest integer root of p in [lo, hi]. Intervals the chain proves
// root-free are skipped; every other integer is evaluated.
std::optional<Integer> first_root(const Poly& p, const SturmChain& sturm, const Integer& lo, const Integer& hi) {
  if (lo > hi) return std::nullopt;
  const std::optional<long> count = sturm.roots_between(Integer(2 * lo - 1), Integer(2 * hi + 1), Integer(2));
  if (count && *count == 0) return std::nullopt;
  if (hi - lo < 8) {
    for (Integer n = lo; n <= hi; ++n)
      if (is_zero(p(Rational(n)))) return n;
    return std::nullopt;
  }
  const Integer mid = (lo + hi) / 2;
  if (auto left = first_root(p, sturm, lo, mid)) return left;
  return first_root(p, sturm, Integer(mid + 1), hi);
}

}  // namespace

Rational cauchy_root_bound(const Poly& p) {
  if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
  const Rational lead = p.leading();
  Rational best = 0;
  const std::size_t d = *p.degree();
  for (std::size_t i = 0; i < d; ++i) {
    Rational r = abs(p.coeff(i) / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

RootScan nonneg_integer_root_free(const Poly& p) {
  if (p.is_zero()) throw DomainError("nonneg_integer_root_free: zero polynomial vanishes everywhere");
  const Rational bound = cauchy_root_bound(p);
  Integer last;
  mpz_cdiv_q(last.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  RootScan scan;
  scan.bound = last;
  // no root exceeds the Fujiwara bound either, so integers past it need no test
  const Integer stop = p.degree() == Degree(0) ? Integer(0) : std::min(last, fujiwara_bound(p));
  if (const auto root = first_root(p, SturmChain(p), Integer(0), stop)) {
    scan.free = false;
    scan.witness = root->get_ui();
  }
  return scan;
}

}  // namespace lagsob
