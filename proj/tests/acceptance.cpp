// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include "lagsob/awr.hpp"
#include "lagsob/diffop.hpp"
#include "lagsob/golden.hpp"
#include "lagsob/laguerre.hpp"
#include "lagsob/operator.hpp"
#include "lagsob/sobolev.hpp"
#include "lagsob/summation.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <thread>

using namespace lagsob;
using lagsob::testing::Random;

namespace {

const std::size_t kThreads = std::max(1u, std::thread::hardware_concurrency());

Rational fact(long k) { return Rational(factorial(static_cast<std::size_t>(k))); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) o.require(false, "runtime limit " + std::to_string(limit_s) + " s exceeded");
  std::printf("[%s] %2d. %s (%.2f s%s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + " s").c_str() : "",
              o.pass ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

const WorkedExample& golden() { return worked_example(); }

Outcome golden_reproduction() {
  Outcome o;
  const WorkedExample& g = golden();
  const OperatorBundle b = assemble_DqS(g.spec, g.S);
  for (std::size_t l = 0; l < 3; ++l) o.require(b.R.polys[l] == g.R[l], "R_" + std::to_string(l + 1));
  o.require(b.omega == g.omega, "Omega");
  o.require(b.PS == g.PS, "P_S");
  o.require(indefinite_sum(g.omega) == g.PS, "P_S from the printed Omega");
  for (std::size_t h = 0; h < 3; ++h) o.require(b.Mh[h] == g.Mh[h], "M_" + std::to_string(h + 1));
  return o;
}

Outcome operator_order() {
  Outcome o;
  const WorkedExample& g = golden();
  const OperatorBundle b = assemble_DqS(g.spec, g.S);
  const WeightedRank w = weighted_rank(g.spec.M, g.spec.alpha);
  o.require(b.D.order() == std::optional<std::size_t>(18), "order(D) != 18");
  o.require(w.value == 8, "awr != 8");
  o.require(18 == 2 * (w.value + 1), "18 != 2(awr+1)");
  o.require(w.nj == std::vector<long>{5, 4, 0}, "nj");
  o.require(w.mj == std::vector<long>{2, 0}, "mj");
  return o;
}

Outcome eigen_golden() {
  Outcome o;
  const WorkedExample& g = golden();
  const OperatorBundle b = assemble_DqS(g.spec, g.S);
  const EigenReport rep = verify_eigen(b, construct(g.spec, 12), 12, kThreads);
  o.require(rep.entries.size() == 13, "expected n = 0..12");
  for (const auto& e : rep.entries) {
    o.require(e.residual.is_zero(), "residual at n = " + std::to_string(e.n));
    o.require(e.eigenvalue == g.PS(Rational(static_cast<long>(e.n))), "eigenvalue != P_S(n)");
  }
  return o;
}

Outcome orthogonality_golden() {
  Outcome o;
  const ConstructionResult res = construct(golden().spec, 10);
  const OrthogonalityReport rep = verify_left_orthogonality(res, 10, kThreads);
  o.require(rep.passed(), std::to_string(rep.issues.size()) + " issues");
  // independent evaluation of the form by plain moment sums
  const SobolevSpec& s = golden().spec;
  for (std::size_t n = 0; n <= 10; ++n)
    for (std::size_t l = 0; l <= n; ++l) {
      const Poly xl = lagsob::testing::xpow(l);
      Rational v = lagsob::testing::laguerre_integral(res.qpolys[n] * xl, s.alpha - static_cast<long>(s.m));
      for (std::size_t i = 0; i < s.m; ++i)
        for (std::size_t j = 0; j < s.m; ++j)
          v += lagsob::testing::jet0(res.qpolys[n], i) * s.M(i, j) * lagsob::testing::jet0(xl, j);
      o.require(l < n ? is_zero(v) : !is_zero(v), "<q_" + std::to_string(n) + ", x^" + std::to_string(l) + ">");
    }
  return o;
}

Outcome awr_table() {
  Outcome o;
  int checks = 0;
  for (long alpha = 2; alpha <= 6; ++alpha) {
    const auto d = [](long a, long b) { return RationalMatrix{{a, 0}, {0, b}}; };
    const std::string tag = " at alpha = " + std::to_string(alpha);
    o.require(weighted_rank(d(1, 0), alpha).value == alpha - 1, "diag(M00, 0)" + tag);
    o.require(weighted_rank(d(0, 1), alpha).value == alpha + 1, "diag(0, M11)" + tag);
    o.require(weighted_rank(d(1, 1), alpha).value == 2 * alpha, "diag(M00, M11)" + tag);
    checks += 3;
  }
  o.require(checks == 15, "expected 15 checks");
  return o;
}

Outcome degree_matches_rank() {
  Outcome o;
  Random rng(2718);
  int count = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (long alpha = static_cast<long>(m); alpha <= static_cast<long>(m) + 4; ++alpha)
      for (int t = 0; t < 6; ++t) {
        const SobolevSpec spec{alpha, m, rng.integer_matrix(m, m, -2, 2)};
        const DegreeCheck d = degree_matches_awr(spec);
        o.require(d.match, "mismatch at m = " + std::to_string(m) + ", alpha = " + std::to_string(alpha));
        ++count;
      }
  o.require(count >= 100, "fewer than 100 matrices");
  return o;
}

Outcome reduction() {
  Outcome o;
  for (long alpha = 1; alpha <= 5; ++alpha) {
    const SobolevSpec spec{alpha, 1, RationalMatrix(1, 1)};
    const std::string tag = " at alpha = " + std::to_string(alpha);
    const ConstructionResult res = construct(spec, 10);
    for (std::size_t n = 0; n <= 10; ++n)
      o.require(res.qpolys[n] == fact(alpha - 1) * laguerre_poly(static_cast<long>(n), alpha - 1), "q_n" + tag);
    const OperatorBundle b = assemble_DqS(spec, Poly{1});
    o.require(b.D == fact(alpha - 1) * dalpha_op(alpha - 1), "D" + tag);
    for (std::size_t n = 0; n <= 10; ++n)
      o.require(b.eigenvalue(n) == fact(alpha - 1) * Rational(static_cast<long>(n)), "eigenvalue" + tag);
    o.require(verify_eigen(b, res, 10).passed(), "eigen relation" + tag);
  }
  return o;
}

Outcome laguerre_identities() {
  Outcome o;
  Random rng(314);
  std::vector<Rational> alphas;
  while (alphas.size() < 5) {
    const Rational a = rng.rational(6, 9);
    if (a.get_den() != 1) alphas.push_back(a);
  }
  const Poly x = Poly::x();
  for (const Rational& a : alphas) {
    const auto L = [&](long n) { return laguerre_poly(n, a); };
    const DiffOp da = dalpha_op(a);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    for (long n = 0; n <= 10; ++n) {
      const std::string tag = " n = " + std::to_string(n) + ", alpha = " + to_string(a);
      o.require(x * L(n) == Rational(-(n + 1)) * L(n + 1) + (Rational(2 * n + 1) + a) * L(n) - (Rational(n) + a) * L(n - 1),
                "recurrence" + tag);
      o.require(L(n).derivative() == -laguerre_poly(n - 1, a + 1), "derivative" + tag);
      for (long beta = fl.get_si() - 2; beta <= fl.get_si(); ++beta) {
        Poly sum;
        for (long j = 0; j <= n; ++j)
          sum += pochhammer(a - beta, static_cast<std::size_t>(j)) / fact(j) * laguerre_poly(n - j, beta);
        o.require(sum == L(n), "connection" + tag);
      }
      o.require(da(L(n)) == Rational(n) * L(n), "eigen" + tag);
    }
  }
  return o;
}

Outcome degree_laws() {
  Outcome o;
  Random rng(1618);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    std::vector<std::size_t> degs;
    while (degs.size() < m) {
      const auto d = static_cast<std::size_t>(rng.integer(0, 7));
      if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
    }
    std::vector<Poly> rs;
    for (std::size_t d : degs) rs.push_back(rng.poly(d));
    std::vector<Rational> shifts;
    while (shifts.size() < m) {
      const Rational s = rng.rational(6, 3);
      if (std::find(shifts.begin(), shifts.end(), s) == shifts.end()) shifts.push_back(s);
    }
    const long mm = static_cast<long>(m);
    const long sum = static_cast<long>(std::accumulate(degs.begin(), degs.end(), std::size_t{0}));
    const Degree d1 = poly_det(shift_matrix(rs, shifts)).degree();
    o.require(d1 && static_cast<long>(*d1) == sum - mm * (mm - 1) / 2, "first law, trial " + std::to_string(trial));
    Poly alt;
    for (long j = 1; j <= mm + 1; ++j) {
      std::vector<Rational> cols;
      for (long r = 1 - j; r <= mm + 1 - j; ++r)
        if (r != 0) cols.emplace_back(r);
      const Poly dj = poly_det(shift_matrix(rs, cols));
      alt += (j % 2 == 1) ? dj : -dj;
    }
    const Degree d2 = alt.degree();
    o.require(!d2 || static_cast<long>(*d2) <= sum - (mm + 1) * mm / 2, "second law, trial " + std::to_string(trial));
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  const WorkedExample& g = golden();
  const OperatorBundle b = assemble_DqS(g.spec, g.S);
  const ConstructionResult res = construct(g.spec, 12);
  int perturbed = 0;
  for (std::size_t h = 0; h < b.Mh.size(); ++h)
    for (std::size_t k = 0; k <= *b.Mh[h].degree(); ++k) {
      std::vector<Poly> mh = b.Mh;
      mh[h] += Poly::monomial(1, k);
      const OperatorBundle bad = build_operator(g.spec.alpha, b.S, b.omega, b.PS, mh, b.R);
      const EigenReport rep = verify_eigen(bad, res, 12, kThreads);
      const bool caught = std::any_of(rep.entries.begin(), rep.entries.end(),
                                      [](const EigenResidual& e) { return !e.residual.is_zero(); });
      o.require(caught, "M_" + std::to_string(h + 1) + " coefficient " + std::to_string(k) + " not detected");
      ++perturbed;
    }
  for (std::size_t n = 0; n <= 10; ++n) {
    ConstructionResult bad = res;
    bad.qpolys.resize(11);
    bad.qpolys[n] += n == 0 ? Poly::x() : Poly{1};  // a constant added to q_0 is still an eigenfunction
    const OrthogonalityReport ortho = verify_left_orthogonality(bad, 10);
    const EigenReport eig = verify_eigen(b, bad, 10);
    const bool by_ortho = std::any_of(ortho.issues.begin(), ortho.issues.end(), [](const OrthogonalityIssue& i) {
      return i.kind == OrthogonalityIssue::Kind::NonzeroBelowDegree && !is_zero(i.residual);
    });
    const bool by_eigen = std::any_of(eig.entries.begin(), eig.entries.end(),
                                      [&](const EigenResidual& e) { return e.n == n && !e.residual.is_zero(); });
    o.require(by_ortho || by_eigen, "corrupted q_" + std::to_string(n) + " not detected");
    if (n >= 1) o.require(by_ortho, "corrupted q_" + std::to_string(n) + " passes orthogonality");
  }
  o.require(perturbed > 0, "no M_h coefficients");
  return o;
}

}  // namespace

int main() {
  criterion(1, "golden reproduction of R_1..R_3, Omega, P_S, M_1..M_3", 5, golden_reproduction);
  criterion(2, "operator order 18 = 2(awr+1), awr 8, nj (5,4,0), mj (2,0)", 0, operator_order);
  criterion(3, "D(q_n) = P_S(n) q_n for n = 0..12", 60, eigen_golden);
  criterion(4, "left orthogonality for 0 <= l < n <= 10, <q_n,x^n> != 0", 0, orthogonality_golden);
  criterion(5, "m = 2 awr table, alpha = 2..6 (15 checks)", 0, awr_table);
  criterion(6, "deg Omega = awr(M) on 120 random integer matrices", 120, degree_matches_rank);
  criterion(7, "m = 1, M = 0 reduction for alpha = 1..5", 0, reduction);
  criterion(8, "Laguerre recurrence, derivative, connection and eigen identities", 0, laguerre_identities);
  criterion(9, "degree laws on 50 random systems", 0, degree_laws);
  criterion(10, "negative controls on M_h coefficients and q_n", 0, negative_controls);
  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
