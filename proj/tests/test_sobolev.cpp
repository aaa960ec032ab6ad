#include "lagsob/awr.hpp"
#include "lagsob/errors.hpp"
#include "lagsob/golden.hpp"
#include "lagsob/laguerre.hpp"
#include "lagsob/sobolev.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace lagsob;
using lagsob::testing::q;
using lagsob::testing::Random;

namespace {

SobolevSpec zero_spec(long alpha, std::size_t m) { return SobolevSpec{alpha, m, RationalMatrix(m, m)}; }

Rational fact(long k) { return Rational(factorial(static_cast<std::size_t>(k))); }

// Gram-Schmidt monic orthogonal polynomials for <p, q> = sum_k c_k moment(k).
std::vector<Poly> gram_schmidt(const std::function<Rational(const Poly&)>& integral, std::size_t count) {
  std::vector<Poly> out;
  for (std::size_t n = 0; n < count; ++n) {
    Poly p = lagsob::testing::xpow(n);
    const Poly xn = p;
    for (const Poly& b : out) p -= (integral(xn * b) / integral(b * b)) * b;
    out.push_back(p);
  }
  return out;
}

Rational moment_integral(const Poly& p, const std::vector<Rational>& mu) {
  Rational acc = 0;
  const auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * mu.at(k);
  return acc;
}

}  // namespace

TEST_SUITE("spec") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(worked_example().spec.validate());
    try {
      zero_spec(2, 3).validate();
      FAIL("expected UnsupportedRegime");
    } catch (const UnsupportedRegime& e) {
      CHECK(std::string(e.what()).find("requires alpha >= m") != std::string::npos);
    }
    CHECK_THROWS_AS(zero_spec(3, 0).validate(), UnsupportedRegime);
    CHECK_THROWS_AS((SobolevSpec{3, 2, RationalMatrix(2, 3)}.validate()), DimensionError);
    CHECK_THROWS_AS((SobolevSpec{3, 2, RationalMatrix(3, 3)}.validate()), DimensionError);
    CHECK_THROWS_AS(build_R(zero_spec(1, 2)), UnsupportedRegime);
  }
}

TEST_SUITE("R system and Casorati determinant") {
  TEST_CASE("reference R polynomials") {
    const WorkedExample& g = worked_example();
    const RSystem r = build_R(g.spec);
    REQUIRE(r.polys.size() == 3);
    const Poly x = Poly::x();
    const Poly r1 = Rational(-1, 24) * Poly{1, 1} * Poly{2, 1} * Poly{-24, -1, 1};
    const Poly r3 = Rational(1, 60) * Poly{4, 1} * Poly{30, -9, 1, 1, 1};
    CHECK(r.polys[0] == r1);
    CHECK(r.polys[2] == r3);
    for (std::size_t l = 0; l < 3; ++l) CHECK(r.polys[l] == g.R[l]);
    for (const Poly& p : r.polys) CHECK(*p.degree() <= 3 + 3 - 1);
  }

  TEST_CASE("m = 1, M = 0") {
    const RSystem r = build_R(zero_spec(3, 1));
    CHECK(r.polys.at(0) == Poly{2});
    const CasoratiData c = casorati(r, 1);
    CHECK(c.omega == Poly{2});
    CHECK(c.root_free);
  }

  TEST_CASE("reference Omega") {
    const WorkedExample& g = worked_example();
    const CasoratiData c = casorati(build_R(g.spec), 3);
    CHECK(c.omega == g.omega);
    CHECK(c.omega.degree() == Degree(8));
    CHECK(c.root_free);
    CHECK_FALSE(c.witness.has_value());
  }

  TEST_CASE("Omega equals the determinant of the shifted matrix") {
    Random rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
      const SobolevSpec spec{static_cast<long>(m) + rng.integer(0, 2), m, rng.integer_matrix(m, m, -2, 2)};
      const RSystem r = build_R(spec);
      std::vector<long> shifts(m);
      std::iota(shifts.begin(), shifts.end(), 1);
      for (auto& s : shifts) s = -s;
      const Poly direct = lagsob::testing::cofactor_det(shift_matrix(r.polys, lagsob::testing::rationals(shifts)));
      CHECK(casorati(r, m).omega == Rational(casorati_orientation(m)) * direct);
    }
  }

  TEST_CASE("a vanishing Omega is detected and blocks the construction") {
    const SobolevSpec spec{1, 1, RationalMatrix{{q("-1")}}};
    const CasoratiData c = casorati(build_R(spec), 1);
    CHECK(c.omega == Poly{1, -1});
    CHECK_FALSE(c.root_free);
    CHECK(c.witness == std::optional<std::size_t>(1));
    CHECK_THROWS_AS(construct(spec, 4), PreconditionError);
  }

  TEST_CASE("R_l(n) equals <L_n, x^{l-1}> under the form") {
    Random rng(43);
    std::vector<SobolevSpec> specs{worked_example().spec};
    for (int t = 0; t < 6; ++t) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
      specs.push_back(SobolevSpec{static_cast<long>(m) + rng.integer(0, 3), m, rng.integer_matrix(m, m, -2, 2)});
    }
    for (const SobolevSpec& spec : specs) {
      const RSystem r = build_R(spec);
      const long beta = spec.alpha - static_cast<long>(spec.m);
      for (long n = 0; n <= 10; ++n) {
        const Poly ln = laguerre_poly(n, spec.alpha);
        for (std::size_t l = 1; l <= spec.m; ++l) {
          const Rational w = lagsob::testing::laguerre_integral(lagsob::testing::xpow(l - 1) * ln, beta);
          CHECK(w == laguerre_w(n, l - 1, spec));
          Rational jet = 0;
          for (std::size_t i = 0; i < spec.m; ++i) jet += spec.M(i, l - 1) * lagsob::testing::jet0(ln, i);
          CHECK(r.polys[l - 1](Rational(n)) == w + fact(static_cast<long>(l) - 1) * jet);
          CHECK(r.polys[l - 1](Rational(n)) == sobolev_form(ln, lagsob::testing::xpow(l - 1), spec));
        }
      }
    }
  }
}

TEST_SUITE("q_n") {
  TEST_CASE("q_0 is the constant Omega(0)") {
    const WorkedExample& g = worked_example();
    const RSystem r = build_R(g.spec);
    CHECK(build_qn(0, g.spec, r) == Poly{g.omega(Rational(0))});
  }

  TEST_CASE("worked example has deg q_n = n") {
    const ConstructionResult res = construct(worked_example().spec, 10);
    REQUIRE(res.qpolys.size() == 11);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(res.qpolys[n].degree() == Degree(n));
  }

  TEST_CASE("m = 1, M = 0 gives scaled L^{alpha-1}") {
    for (long alpha = 1; alpha <= 5; ++alpha) {
      const SobolevSpec spec = zero_spec(alpha, 1);
      const RSystem r = build_R(spec);
      for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(build_qn(n, spec, r) == fact(alpha - 1) * laguerre_poly(static_cast<long>(n), alpha - 1));
        const RationalVector b = betas_via_system(n, r);
        CHECK(b == RationalVector{-1});
      }
    }
  }

  TEST_CASE("determinant equals Omega(n) times the system solution") {
    Random rng(47);
    std::vector<SobolevSpec> specs{worked_example().spec};
    while (specs.size() < 5) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
      SobolevSpec s{static_cast<long>(m) + rng.integer(0, 2), m, rng.integer_matrix(m, m, -2, 2)};
      if (casorati(build_R(s), m).root_free) specs.push_back(s);
    }
    for (const SobolevSpec& spec : specs) {
      const RSystem r = build_R(spec);
      const Poly omega = casorati(r, spec.m).omega;
      for (std::size_t n = 0; n <= 10; ++n) {
        const RationalVector b = betas_via_system(n, r);
        for (std::size_t l = 0; l < spec.m; ++l) {  // defining system residual
          Rational acc = r.polys[l](Rational(static_cast<long>(n)));
          for (std::size_t j = 1; j <= spec.m; ++j)
            acc += b[j - 1] * r.polys[l](Rational(static_cast<long>(n) - static_cast<long>(j)));
          CHECK(is_zero(acc));
        }
        Poly sys = laguerre_poly(static_cast<long>(n), spec.alpha);
        for (std::size_t j = 1; j <= spec.m; ++j)
          sys += b[j - 1] * laguerre_poly(static_cast<long>(n) - static_cast<long>(j), spec.alpha);
        CHECK(build_qn(n, spec, r) == omega(Rational(static_cast<long>(n))) * sys);
        CHECK_FALSE(is_zero(b[spec.m - 1]));
      }
    }
  }

  TEST_CASE("ratio beta_{n,m} / Omega(n+1) on the worked example") {
    const WorkedExample& g = worked_example();
    const RSystem r = build_R(g.spec);
    std::string ratios;
    for (std::size_t n = 0; n <= 6; ++n) {
      const Rational b = betas_via_system(n, r).back();
      CHECK_FALSE(is_zero(b));
      ratios += " " + to_string(b / g.omega(Rational(static_cast<long>(n) + 1)));
    }
    MESSAGE("beta_{n,3}/Omega(n+1), n=0..6:" << ratios);
  }

  TEST_CASE("scaling one R row scales Omega and every q_n") {
    const WorkedExample& g = worked_example();
    const RSystem r = build_R(g.spec);
    const Rational c = q("-5/3");
    for (std::size_t l = 0; l < 3; ++l) {
      RSystem scaled = r;
      scaled.polys[l] = c * scaled.polys[l];
      CHECK(casorati(scaled, 3).omega == c * g.omega);
      ConstructionResult res{{}, {}, laguerre_form(g.spec), g.spec};
      for (std::size_t n = 0; n <= 6; ++n) {
        Poly qs = build_qn(n, g.spec, scaled);
        CHECK(qs == c * build_qn(n, g.spec, r));
        res.qpolys.push_back(std::move(qs));
      }
      CHECK(verify_left_orthogonality(res, 6).passed());
    }
  }
}

TEST_SUITE("degree laws") {
  TEST_CASE("leading degree of shifted determinants") {
    Random rng(53);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
      std::vector<std::size_t> degs;
      while (degs.size() < m) {
        const auto d = static_cast<std::size_t>(rng.integer(0, 6));
        if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
      }
      std::vector<Poly> rs;
      for (std::size_t d : degs) rs.push_back(rng.poly(d));
      std::vector<long> shifts;
      while (shifts.size() < m) {
        const long s = rng.integer(-5, 5);
        if (std::find(shifts.begin(), shifts.end(), s) == shifts.end()) shifts.push_back(s);
      }
      const long sum = static_cast<long>(std::accumulate(degs.begin(), degs.end(), std::size_t{0}));
      const long mm = static_cast<long>(m);
      const Poly d1 = poly_det(shift_matrix(rs, lagsob::testing::rationals(shifts)));
      REQUIRE(d1.degree().has_value());
      CHECK(static_cast<long>(*d1.degree()) == sum - mm * (mm - 1) / 2);

      Poly alt;
      for (long j = 1; j <= mm + 1; ++j) {
        std::vector<long> cols;
        for (long rr = 1 - j; rr <= mm + 1 - j; ++rr)
          if (rr != 0) cols.push_back(rr);
        const Poly dj = poly_det(shift_matrix(rs, lagsob::testing::rationals(cols)));
        alt += (j % 2 == 1) ? dj : -dj;
      }
      const long bound = sum - (mm + 1) * mm / 2;
      if (alt.degree()) CHECK(static_cast<long>(*alt.degree()) <= bound);
    }
  }
}

TEST_SUITE("bilinear form") {
  TEST_CASE("worked example values") {
    const SobolevSpec& s = worked_example().spec;
    CHECK(sobolev_form(Poly{1}, Poly{1}, s) == 2);
    CHECK(sobolev_form(Poly{1}, Poly::x(), s) == 2);
    CHECK(laguerre_form(s)(Poly{1}, Poly::x()) == 2);
  }

  TEST_CASE("symmetric M gives a symmetric form") {
    Random rng(59);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
      RationalMatrix M = rng.integer_matrix(m, m, -3, 3);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) M(i, j) = M(j, i);
      const SobolevSpec spec{static_cast<long>(m) + 1, m, M};
      const Poly p = rng.poly_up_to(5), r = rng.poly_up_to(5);
      CHECK(sobolev_form(p, r, spec) == sobolev_form(r, p, spec));
    }
  }
}

TEST_SUITE("general layer") {
  TEST_CASE("w closed form for m = 1, alpha = 3") {
    const SobolevSpec spec = zero_spec(3, 1);
    const GeneralSobolevSpec g = laguerre_general_spec(spec, 6);
    for (std::size_t n = 0; n <= 6; ++n) {
      CHECK(laguerre_w(static_cast<long>(n), 0, spec) == 2);
      CHECK(general_w(g, n, 0) == 2);
    }
  }

  TEST_CASE("Laguerre data reproduces build_qn") {
    Random rng(61);
    std::vector<SobolevSpec> specs{worked_example().spec, zero_spec(3, 1)};
    while (specs.size() < 6) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
      SobolevSpec s{static_cast<long>(m) + rng.integer(0, 2), m, rng.integer_matrix(m, m, -2, 2)};
      if (casorati(build_R(s), m).root_free) specs.push_back(s);
    }
    for (const SobolevSpec& spec : specs) {
      const GeneralSobolevSpec g = laguerre_general_spec(spec, 8);
      const ConstructionResult gen = general_sobolev(g, 8);
      const RSystem r = build_R(spec);
      for (std::size_t n = 0; n <= 8; ++n) CHECK(gen.qpolys[n] == build_qn(n, spec, r));
      for (long n = -static_cast<long>(spec.m); n <= 8; ++n) {
        const RationalVector vals = general_R(g, n);
        for (std::size_t l = 0; l < spec.m; ++l) CHECK(vals[l] == r.polys[l](Rational(n)));
      }
    }
  }

  TEST_CASE("insufficient data is a domain error") {
    GeneralSobolevSpec g = laguerre_general_spec(worked_example().spec, 4);
    CHECK_THROWS_AS(general_sobolev(g, 30), DomainError);
    g.nu_moments.resize(2);
    CHECK_THROWS_AS(general_sobolev(g, 4), DomainError);
  }

  TEST_CASE("M = 0 reduces to orthogonality with respect to nu") {
    // nu = dx on [0, 1], m = 1, lambda = 0: p_n orthogonal for x dx.
    std::vector<Rational> mu;
    for (int k = 0; k < 20; ++k) mu.push_back(Rational(1) / (k + 1));
    const auto shifted = [&](const Poly& p) { return moment_integral(p * Poly::x(), mu); };
    GeneralSobolevSpec g{0, mu, gram_schmidt(shifted, 8), RationalMatrix(1, 1), RationalMatrix{{1}}, std::nullopt};
    const ConstructionResult res = general_sobolev(g, 6);
    const OrthogonalityReport rep = verify_left_orthogonality(res, 6);
    CHECK(rep.passed());
    const std::vector<Poly> legendre = gram_schmidt([&](const Poly& p) { return moment_integral(p, mu); }, 7);
    for (std::size_t n = 0; n <= 6; ++n) {
      REQUIRE(res.qpolys[n].degree() == Degree(n));
      CHECK(res.qpolys[n] == res.qpolys[n].leading() * legendre[n]);
    }
  }

  TEST_CASE("mass point away from the origin") {
    std::vector<Rational> mu;
    for (int k = 0; k < 20; ++k) mu.push_back(Rational(1) / (k + 1));
    const Rational lambda = 2;
    const auto shifted = [&](const Poly& p) { return moment_integral(p * Poly{-lambda, 1}, mu); };
    GeneralSobolevSpec g{lambda, mu, gram_schmidt(shifted, 8), RationalMatrix{{q("3/2")}}, RationalMatrix{{1}},
                         std::nullopt};
    const ConstructionResult res = general_sobolev(g, 6);
    CHECK(verify_left_orthogonality(res, 6).passed());
    // independent evaluation of the form
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t l = 0; l < n; ++l) {
        const Poly xl = lagsob::testing::xpow(l);
        const Rational v = moment_integral(res.qpolys[n] * xl, mu) + q("3/2") * res.qpolys[n](lambda) * xl(lambda);
        CHECK(is_zero(v));
      }
  }
}

TEST_SUITE("orthogonality") {
  TEST_CASE("worked example") {
    const ConstructionResult res = construct(worked_example().spec, 10);
    const OrthogonalityReport rep = verify_left_orthogonality(res, 10, 4);
    CHECK(rep.passed());
    CHECK(rep.diagonal.size() == 11);
    for (const Rational& d : rep.diagonal) CHECK_FALSE(is_zero(d));
    const OrthogonalityReport serial = verify_left_orthogonality(res, 10, 1);
    CHECK(serial.diagonal == rep.diagonal);
  }

  TEST_CASE("m = 1, M = 0 matches classical orthogonality of L^{alpha-1}") {
    const SobolevSpec spec = zero_spec(4, 1);
    const ConstructionResult res = construct(spec, 8);
    const OrthogonalityReport rep = verify_left_orthogonality(res, 8);
    CHECK(rep.passed());
    for (std::size_t n = 0; n <= 8; ++n) {
      const Rational classical =
          lagsob::testing::laguerre_integral(res.qpolys[n] * lagsob::testing::xpow(n), spec.alpha - 1);
      CHECK(rep.diagonal[n] == classical);
    }
  }

  TEST_CASE("corrupting q_3 is reported") {
    ConstructionResult res = construct(worked_example().spec, 8);
    res.qpolys[3] += Poly{1};
    const OrthogonalityReport rep = verify_left_orthogonality(res, 8);
    CHECK_FALSE(rep.passed());
    const auto hit = std::find_if(rep.issues.begin(), rep.issues.end(),
                                  [](const OrthogonalityIssue& i) { return i.n == 3 && i.l == 0; });
    REQUIRE(hit != rep.issues.end());
    CHECK(hit->kind == OrthogonalityIssue::Kind::NonzeroBelowDegree);
    CHECK_FALSE(is_zero(hit->residual));
    for (const OrthogonalityIssue& i : rep.issues) CHECK(i.n == 3);
  }

  TEST_CASE("root-free random instances are orthogonal") {
    Random rng(67);
    int tested = 0;
    while (tested < 8) {
      const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
      const SobolevSpec spec{static_cast<long>(m) + rng.integer(0, 2), m, rng.integer_matrix(m, m, -2, 2)};
      if (!casorati(build_R(spec), m).root_free) continue;
      ++tested;
      CHECK(verify_left_orthogonality(construct(spec, 10), 10, 2).passed());
    }
  }
}
