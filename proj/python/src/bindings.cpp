#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lagsob/awr.hpp"
#include "lagsob/cli.hpp"
#include "lagsob/errors.hpp"
#include "lagsob/laguerre.hpp"
#include "lagsob/operator.hpp"
#include "lagsob/sobolev.hpp"
#include "lagsob/summation.hpp"

namespace py = pybind11;
using namespace lagsob;

// Rationals cross the boundary as "num/den" strings; the Python package
// turns them into fractions.Fraction.
namespace {

using StrPoly = std::vector<std::string>;
using StrMatrix = std::vector<std::vector<std::string>>;

StrPoly str(const Poly& p) {
  StrPoly out;
  for (const Rational& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

StrPoly str(const RationalVector& v) {
  StrPoly out;
  for (const Rational& c : v) out.push_back(to_string(c));
  return out;
}

StrMatrix str(const RationalMatrix& m) {
  StrMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

std::vector<StrPoly> str(std::span<const Poly> ps) {
  std::vector<StrPoly> out;
  for (const Poly& p : ps) out.push_back(str(p));
  return out;
}

Poly poly(const StrPoly& c) {
  std::vector<Rational> v;
  for (const auto& s : c) v.push_back(parse_rational(s));
  return Poly(std::move(v));
}

RationalMatrix matrix(const StrMatrix& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("matrix rows of different length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_rational(rows[i][j]);
  }
  return m;
}

SobolevSpec spec(long alpha, std::size_t m, const StrMatrix& M) {
  SobolevSpec s{alpha, m, matrix(M)};
  s.validate();
  return s;
}

py::dict report_dict(const cli::Report& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["expected"] = c.expected;
    d["actual"] = c.actual;
    d["residual"] = c.residual;
    d["pass"] = c.pass;
    checks.append(d);
  }
  py::dict timings;
  for (const auto& [phase, us] : r.timings) timings[py::str(phase)] = us;
  py::dict out;
  out["status"] = r.passed() ? "pass" : "fail";
  out["checks"] = checks;
  out["timings_us"] = timings;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact discrete Laguerre-Sobolev orthogonal polynomials";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<UnsupportedRegime>(m, "UnsupportedRegime", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  m.def("laguerre_poly", [](long n, const std::string& alpha) { return str(laguerre_poly(n, parse_rational(alpha))); },
        py::arg("n"), py::arg("alpha"));
  m.def("indefinite_sum", [](const StrPoly& f) { return str(indefinite_sum(poly(f))); }, py::arg("f"));
  m.def(
      "poly_det",
      [](const std::vector<std::vector<StrPoly>>& rows) {
        const std::size_t n = rows.size();
        PolyMatrix a(n, rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < n; ++i) {
          if (rows[i].size() != a.cols()) throw DimensionError("matrix rows of different length");
          for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = poly(rows[i][j]);
        }
        return str(poly_det(a));
      },
      py::arg("rows"));

  m.def(
      "build_R", [](long alpha, std::size_t mm, const StrMatrix& M) { return str(build_R(spec(alpha, mm, M)).polys); },
      py::arg("alpha"), py::arg("m"), py::arg("M"));
  m.def(
      "casorati",
      [](long alpha, std::size_t mm, const StrMatrix& M) {
        const CasoratiData c = casorati(build_R(spec(alpha, mm, M)), mm);
        py::dict d;
        d["omega"] = str(c.omega);
        d["root_free"] = c.root_free;
        d["witness"] = c.witness ? py::cast(*c.witness) : py::none();
        return d;
      },
      py::arg("alpha"), py::arg("m"), py::arg("M"));
  m.def(
      "construct",
      [](long alpha, std::size_t mm, const StrMatrix& M, std::size_t N) {
        const ConstructionResult res = construct(spec(alpha, mm, M), N);
        py::list betas;
        for (const auto& b : res.betas) betas.append(str(b));
        py::dict d;
        d["q"] = str(res.qpolys);
        d["betas"] = betas;
        return d;
      },
      py::arg("alpha"), py::arg("m"), py::arg("M"), py::arg("N"));
  m.def(
      "orthogonality",
      [](long alpha, std::size_t mm, const StrMatrix& M, std::size_t N, std::size_t threads) {
        const OrthogonalityReport rep = verify_left_orthogonality(construct(spec(alpha, mm, M), N), N, threads);
        py::list issues;
        for (const auto& i : rep.issues) {
          py::dict d;
          d["n"] = i.n;
          d["l"] = i.l;
          d["kind"] = i.kind == OrthogonalityIssue::Kind::NonzeroBelowDegree ? "nonzero_below_degree"
                                                                             : "vanishing_at_degree";
          d["residual"] = to_string(i.residual);
          issues.append(d);
        }
        py::dict d;
        d["passed"] = rep.passed();
        d["diagonal"] = str(rep.diagonal);
        d["issues"] = issues;
        return d;
      },
      py::arg("alpha"), py::arg("m"), py::arg("M"), py::arg("N"), py::arg("threads") = 1);
  m.def(
      "weighted_rank",
      [](const StrMatrix& M, long alpha) {
        const WeightedRank w = weighted_rank(matrix(M), alpha);
        py::dict d;
        d["nj"] = w.nj;
        d["mj"] = w.mj;
        d["awr"] = w.value;
        d["mtilde"] = str(w.mtilde);
        return d;
      },
      py::arg("M"), py::arg("alpha"));
  m.def(
      "operator",
      [](long alpha, std::size_t mm, const StrMatrix& M, const StrPoly& S, std::size_t N) {
        const OperatorBundle b = assemble_DqS(spec(alpha, mm, M), poly(S));
        py::list eig;
        for (std::size_t n = 0; n <= N; ++n) eig.append(to_string(b.eigenvalue(n)));
        py::dict d;
        d["S"] = str(b.S);
        d["omega"] = str(b.omega);
        d["PS"] = str(b.PS);
        d["Mh"] = str(b.Mh);
        d["order"] = b.D.order() ? py::cast(*b.D.order()) : py::none();
        d["D"] = str(b.D.coefficients());
        d["eigenvalues"] = eig;
        return d;
      },
      py::arg("alpha"), py::arg("m"), py::arg("M"), py::arg("S"), py::arg("N"));
  m.def(
      "verify",
      [](long alpha, std::size_t mm, const StrMatrix& M, const StrPoly& S, std::size_t N, std::size_t threads) {
        cli::RunConfig cfg;
        cfg.spec = spec(alpha, mm, M);
        cfg.S = poly(S);
        if (cfg.S.is_zero()) throw ParseError("S must be a nonzero polynomial");
        cfg.N = N;
        cfg.threads = threads;
        cli::Report r;
        {
          py::gil_scoped_release release;
          r = cli::verify(cfg);
        }
        return report_dict(r);
      },
      py::arg("alpha"), py::arg("m"), py::arg("M"), py::arg("S"), py::arg("N"), py::arg("threads") = 1);
  m.def(
      "reproduce_example",
      [](std::size_t threads) {
        cli::Report r;
        {
          py::gil_scoped_release release;
          r = cli::reproduce_example(threads);
        }
        return report_dict(r);
      },
      py::arg("threads") = 1);
}
