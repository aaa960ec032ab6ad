#include "lagsob/cli.hpp"

#include "lagsob/awr.hpp"
#include "lagsob/errors.hpp"
#include "lagsob/golden.hpp"
#include "lagsob/laguerre.hpp"
#include "lagsob/operator.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lagsob::cli {

namespace {

class PhaseTimer {
 public:
  PhaseTimer(Report& report, std::string name)
      : report_(report), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~PhaseTimer() {
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count();
    report_.timings.emplace_back(name_, static_cast<long long>(us));
  }

 private:
  Report& report_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

std::string degree_string(Degree d) { return d ? std::to_string(*d) : "-inf"; }

std::string poly_string(const Poly& p) { return to_json(p).dump(); }

void compare_poly(Report& report, const std::string& name, const Poly& expected, const Poly& actual) {
  report.add(name, poly_string(expected), poly_string(actual), poly_string(actual - expected), expected == actual);
}

void emit(const Json& doc, const std::string& text, const RunConfig& config, std::ostream& out) {
  const std::string body = config.format == Format::Json ? doc.dump(2) + "\n" : text;
  if (config.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw ParseError("cannot open output file " + config.output);
  file << body;
}

std::string report_text(const Report& r, const std::string& title) {
  std::ostringstream os;
  os << title << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : r.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass) os << "  expected " << c.expected << ", got " << c.actual << ", residual " << c.residual;
    os << '\n';
  }
  for (const auto& [phase, us] : r.timings) os << "  time " << phase << ": " << us << " us\n";
  return os.str();
}

int run_construct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const RSystem r = build_R(config.spec);
  const CasoratiData cas = casorati(r, config.spec.m);
  Json doc;
  doc["spec"] = to_json(config.spec);
  Json rs = Json::array();
  for (const auto& p : r.polys) rs.push_back(to_json(p));
  doc["R"] = std::move(rs);
  doc["omega"] = to_json(cas.omega);
  doc["rootFree"] = cas.root_free;
  doc["witness"] = cas.witness ? Json(*cas.witness) : Json(nullptr);
  std::ostringstream text;
  for (std::size_t l = 0; l < r.polys.size(); ++l) text << "R_" << l + 1 << "(x) = " << r.polys[l].to_string() << '\n';
  text << "Omega(x) = " << cas.omega.to_string() << '\n';
  if (!cas.root_free) {
    text << "Omega vanishes at n = " << cas.witness.value_or(0) << "; no orthogonal family\n";
    emit(doc, text.str(), config, out);
    err << "error: Casorati determinant vanishes at n = " << cas.witness.value_or(0) << '\n';
    return kExitCheckFailure;
  }
  const ConstructionResult res = construct(config.spec, config.N);
  Json qs = Json::array();
  Json bs = Json::array();
  for (std::size_t n = 0; n <= config.N; ++n) {
    qs.push_back(to_json(res.qpolys[n]));
    bs.push_back(to_json(res.betas[n]));
    text << "q_" << n << "(x) = " << res.qpolys[n].to_string() << '\n';
  }
  doc["q"] = std::move(qs);
  doc["betas"] = std::move(bs);
  emit(doc, text.str(), config, out);
  return kExitPass;
}

int run_operator(const RunConfig& config, std::ostream& out, std::ostream& err) {
  OperatorBundle b;
  try {
    b = assemble_DqS(config.spec, config.S);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  Json doc;
  doc["S"] = to_json(b.S);
  doc["omega"] = to_json(b.omega);
  doc["PS"] = to_json(b.PS);
  Json mh = Json::array();
  for (const auto& p : b.Mh) mh.push_back(to_json(p));
  doc["Mh"] = std::move(mh);
  doc["order"] = b.D.order().value_or(0);
  doc["D"] = to_json(b.D);
  Json lambdas = Json::array();
  std::ostringstream text;
  text << "P_S(x) = " << b.PS.to_string() << '\n';
  for (std::size_t h = 0; h < b.Mh.size(); ++h) text << "M_" << h + 1 << "(x) = " << b.Mh[h].to_string() << '\n';
  text << "order(D) = " << b.D.order().value_or(0) << '\n';
  for (std::size_t n = 0; n <= config.N; ++n) {
    lambdas.push_back(to_string(b.eigenvalue(n)));
    text << "lambda_" << n << " = " << to_string(b.eigenvalue(n)) << '\n';
  }
  doc["eigenvalues"] = std::move(lambdas);
  emit(doc, text.str(), config, out);
  return kExitPass;
}

int run_awr(const RunConfig& config, std::ostream& out) {
  const WeightedRank w = weighted_rank(config.spec.M, config.spec.alpha);
  std::ostringstream text;
  text << "nj =";
  for (long v : w.nj) text << ' ' << v;
  text << "\nmj =";
  for (long v : w.mj) text << ' ' << v;
  text << "\nawr = " << w.value << '\n';
  emit(to_json(w), text.str(), config, out);
  return kExitPass;
}

}  // namespace

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, std::string expected, std::string actual, std::string residual, bool pass) {
  checks.push_back({std::move(name), std::move(expected), std::move(actual), std::move(residual), pass});
}

Json Report::to_json() const {
  Json out;
  out["status"] = passed() ? "pass" : "fail";
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["residual"] = c.residual;
    j["pass"] = c.pass;
    cs.push_back(std::move(j));
  }
  out["checks"] = std::move(cs);
  Json t = Json::object();
  for (const auto& [phase, us] : timings) t[phase] = us;
  out["timings_us"] = std::move(t);
  return out;
}

std::optional<Command> parse_command(const std::string& name) {
  if (name == "construct") return Command::Construct;
  if (name == "operator") return Command::Operator;
  if (name == "awr") return Command::Awr;
  if (name == "verify") return Command::Verify;
  if (name == "reproduce-example") return Command::ReproduceExample;
  return std::nullopt;
}

Report verify(const RunConfig& config) {
  Report report;
  const SobolevSpec& spec = config.spec;
  RSystem r;
  CasoratiData cas;
  {
    PhaseTimer t(report, "casorati");
    r = build_R(spec);
    cas = casorati(r, spec.m);
  }
  report.add("casorati.root_free", "true", cas.root_free ? "true" : "false",
             cas.root_free ? "0" : "vanishes at n = " + std::to_string(cas.witness.value_or(0)), cas.root_free);

  WeightedRank w;
  {
    PhaseTimer t(report, "awr");
    w = weighted_rank(spec.M, spec.alpha);
  }
  const Degree deg_omega = cas.omega.degree();
  const bool deg_ok = deg_omega && static_cast<long>(*deg_omega) == w.value;
  report.add("degree.omega_equals_awr", std::to_string(w.value), degree_string(deg_omega),
             deg_ok ? "0" : (deg_omega ? std::to_string(static_cast<long>(*deg_omega) - w.value) : "-inf"), deg_ok);
  if (!cas.root_free) return report;

  ConstructionResult res;
  {
    PhaseTimer t(report, "construct");
    res = construct(spec, config.N);
  }
  for (std::size_t n = 0; n <= config.N; ++n) {
    const Rational omega_n = cas.omega(Rational(static_cast<unsigned long>(n)));
    const LaguerreFamily fam{Rational(spec.alpha)};
    Poly sys = fam(static_cast<long>(n));
    for (std::size_t j = 1; j <= spec.m; ++j) sys += fam(static_cast<long>(n) - static_cast<long>(j)) * res.betas[n][j - 1];
    sys *= omega_n;
    const Poly diff = res.qpolys[n] - sys;
    report.add("qn.det_equals_system[" + std::to_string(n) + "]", poly_string(sys), poly_string(res.qpolys[n]),
               poly_string(diff), diff.is_zero());
  }

  {
    PhaseTimer t(report, "orthogonality");
    const OrthogonalityReport ortho = verify_left_orthogonality(res, config.N, config.threads);
    for (std::size_t n = 0; n <= config.N; ++n) {
      std::string residual = "0";
      bool ok = true;
      for (const auto& issue : ortho.issues) {
        if (issue.n != n) continue;
        ok = false;
        residual = issue.kind == OrthogonalityIssue::Kind::NonzeroBelowDegree
                       ? "<q_n,x^" + std::to_string(issue.l) + "> = " + to_string(issue.residual)
                       : "<q_n,x^n> = 0";
        break;
      }
      report.add("orthogonality[" + std::to_string(n) + "]", "<q_n,x^l> = 0 for l < n, <q_n,x^n> != 0",
                 "<q_n,x^n> = " + to_string(ortho.diagonal[n]), residual, ok);
    }
  }

  OperatorBundle bundle;
  {
    PhaseTimer t(report, "operator");
    bundle = assemble_DqS(spec, config.S);
  }
  const std::size_t deg_s = config.S.degree().value_or(0);
  const std::size_t expected_order = 2 * (deg_s + static_cast<std::size_t>(std::max(w.value, 0L)) + 1);
  const std::size_t order = bundle.D.order().value_or(0);
  report.add("operator.order", std::to_string(expected_order), std::to_string(order),
             std::to_string(static_cast<long>(order) - static_cast<long>(expected_order)), order == expected_order);
  report.add("operator.in_algebra_A", "true", bundle.D.in_algebra_A() ? "true" : "false",
             bundle.D.in_algebra_A() ? "0" : "1", bundle.D.in_algebra_A());

  {
    PhaseTimer t(report, "eigen");
    const EigenReport eig = verify_eigen(bundle, res, config.N, config.threads);
    for (const auto& e : eig.entries)
      report.add("eigen[" + std::to_string(e.n) + "]", "D(q_n) = " + to_string(e.eigenvalue) + " q_n",
                 e.residual.is_zero() ? "holds" : "differs", poly_string(e.residual), e.residual.is_zero());
  }
  return report;
}

Report reproduce_example(std::size_t threads) {
  const WorkedExample& g = worked_example();
  Report report;
  OperatorBundle b;
  {
    PhaseTimer t(report, "operator");
    b = assemble_DqS(g.spec, g.S);
  }
  for (std::size_t l = 0; l < g.R.size(); ++l) compare_poly(report, "R_" + std::to_string(l + 1), g.R[l], b.R.polys[l]);
  compare_poly(report, "Omega", g.omega, b.omega);
  compare_poly(report, "P_S", g.PS, b.PS);
  for (std::size_t h = 0; h < g.Mh.size(); ++h) compare_poly(report, "M_" + std::to_string(h + 1), g.Mh[h], b.Mh[h]);
  const std::size_t order = b.D.order().value_or(0);
  report.add("order", std::to_string(g.order), std::to_string(order),
             std::to_string(static_cast<long>(order) - static_cast<long>(g.order)), order == g.order);
  const WeightedRank w = weighted_rank(g.spec.M, g.spec.alpha);
  report.add("awr", std::to_string(g.awr), std::to_string(w.value), std::to_string(w.value - g.awr), w.value == g.awr);
  report.add("nj", Json(g.nj).dump(), Json(w.nj).dump(), w.nj == g.nj ? "0" : "1", w.nj == g.nj);
  report.add("mj", Json(g.mj).dump(), Json(w.mj).dump(), w.mj == g.mj ? "0" : "1", w.mj == g.mj);

  RunConfig cfg;
  cfg.spec = g.spec;
  cfg.S = g.S;
  cfg.N = 8;
  cfg.threads = threads;
  const Report full = verify(cfg);
  for (const auto& c : full.checks) report.checks.push_back(c);
  for (const auto& t : full.timings) report.timings.push_back(t);
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Construct:
        return run_construct(config, out, err);
      case Command::Operator:
        return run_operator(config, out, err);
      case Command::Awr:
        return run_awr(config, out);
      case Command::Verify: {
        const Report r = verify(config);
        emit(r.to_json(), report_text(r, "verify"), config, out);
        return r.passed() ? kExitPass : kExitCheckFailure;
      }
      case Command::ReproduceExample: {
        const Report r = reproduce_example(config.threads);
        emit(r.to_json(), report_text(r, "reproduce-example"), config, out);
        return r.passed() ? kExitPass : kExitCheckFailure;
      }
    }
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discrete Laguerre-Sobolev orthogonal polynomials and their differential operators"};
  app.require_subcommand(1);
  std::string input, output, format = "json";
  std::optional<std::size_t> upto;
  std::size_t threads = 1;
  app.add_option("--input", input, "Problem JSON file ('-' for standard input)");
  app.add_option("--output", output, "Write the result here instead of standard output");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--upto", upto, "Largest n to construct or verify (overrides the input's N)");
  app.add_option("--threads", threads, "Workers for per-n verification")->check(CLI::PositiveNumber);
  app.fallthrough();
  app.add_subcommand("construct", "R_l, Omega and q_0..q_N");
  app.add_subcommand("operator", "P_S, M_h, the operator coefficients, its order and eigenvalues");
  app.add_subcommand("awr", "alpha-weighted rank of M");
  app.add_subcommand("verify", "orthogonality, eigen, degree and order checks up to N");
  app.add_subcommand("reproduce-example", "compare the alpha = 3, m = 3 instance with its reference values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitPass : kExitUsage;
  }

  RunConfig config;
  config.command = *parse_command(app.get_subcommands().front()->get_name());
  config.output = output;
  config.format = format == "text" ? Format::Text : Format::Json;
  config.threads = threads;

  if (config.command != Command::ReproduceExample) {
    if (input.empty()) {
      err << "error: --input is required for " << app.get_subcommands().front()->get_name() << '\n';
      return kExitUsage;
    }
    try {
      Json doc;
      if (input == "-") {
        doc = Json::parse(std::cin);
      } else {
        std::ifstream file(input);
        if (!file) throw ParseError("cannot open " + input);
        doc = Json::parse(file);
      }
      config.spec = spec_from_json(doc);
      if (doc.contains("S")) config.S = poly_from_json(doc["S"]);
      if (doc.contains("N")) {
        if (!doc["N"].is_number_integer() || doc["N"].get<long long>() < 0)
          throw ParseError("\"N\" must be a nonnegative integer");
        config.N = doc["N"].get<std::size_t>();
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  if (upto) config.N = *upto;
  if (config.S.is_zero()) {
    err << "error: S must be a nonzero polynomial\n";
    return kExitUsage;
  }
  return run(config, out, err);
}

}  // namespace lagsob::cli
