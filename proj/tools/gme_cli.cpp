// Command line front end: analyze a state, sweep a family over a parameter
// grid, locate criterion thresholds, or run the identity verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 criterion never fires on the bracket.

#include "gme/bloch.hpp"
#include "gme/criteria.hpp"
#include "gme/state_spec.hpp"
#include "gme/states.hpp"
#include "gme/su_basis.hpp"
#include "gme/threshold.hpp"
#include "gme/verify.hpp"
#include "gme/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNoCrossing = 3;

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_out(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << body;
}

struct ParamRange {
  std::string name;
  double start = 0, end = 0;
  int steps = 1;
};

ParamRange parse_param_range(const std::string& arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) throw gme::SpecError("--param expects NAME=START:END:STEPS");
  ParamRange r;
  r.name = arg.substr(0, eq);
  const std::string rest = arg.substr(eq + 1);
  const auto c1 = rest.find(':');
  if (c1 == std::string::npos) {
    // fixed value
    r.start = r.end = std::stod(rest);
    r.steps = 1;
    return r;
  }
  const auto c2 = rest.find(':', c1 + 1);
  if (c2 == std::string::npos) throw gme::SpecError("--param expects NAME=START:END:STEPS");
  r.start = std::stod(rest.substr(0, c1));
  r.end = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
  r.steps = std::stoi(rest.substr(c2 + 1));
  if (r.steps < 1) throw gme::SpecError("--param steps must be >= 1");
  return r;
}

double grid_value(const ParamRange& r, int i) {
  if (r.steps == 1) return r.start;
  return r.start + (r.end - r.start) * i / (r.steps - 1);
}

int default_dim(const std::string& family, int d_flag) {
  if (d_flag > 0) return d_flag;
  if (family == "ghz-w-mix") return 2;
  if (family == "example3-isotropic") return 3;
  if (family == "ghz-isotropic") return 3;
  throw gme::SpecError("--d is required for family '" + family + "'");
}

json report_to_json(const gme::CriterionReport& rep, const std::vector<int>& ks) {
  json per_k = json::array();
  for (const auto& rec : rep.per_k) {
    if (!ks.empty() && std::find(ks.begin(), ks.end(), rec.k) == ks.end()) continue;
    per_k.push_back({{"k", rec.k},
                     {"m_k", rec.m_k},
                     {"threshold", rec.threshold},
                     {"margin", rec.margin},
                     {"gme_certified", rec.gme_certified}});
  }
  json out = {{"per_k", per_k},
              {"best_k", rep.best_k},
              {"best_margin", rep.best_margin},
              {"theorem2_bound", rep.theorem2_bound},
              {"verdict", rep.gme_certified() ? "GME-certified" : "inconclusive"}};
  if (rep.pure_exact) out["pure_gme_concurrence"] = *rep.pure_exact;
  return out;
}

int run_analyze(const std::string& input, const std::string& k_sel, const std::string& format,
                const std::string& output) {
  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << input << "\n";
    return kExitInputError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();

  gme::StateSpec spec;
  std::string warning;
  try {
    spec = gme::parse_state_spec(json::parse(bytes), &warning);
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  } catch (const gme::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";

  gme::DensityMatrix rho;
  try {
    rho = spec.resolve(true);
  } catch (const gme::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const gme::GeneratorBasis basis = gme::gellmann_basis(rho.d);
  const gme::CorrelationData data = gme::correlation_tensors(rho, basis);
  const gme::CriterionReport rep = gme::evaluate_criteria(rho, basis);
  const gme::Purities pur = gme::reduced_purities(rho);
  const gme::ValidationReport val = gme::validate(rho);

  std::vector<int> ks;
  if (k_sel == "best") ks.push_back(rep.best_k);
  else if (k_sel != "all") ks.push_back(std::stoi(k_sel));

  if (format == "json") {
    json out = {{"tool", "gme"},
                {"version", gme::kVersion},
                {"input_digest", fnv1a_hex(bytes)},
                {"d", rho.d},
                {"family", spec.family},
                {"validation",
                 {{"hermiticity_error", val.hermiticity_error},
                  {"trace_error", val.trace_error},
                  {"min_eigenvalue", val.min_eigenvalue}}},
                {"tensor_norms",
                 {{"T1", data.t1.norm()},
                  {"T2", data.t2.norm()},
                  {"T3", data.t3.norm()},
                  {"T12", data.t12.norm()},
                  {"T13", data.t13.norm()},
                  {"T23", data.t23.norm()},
                  {"T123", data.triple_norm()}}},
                {"reduced_purities",
                 {{"p1", pur.p1},
                  {"p2", pur.p2},
                  {"p3", pur.p3},
                  {"p23", pur.p23},
                  {"p13", pur.p13},
                  {"p12", pur.p12}}},
                {"criteria", report_to_json(rep, ks)}};
    write_out(output, out.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "# gme analyze v" << gme::kVersion << "\n";
    out << "# digest: " << fnv1a_hex(bytes) << "\n";
    out << "# d: " << rho.d << " family: " << spec.family << "\n";
    out << "# T123_norm: " << fmt9(data.triple_norm())
        << " theorem2_bound: " << fmt9(rep.theorem2_bound) << "\n";
    if (rep.pure_exact) out << "# pure_gme_concurrence: " << fmt9(*rep.pure_exact) << "\n";
    out << "k,m_k,threshold,margin,gme_certified\n";
    for (const auto& rec : rep.per_k) {
      if (!ks.empty() && std::find(ks.begin(), ks.end(), rec.k) == ks.end()) continue;
      out << rec.k << "," << fmt9(rec.m_k) << "," << fmt9(rec.threshold) << ","
          << fmt9(rec.margin) << "," << (rec.gme_certified ? 1 : 0) << "\n";
    }
    out << "# verdict: " << (rep.gme_certified() ? "GME-certified" : "inconclusive") << "\n";
    write_out(output, out.str());
  }
  return kExitOk;
}

int run_sweep(const std::string& family, int d_flag, const std::vector<std::string>& param_args,
              const std::vector<std::string>& criteria, const std::vector<int>& ks,
              std::uint64_t seed, const std::string& output) {
  const int d = default_dim(family, d_flag);
  std::vector<ParamRange> ranges;
  for (const auto& arg : param_args) ranges.push_back(parse_param_range(arg));
  if (ranges.empty()) throw gme::SpecError("sweep requires at least one --param");

  const bool want_t1 =
      criteria.empty() || std::find(criteria.begin(), criteria.end(), "theorem1") != criteria.end();
  const bool want_t2 =
      criteria.empty() || std::find(criteria.begin(), criteria.end(), "theorem2") != criteria.end();
  std::vector<int> kset = ks;
  if (want_t1 && kset.empty()) kset.push_back(d * d - 1);

  std::string canonical = family + "|d=" + std::to_string(d);
  for (const auto& r : ranges)
    canonical += "|" + r.name + "=" + fmt9(r.start) + ":" + fmt9(r.end) + ":" +
                 std::to_string(r.steps);
  for (int k : kset) canonical += "|k=" + std::to_string(k);
  canonical += std::string("|t1=") + (want_t1 ? "1" : "0") + "|t2=" + (want_t2 ? "1" : "0");

  const gme::GeneratorBasis basis = gme::gellmann_basis(d);

  std::ostringstream out;
  out << "# gme sweep v" << gme::kVersion << "\n";
  out << "# schema: sweep/1\n";
  out << "# family: " << family << " d: " << d << "\n";
  out << "# seed: " << seed << "\n";
  out << "# digest: " << fnv1a_hex(canonical) << "\n";
  for (const auto& r : ranges) out << r.name << ",";
  out << "psd_valid";
  if (want_t1)
    for (int k : kset) out << ",m_" << k << ",t1_margin_k" << k;
  if (want_t2) out << ",t2_bound";
  out << "\n";

  // row-major over the parameter grid, deterministic order
  std::vector<int> idx(ranges.size(), 0);
  long total = 1;
  for (const auto& r : ranges) total *= r.steps;
  for (long row = 0; row < total; ++row) {
    long rem = row;
    for (int p = static_cast<int>(ranges.size()) - 1; p >= 0; --p) {
      idx[p] = static_cast<int>(rem % ranges[p].steps);
      rem /= ranges[p].steps;
    }
    gme::StateSpec spec;
    spec.d = d;
    spec.family = family;
    for (std::size_t p = 0; p < ranges.size(); ++p)
      spec.params[ranges[p].name] = grid_value(ranges[p], idx[p]);

    const gme::DensityMatrix rho = spec.resolve(false);
    const bool valid = gme::validate(rho).ok();
    const gme::CorrelationData data = gme::correlation_tensors(rho, basis);
    const auto spectra = gme::unfolding_spectra(data);

    for (std::size_t p = 0; p < ranges.size(); ++p)
      out << fmt9(spec.params[ranges[p].name]) << ",";
    out << (valid ? 1 : 0);
    if (want_t1)
      for (int k : kset) {
        double sum = 0.0;
        for (const auto& sv : spectra) sum += sv.head(k).sum();
        const double mk = sum / 3.0;
        out << "," << fmt9(mk) << "," << fmt9(mk - gme::theorem1_threshold(d, k));
      }
    if (want_t2) out << "," << fmt9(gme::theorem2_bound(data));
    out << "\n";
  }
  write_out(output, out.str());
  return kExitOk;
}

int run_threshold(const std::string& family, int d_flag, const std::string& criterion, int k,
                  const std::string& bracket, const std::vector<std::string>& param_args) {
  const int d = default_dim(family, d_flag);
  gme::StateSpec spec;
  spec.d = d;
  spec.family = family;
  for (const auto& arg : param_args) {
    const ParamRange r = parse_param_range(arg);
    spec.params[r.name] = r.start;
  }
  // families need every parameter present; the free one is overridden by the
  // search
  if (family == "ghz-w-mix" && !spec.params.count("y")) spec.params["y"] = 0.0;
  spec.params.emplace(gme::StateSpec::kFreeParam, 0.0);

  const auto c1 = bracket.find(':');
  if (c1 == std::string::npos) throw gme::SpecError("--bracket expects LO:HI");
  const double lo = std::stod(bracket.substr(0, c1));
  const double hi = std::stod(bracket.substr(c1 + 1));

  const gme::Criterion crit =
      criterion == "theorem2" ? gme::Criterion::Theorem2 : gme::Criterion::Theorem1;
  try {
    const double x = gme::find_threshold(spec, crit, k, lo, hi);
    std::printf("%.6f\n", x);
  } catch (const gme::NoSignChange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoCrossing;
  }
  return kExitOk;
}

int run_verify(const std::string& dims_arg, int trials, std::uint64_t seed,
               const std::string& output, double tolerance_scale) {
  std::vector<int> dims;
  std::stringstream ss(dims_arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) dims.push_back(std::stoi(tok));
  if (dims.empty()) throw gme::SpecError("--dims must name at least one dimension");

  const gme::VerificationReport report = gme::run_suite(dims, trials, seed, tolerance_scale);
  write_out(output, gme::format_report(report));
  return report.overall_pass() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GME detection via correlation-tensor norm criteria"};
  app.set_version_flag("--version", gme::kVersion);
  app.require_subcommand(1);

  // analyze
  std::string in_path, k_sel = "all", format = "json", out_path;
  auto* analyze = app.add_subcommand("analyze", "evaluate all criteria on one state");
  analyze->add_option("input", in_path, "StateSpec JSON file")->required();
  analyze->add_option("--k", k_sel, "k selection: all, best, or an integer");
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--output", out_path);

  // sweep
  std::string family;
  int d_flag = 0;
  std::vector<std::string> params, criteria;
  std::vector<int> ks;
  std::uint64_t seed = 42;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "evaluate criteria over a parameter grid");
  sweep->add_option("--family", family)->required();
  sweep->add_option("--d", d_flag);
  sweep->add_option("--param", params, "NAME=START:END:STEPS (repeatable)");
  sweep->add_option("--criterion", criteria)->check(CLI::IsMember({"theorem1", "theorem2"}));
  sweep->add_option("--k", ks, "k values for theorem1 columns (repeatable)");
  sweep->add_option("--seed", seed);
  sweep->add_option("--output", sweep_out);

  // threshold
  std::string th_family, th_criterion = "theorem1", bracket = "0:1";
  int th_d = 0, th_k = 0;
  std::vector<std::string> th_params;
  auto* threshold = app.add_subcommand("threshold", "bisect the detection onset of a family");
  threshold->add_option("--family", th_family)->required();
  threshold->add_option("--d", th_d);
  threshold->add_option("--criterion", th_criterion)
      ->check(CLI::IsMember({"theorem1", "theorem2"}));
  threshold->add_option("--k", th_k, "k for theorem1 (default d^2-1)");
  threshold->add_option("--bracket", bracket, "LO:HI");
  threshold->add_option("--param", th_params, "fixed parameters NAME=VALUE");

  // verify
  std::string dims_arg = "2,3", verify_out;
  int trials = 500;
  std::uint64_t verify_seed = 42;
  double tolerance_scale = 1.0;
  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--dims", dims_arg, "comma separated local dimensions");
  verify->add_option("--trials", trials);
  verify->add_option("--seed", verify_seed);
  verify->add_option("--output", verify_out);
  verify->add_option("--tolerance-scale", tolerance_scale)->group("");  // test hook

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return run_analyze(in_path, k_sel, format, out_path);
    if (app.got_subcommand(sweep))
      return run_sweep(family, d_flag, params, criteria, ks, seed, sweep_out);
    if (app.got_subcommand(threshold)) {
      const int d = default_dim(th_family, th_d);
      return run_threshold(th_family, th_d, th_criterion, th_k > 0 ? th_k : d * d - 1, bracket,
                           th_params);
    }
    if (app.got_subcommand(verify))
      return run_verify(dims_arg, trials, verify_seed, verify_out, tolerance_scale);
  } catch (const gme::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
