#include "bohrlab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "bohrlab/acceptance.hpp"
#include "bohrlab/errors.hpp"
#include "bohrlab/functionals.hpp"
#include "bohrlab/harness.hpp"
#include "bohrlab/io.hpp"
#include "bohrlab/radii.hpp"

namespace bohrlab::cli {

namespace {

using io::format_number;
using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KindFlags {
  std::string kind;
  int p = 1;
  int m = 0;
  std::optional<int> n;
  double p_exp = 1.0;
  std::string d;
};

struct OutputFlags {
  std::string out;
  std::string format;
};

void add_kind_flags(CLI::App* app, KindFlags& k, const std::string& kinds) {
  app->add_option("--kind", k.kind, "Functional kind: " + kinds)->required();
  app->add_option("--p", k.p, "Gap p of the lacunary sum");
  app->add_option("--m", k.m, "Index m");
  app->add_option("--n", k.n, "Tail start N");
  app->add_option("--p-exp", k.p_exp, "Exponent p in (0, 2] of the Bohr-Rogosinski sums");
  app->add_option("--d", k.d, "Comma-separated coefficients d_1,...,d_M");
}

void add_output_flags(CLI::App* app, OutputFlags& o, const std::string& default_format) {
  o.format = default_format;
  app->add_option("--out", o.out, "Write the report to this file instead of stdout");
  app->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("{}: '{}' is not a number", what, item));
    }
    if (used != item.size()) throw UsageError(fmt::format("{}: '{}' is not a number", what, item));
    out.push_back(v);
  }
  return out;
}

FunctionalKind build_kind(const KindFlags& k) {
  FunctionalTag tag;
  try {
    tag = functional_tag_from_string(k.kind);
  } catch (const BohrError& e) {
    throw UsageError(e.what());
  }
  FunctionalKind kind;
  kind.tag = tag;
  kind.p = k.p;
  kind.m = k.m;
  kind.n = k.n.value_or(1);
  kind.p_exp = k.p_exp;
  kind.d = parse_list(k.d, "--d");
  kind.validate();
  return kind;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const OutputFlags& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int status_for(const BohrError& e) {
  switch (e.code()) {
    case ErrorCode::Parse: return kParseError;
    case ErrorCode::Uncertified: return kUncertified;
    case ErrorCode::NoRoot:
    case ErrorCode::WitnessNotFound: return kViolation;
    default: return kUsageError;
  }
}

// ---- radii

std::string radii_csv(const std::vector<RadiusEquation>& eqs, const std::vector<RootResult>& roots) {
  std::string s = "kind,p,m,N,root,residual\n";
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const auto& eq = eqs[i];
    std::string p, m, n;
    switch (eq.kind) {
      case RadiusKind::RPm:
      case RadiusKind::RTStarPm:
        p = std::to_string(eq.p);
        m = std::to_string(eq.m);
        break;
      case RadiusKind::RStarNm:
      case RadiusKind::RDStarNm:
        m = std::to_string(eq.m);
        n = std::to_string(eq.n);
        break;
      case RadiusKind::RogNpm:
        p = format_number(eq.p_exp);
        m = std::to_string(eq.m);
        n = std::to_string(eq.n);
        break;
      case RadiusKind::RogNp:
        p = format_number(eq.p_exp);
        n = std::to_string(eq.n);
        break;
    }
    s += fmt::format("{},{},{},{},{},{}\n", to_string(eq.kind), p, m, n,
                     format_number(roots[i].root), format_number(roots[i].residual));
  }
  return s;
}

Json radii_json(const std::vector<RadiusEquation>& eqs, const std::vector<RootResult>& roots) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    const auto& eq = eqs[i];
    Json row{{"kind", to_string(eq.kind)},
             {"root", roots[i].root},
             {"residual", roots[i].residual},
             {"double_root", roots[i].double_root}};
    switch (eq.kind) {
      case RadiusKind::RPm:
      case RadiusKind::RTStarPm:
        row["p"] = eq.p;
        row["m"] = eq.m;
        break;
      case RadiusKind::RStarNm:
      case RadiusKind::RDStarNm:
        row["m"] = eq.m;
        row["N"] = eq.n;
        break;
      case RadiusKind::RogNpm:
        row["p"] = eq.p_exp;
        row["m"] = eq.m;
        row["N"] = eq.n;
        break;
      case RadiusKind::RogNp:
        row["p"] = eq.p_exp;
        row["N"] = eq.n;
        break;
    }
    arr.push_back(std::move(row));
  }
  return arr;
}

int run_radii(int p_max, int m_max, int n_max, const OutputFlags& o, std::ostream& out) {
  const auto eqs = radius_table_equations(p_max, m_max, n_max);
  std::vector<RootResult> roots(eqs.size());
  std::vector<std::exception_ptr> errors(eqs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    try {
      const bool unique = eqs[i].kind == RadiusKind::RogNpm || eqs[i].kind == RadiusKind::RogNp;
      roots[i] = unique ? unique_root(eqs[i]) : maximal_root(eqs[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  emit(o.format == "json" ? dump(radii_json(eqs, roots)) : radii_csv(eqs, roots), o, out);
  return kSuccess;
}

// ---- verify

int run_verify(const std::string& path, const KindFlags& kf, double r, const OutputFlags& o,
               std::ostream& out, std::ostream& err) {
  const FunctionalKind kind = build_kind(kf);
  const io::FunctionInput input = io::parse_function_input(read_file(path));
  require_radius(r);
  EvaluationReport rep = evaluate(kind, io::input_terms(input, r), r);
  rep.inputs.function = io::describe(input);
  rep.certified = rep.certified && io::input_certified(input);
  const bool ok = rep.margin <= 0.0;

  if (o.format == "csv") {
    emit(io::report_csv_header() + "\n" + io::report_csv_row(kind, rep) + "\n", o, out);
  } else {
    Json j = io::report_to_json(rep);
    j["verdict"] = ok ? "OK" : "VIOLATED";
    emit(dump(j), o, out);
  }
  if (!ok) return kViolation;
  if (!rep.certified) {
    err << "warning: input carries no Schur-class certificate; the margin is not certified\n";
    return kUncertified;
  }
  return kSuccess;
}

// ---- sweep

std::vector<double> parse_grid(const std::string& text) {
  if (text.find(':') == std::string::npos) return parse_list(text, "--grid");
  std::stringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ||
      !ss.eof()) {
    throw UsageError("--grid expects start:stop:count or a comma list");
  }
  const double lo = parse_list(a, "--grid").at(0), hi = parse_list(b, "--grid").at(0);
  const double cnt = parse_list(c, "--grid").at(0);
  if (!(cnt >= 1.0) || cnt != std::floor(cnt) || cnt > 1e6) {
    throw UsageError("--grid count must be an integer in [1, 1e6]");
  }
  const int count = int(cnt);
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = count == 1 ? lo : lo + (hi - lo) * double(i) / double(count - 1);
  }
  return out;
}

struct SweepRow {
  double r = 0.0;
  bool rejected = false;
  EvaluationReport rep;
};

int run_sweep(const std::string& path, const KindFlags& kf, const std::string& grid,
              const OutputFlags& o, std::ostream& out, std::ostream& err) {
  const FunctionalKind kind = build_kind(kf);
  const io::FunctionInput input = io::parse_function_input(read_file(path));
  const std::vector<double> rs = parse_grid(grid);
  if (rs.empty()) throw UsageError("--grid is empty");

  std::vector<SweepRow> rows(rs.size());
  std::vector<std::exception_ptr> errors(rs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < rs.size(); ++i) {
    rows[i].r = rs[i];
    try {
      rows[i].rep = evaluate(kind, io::input_terms(input, rs[i]), rs[i]);
    } catch (const BohrError& e) {
      if (e.code() == ErrorCode::RadiusRejected) {
        rows[i].rejected = true;
      } else {
        errors[i] = std::current_exception();
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const bool certified = io::input_certified(input);
  bool violated = false;
  auto status = [&](const SweepRow& row) -> const char* {
    if (row.rejected) return "REJECTED";
    return row.rep.margin <= 0.0 ? "OK" : "VIOLATED";
  };
  for (const auto& row : rows) violated = violated || (!row.rejected && row.rep.margin > 0.0);

  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j{{"r", row.r}, {"status", status(row)}};
      if (!row.rejected) {
        j["value"] = row.rep.value;
        j["tail_error"] = row.rep.tail_error;
        j["margin"] = row.rep.margin;
      }
      arr.push_back(std::move(j));
    }
    emit(dump(Json{{"kind", kind.describe()}, {"function", io::describe(input)}, {"rows", arr}}),
         o, out);
  } else {
    std::string s = "r,value,tail_error,margin,status\n";
    for (const auto& row : rows) {
      if (row.rejected) {
        s += fmt::format("{},,,,REJECTED\n", format_number(row.r));
      } else {
        s += fmt::format("{},{},{},{},{}\n", format_number(row.r), format_number(row.rep.value),
                         format_number(row.rep.tail_error), format_number(row.rep.margin),
                         status(row));
      }
    }
    emit(s, o, out);
  }
  if (violated) return kViolation;
  if (!certified) {
    err << "warning: input carries no Schur-class certificate; margins are not certified\n";
    return kUncertified;
  }
  return kSuccess;
}

// ---- sharpness

int run_sharpness(const KindFlags& kf, std::optional<double> r_flag, const OutputFlags& o,
                  std::ostream& out) {
  SharpnessTag tag;
  try {
    tag = sharpness_tag_from_string(kf.kind);
  } catch (const BohrError& e) {
    throw UsageError(e.what());
  }
  FunctionalKind params;
  params.p = kf.p;
  params.m = kf.m;
  const bool d_family = tag == SharpnessTag::D || tag == SharpnessTag::E || tag == SharpnessTag::F;
  params.n = kf.n.value_or(d_family ? kf.m + 1 : 1);
  params.p_exp = kf.p_exp;
  params.d = parse_list(kf.d, "--d");
  if (tag == SharpnessTag::I && params.d.empty()) params.d = {8.0 / 9.0};

  const double radius = sharpness_radius(tag, params);
  const double r = r_flag.value_or(radius + 0.01);
  const WitnessReport w = sharpness_witness(tag, params, r);
  if (o.format == "csv") {
    emit(fmt::format("tag,kind,radius,r,a,value,tail_error,excess,exceeds\n"
                     "{},{},{},{},{},{},{},{},{}\n",
                     to_string(w.tag), w.kind, format_number(w.radius), format_number(w.r),
                     format_number(w.a), format_number(w.value), format_number(w.tail_error),
                     format_number(w.excess), w.exceeds ? "true" : "false"),
         o, out);
  } else {
    emit(dump(io::witness_to_json(w)), o, out);
  }
  return w.exceeds ? kSuccess : kViolation;
}

// ---- campaign

int run_campaign(const KindFlags& kf, int trials, std::uint64_t seed, std::optional<double> r,
                 const OutputFlags& o, std::ostream& out) {
  const FunctionalKind kind = build_kind(kf);
  const CampaignSummary s =
      r ? random_campaign_at(kind, trials, seed, *r) : random_campaign(kind, trials, seed);
  if (o.format == "csv") {
    emit(fmt::format("kind,params,trials,seed,r,max_margin,tail_at_max,argmax,violations,verdict\n"
                     "{},{},{},{},{},{},{},{},{},{}\n",
                     to_string(kind.tag), io::kind_params(kind), s.trials, s.seed,
                     format_number(s.r), format_number(s.max_margin),
                     format_number(s.tail_at_max), s.argmax, s.violations,
                     s.violations == 0 ? "PASS" : "FAIL"),
         o, out);
  } else {
    emit(dump(io::campaign_to_json(s)), o, out);
  }
  return s.violations == 0 ? kSuccess : kViolation;
}

// ---- selftest

int run_selftest(std::uint64_t seed, const std::string& only, const OutputFlags& o,
                 std::ostream& out) {
  AcceptanceOptions opts;
  opts.seed = seed;
  for (double id : parse_list(only, "--only")) {
    if (id != std::floor(id) || id < 1 || id > 9) throw UsageError("--only takes ids 1..9");
    opts.only.push_back(int(id));
  }
  const auto results = run_acceptance(opts);
  std::string text;
  bool all = true;
  for (const auto& r : results) {
    text += format_result(r) + "\n";
    all = all && r.pass;
  }
  text += all ? "selftest: PASS\n" : "selftest: FAIL\n";
  emit(text, o, out);
  return all ? kSuccess : kViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of refined Bohr-type inequalities", "bohrlab"};
  app.require_subcommand(1);

  auto* radii = app.add_subcommand("radii", "Tabulate the radius equations' roots");
  int p_max = 3, m_max = 3, n_max = 3;
  OutputFlags radii_out;
  radii->add_option("--p-max", p_max, "Largest p")->check(CLI::Range(0, kMaxRadiusParameter))
      ->capture_default_str();
  radii->add_option("--m-max", m_max, "Largest m")->check(CLI::Range(0, kMaxRadiusParameter))
      ->capture_default_str();
  radii->add_option("--n-max", n_max, "Largest N")->check(CLI::Range(0, kMaxRadiusParameter))
      ->capture_default_str();
  add_output_flags(radii, radii_out, "csv");

  const std::string functional_kinds = "A_PM, D_NM, G_MPN, H_PN, I_M, LEMMA_TAIL";

  auto* verify = app.add_subcommand("verify", "Evaluate one sum on a function file");
  std::string verify_file;
  KindFlags verify_kind;
  double verify_r = 0.0;
  OutputFlags verify_out;
  verify->add_option("file", verify_file, "Function JSON file")->required();
  add_kind_flags(verify, verify_kind, functional_kinds);
  verify->add_option("--r", verify_r, "Radius |z| = r")->required();
  add_output_flags(verify, verify_out, "json");

  auto* sweep = app.add_subcommand("sweep", "Evaluate one sum over a grid of radii");
  std::string sweep_file, sweep_grid;
  KindFlags sweep_kind;
  OutputFlags sweep_out;
  sweep->add_option("file", sweep_file, "Function JSON file")->required();
  add_kind_flags(sweep, sweep_kind, functional_kinds);
  sweep->add_option("--grid", sweep_grid, "start:stop:count or r1,r2,...")->required();
  add_output_flags(sweep, sweep_out, "csv");

  auto* sharp = app.add_subcommand("sharpness", "Reproduce the extremal witness past the radius");
  KindFlags sharp_kind;
  std::optional<double> sharp_r;
  OutputFlags sharp_out;
  add_kind_flags(sharp, sharp_kind, "A, B, C, D, E, F, G, H, I");
  sharp->add_option("--r", sharp_r, "Tested radius (default: theorem radius + 0.01)");
  add_output_flags(sharp, sharp_out, "json");

  auto* campaign = app.add_subcommand("campaign", "Random Schur functions at the theorem radius");
  KindFlags campaign_kind;
  int trials = 1000;
  std::uint64_t campaign_seed = 7;
  std::optional<double> campaign_r;
  OutputFlags campaign_out;
  add_kind_flags(campaign, campaign_kind, functional_kinds);
  campaign->add_option("--trials", trials, "Number of random functions")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();
  campaign->add_option("--seed", campaign_seed, "Seed")->capture_default_str();
  campaign->add_option("--r", campaign_r, "Radius (default: theorem radius)");
  add_output_flags(campaign, campaign_out, "json");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  std::uint64_t selftest_seed = 7;
  std::string only;
  OutputFlags selftest_out;
  selftest->add_option("--seed", selftest_seed, "Seed for the random suites")->capture_default_str();
  selftest->add_option("--only", only, "Comma-separated criterion ids");
  selftest_out.format = "text";
  selftest->add_option("--out", selftest_out.out, "Write the summary to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << app.help();
    return kUsageError;
  }

  try {
    if (radii->parsed()) return run_radii(p_max, m_max, n_max, radii_out, out);
    if (verify->parsed()) {
      return run_verify(verify_file, verify_kind, verify_r, verify_out, out, err);
    }
    if (sweep->parsed()) return run_sweep(sweep_file, sweep_kind, sweep_grid, sweep_out, out, err);
    if (sharp->parsed()) return run_sharpness(sharp_kind, sharp_r, sharp_out, out);
    if (campaign->parsed()) {
      return run_campaign(campaign_kind, trials, campaign_seed, campaign_r, campaign_out, out);
    }
    if (selftest->parsed()) return run_selftest(selftest_seed, only, selftest_out, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const BohrError& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return status_for(e);
  }
  return kUsageError;
}

}  // namespace bohrlab::cli
