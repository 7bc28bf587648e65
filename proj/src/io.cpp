#include "bohrlab/io.hpp"

#include <cmath>
#include <fmt/format.h>

#include "bohrlab/errors.hpp"

namespace bohrlab::io {

namespace {

[[noreturn]] void parse_fail(const std::string& why) { throw BohrError(ErrorCode::Parse, why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(fmt::format("missing field '{}'", key));
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) parse_fail(fmt::format("'{}' must be a number", what));
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(fmt::format("'{}' must be an integer", what));
  return j.get<int>();
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  parse_fail("complex numbers are written as [re, im] or a real number");
}

std::vector<Complex> complex_list(const Json& j, const char* what) {
  if (!j.is_array()) parse_fail(fmt::format("'{}' must be an array", what));
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

ReadMode read_mode_from_string(const std::string& s) {
  if (s == "scalar") return ReadMode::Scalar;
  if (s == "norm") return ReadMode::Norm;
  if (s == "functional") return ReadMode::Functional;
  parse_fail("read must be one of scalar, norm, functional");
}

// Wraps library validation failures raised while building inputs.
template <class F>
auto parsing(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const BohrError& e) {
    if (e.code() == ErrorCode::Parse) throw;
    parse_fail(e.what());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

Json series_to_json(const LacunarySeries& s) {
  Json coeffs = Json::array();
  for (const Complex& c : s.g.coeffs()) coeffs.push_back(complex_to_json(c));
  return Json{{"m", s.m},
              {"p", s.p},
              {"coeffs", std::move(coeffs)},
              {"bound", s.g.coefficient_bound()},
              {"certificate", to_string(s.g.certificate())}};
}

LacunarySeries series_from_json(const Json& j) {
  return parsing([&] {
    const int m = j.contains("m") ? integer(j.at("m"), "m") : 0;
    const int p = j.contains("p") ? integer(j.at("p"), "p") : 1;
    if (m < 0 || p < 1) parse_fail("needs m >= 0 and p >= 1");
    auto coeffs = complex_list(field(j, "coeffs"), "coeffs");
    const double bound = j.contains("bound") ? number(j.at("bound"), "bound") : 0.0;
    Certificate cert = Certificate::Unknown;
    if (j.contains("certificate")) {
      if (!j.at("certificate").is_string()) parse_fail("'certificate' must be a string");
      cert = certificate_from_string(j.at("certificate").get<std::string>());
    }
    return LacunarySeries{m, p, CoefficientSeries(std::move(coeffs), bound, cert)};
  });
}

FunctionDescriptor descriptor_from_json(const Json& j) {
  return parsing([&] {
    if (!j.is_object()) parse_fail("a function must be a JSON object");
    if (!j.contains("family")) {
      LacunarySeries s = series_from_json(j);
      return FunctionDescriptor{ExplicitSeries{std::move(s.g)}, s.m, s.p};
    }
    FunctionDescriptor d;
    d.m = j.contains("m") ? integer(j.at("m"), "m") : 0;
    d.p = j.contains("p") ? integer(j.at("p"), "p") : 1;
    const Json& fam = j.at("family");
    if (!fam.is_string()) parse_fail("'family' must be a string");
    const std::string name = fam.get<std::string>();
    if (name == "mobius") {
      d.g = MobiusFamily{number(field(j, "a"), "a")};
    } else if (name == "mobius_minus") {
      d.g = MobiusMinusFamily{number(field(j, "a"), "a")};
    } else if (name == "schur") {
      d.g = SchurFamily{complex_list(field(j, "gamma"), "gamma")};
    } else if (name == "constant") {
      d.g = ConstantFamily{complex_from_json(field(j, "value"))};
    } else {
      parse_fail("unknown family '" + name + "'");
    }
    // Catch bad parameters now rather than at evaluation time.
    d.materialize(1);
    return d;
  });
}

Json space_to_json(const SpaceSpec& s) {
  Json q = s.is_infinity() ? Json("inf") : Json(s.q);
  return Json{{"n", s.n}, {"q", std::move(q)}};
}

SpaceSpec space_from_json(const Json& j) {
  return parsing([&] {
    SpaceSpec s;
    s.n = integer(field(j, "n"), "n");
    const Json& q = field(j, "q");
    if (q.is_string() && (q.get<std::string>() == "inf" || q.get<std::string>() == "infinity")) {
      s.q = SpaceSpec::kInfinity;
    } else {
      s.q = number(q, "q");
    }
    s.validate();
    return s;
  });
}

BanachInput banach_from_json(const Json& j) {
  return parsing([&] {
    BanachInput b;
    const Json& form = field(j, "form");
    if (!form.is_string()) parse_fail("'form' must be a string");
    b.form = mapping_form_from_string(form.get<std::string>());
    b.domain = space_from_json(field(j, "domain"));
    b.target = j.contains("target") ? space_from_json(j.at("target")) : b.domain;
    b.u = complex_list(field(j, "u"), "u");
    if (j.contains("dir")) b.dir = complex_list(j.at("dir"), "dir");
    b.h = descriptor_from_json(field(j, "h"));
    if (j.contains("omega")) b.omega = complex_list(j.at("omega"), "omega");
    if (j.contains("v")) b.v = complex_list(j.at("v"), "v");
    if (j.contains("read")) {
      if (!j.at("read").is_string()) parse_fail("'read' must be a string");
      b.mode = read_mode_from_string(j.at("read").get<std::string>());
    } else {
      b.mode = b.form == MappingForm::ZTimesScalar ? ReadMode::Norm : ReadMode::Scalar;
    }
    b.terms(1);
    return b;
  });
}

FunctionInput parse_function_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("form")) return banach_from_json(j);
  return descriptor_from_json(j);
}

std::string describe(const FunctionInput& in) {
  if (const auto* d = std::get_if<FunctionDescriptor>(&in)) return d->describe();
  const auto& b = std::get<BanachInput>(in);
  return fmt::format("{}(h={})", to_string(b.form), b.h.describe());
}

CoefficientSeries input_terms(const FunctionInput& in, double r) {
  if (const auto* d = std::get_if<FunctionDescriptor>(&in)) return d->materialize_for(r);
  return std::get<BanachInput>(in).terms_for(r);
}

bool input_certified(const FunctionInput& in) {
  if (const auto* d = std::get_if<FunctionDescriptor>(&in)) return d->certified();
  return std::get<BanachInput>(in).h.certified();
}

Json report_to_json(const EvaluationReport& rep) {
  return Json{{"kind", rep.inputs.kind},
              {"function", rep.inputs.function},
              {"r", rep.inputs.r},
              {"value", rep.value},
              {"tail_error", rep.tail_error},
              {"margin", rep.margin},
              {"certified", rep.certified}};
}

std::string kind_params(const FunctionalKind& kind) {
  switch (kind.tag) {
    case FunctionalTag::APm: return fmt::format("p={};m={}", kind.p, kind.m);
    case FunctionalTag::DNm: return fmt::format("N={};m={}", kind.n, kind.m);
    case FunctionalTag::GMpN:
      return fmt::format("m={};p={};N={}", kind.m, format_number(kind.p_exp), kind.n);
    case FunctionalTag::HpN: return fmt::format("p={};N={}", format_number(kind.p_exp), kind.n);
    case FunctionalTag::IM: {
      std::string s = "d=";
      for (std::size_t i = 0; i < kind.d.size(); ++i) {
        if (i) s += ' ';
        s += format_number(kind.d[i]);
      }
      return s;
    }
    case FunctionalTag::LemmaTail: return fmt::format("N={}", kind.n);
  }
  return "";
}

std::string report_csv_header() { return "kind,params,r,value,tail_error,margin,certified"; }

std::string report_csv_row(const FunctionalKind& kind, const EvaluationReport& rep) {
  return fmt::format("{},{},{},{},{},{},{}", to_string(kind.tag), kind_params(kind),
                     format_number(rep.inputs.r), format_number(rep.value),
                     format_number(rep.tail_error), format_number(rep.margin),
                     rep.certified ? "true" : "false");
}

Json witness_to_json(const WitnessReport& w) {
  return Json{{"tag", to_string(w.tag)}, {"kind", w.kind},         {"radius", w.radius},
              {"r", w.r},                {"a", w.a},               {"value", w.value},
              {"tail_error", w.tail_error}, {"excess", w.excess}, {"exceeds", w.exceeds}};
}

Json campaign_to_json(const CampaignSummary& s) {
  return Json{{"kind", s.kind.describe()},
              {"trials", s.trials},
              {"seed", s.seed},
              {"r", s.r},
              {"max_margin", s.max_margin},
              {"tail_at_max", s.tail_at_max},
              {"argmax", s.argmax},
              {"argmax_sample", s.argmax_sample.describe()},
              {"violations", s.violations},
              {"pass", s.violations == 0}};
}

}  // namespace bohrlab::io
