#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include "bohrlab/io.hpp"
#include "test_support.hpp"

using namespace bohrlab;
using namespace bohrlab::io;
using testing::throws_code;

TEST_CASE("numbers print with 17 significant digits and round-trip") {
  CHECK(format_number(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(INFINITY) == "inf");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    CHECK(std::strtod(format_number(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("series JSON round-trip") {
  const LacunarySeries s{1, 2, schur_from_parameters(std::vector<Complex>{{0.3, -0.2}, {0.1, 0.5}}, 12)};
  const LacunarySeries back = series_from_json(Json::parse(series_to_json(s).dump()));
  CHECK(back.m == 1);
  CHECK(back.p == 2);
  CHECK(back.g.coeffs() == s.g.coeffs());
  CHECK(back.g.coefficient_bound() == s.g.coefficient_bound());
  CHECK(back.g.certificate() == s.g.certificate());
  const Json j = series_to_json(s);
  for (const char* key : {"m", "p", "coeffs", "bound", "certificate"}) CHECK(j.contains(key));
}

TEST_CASE("series JSON defaults and errors") {
  const LacunarySeries d = series_from_json(Json::parse(R"({"coeffs": [0.5, [0, 0.25]]})"));
  CHECK(d.m == 0);
  CHECK(d.p == 1);
  CHECK(d.g[1] == Complex(0.0, 0.25));
  CHECK(d.g.certificate() == Certificate::Unknown);
  for (const char* bad : {R"({"m": 1})", R"({"coeffs": [[1, 2, 3]]})", R"({"coeffs": "x"})",
                          R"({"coeffs": [0.1], "m": -1})", R"({"coeffs": [0.1], "m": 1.5})",
                          R"({"coeffs": [2.0]})", R"({"coeffs": [0.1], "certificate": "MAYBE"})"}) {
    CHECK_MESSAGE(throws_code([&] { series_from_json(Json::parse(bad)); }, ErrorCode::Parse), bad);
  }
}

TEST_CASE("function families") {
  const auto in = parse_function_input(R"({"family": "mobius", "a": 0.5})");
  const auto& d = std::get<FunctionDescriptor>(in);
  const CoefficientSeries s = d.materialize(10);
  CHECK(s.coeffs() == mobius_series(0.5, 10).coeffs());
  CHECK(input_certified(in));

  const auto lac = std::get<FunctionDescriptor>(
      parse_function_input(R"({"family": "mobius_minus", "a": 0.2, "m": 1, "p": 3})"));
  const CoefficientSeries e = lac.materialize(30);
  CHECK(e.truncation_order() >= 30);
  CHECK(e[1] == Complex(-0.2));
  CHECK(e[2] == Complex(0.0));
  CHECK(e[4] == mobius_minus_series(0.2, 2)[1]);

  const auto schur =
      std::get<FunctionDescriptor>(parse_function_input(R"({"family": "schur", "gamma": [[0.1, 0.2], 0.3]})"));
  CHECK(schur.materialize(5)[0] == Complex(0.1, 0.2));
  const auto c = std::get<FunctionDescriptor>(parse_function_input(R"({"family": "constant", "value": 0.5})"));
  CHECK(c.materialize(3).modulus(1) == 0.0);

  const std::vector<Complex> coeffs = input_terms(in, 0.3).coeffs();
  CHECK(coeffs.size() == default_truncation(0.3) + 1);
}

TEST_CASE("unknown-certificate input is flagged") {
  const auto in = parse_function_input(R"({"coeffs": [0.5, 0.5]})");
  CHECK_FALSE(input_certified(in));
}

TEST_CASE("parse errors") {
  for (const char* bad :
       {"{", "[]", "3", R"({"family": "mobius"})", R"({"family": "mobius", "a": 1.5})",
        R"({"family": "spiral", "a": 0.5})", R"({"family": 3})", R"({"family": "schur", "gamma": [2.0]})"}) {
    CHECK_MESSAGE(throws_code([&] { parse_function_input(bad); }, ErrorCode::Parse), bad);
  }
}

TEST_CASE("Banach inputs") {
  const char* text = R"({
    "form": "VECTOR_VALUED",
    "domain": {"n": 2, "q": 2},
    "target": {"n": 2, "q": "inf"},
    "u": [1, 0],
    "dir": [1, 0.5],
    "h": {"family": "mobius", "a": 0.4},
    "read": "norm"
  })";
  const auto in = parse_function_input(text);
  const auto& b = std::get<BanachInput>(in);
  CHECK(b.target.is_infinity());
  CHECK(b.mode == ReadMode::Norm);
  // ||h_s dir||_inf = |h_s|
  const CoefficientSeries t = b.terms(8);
  const CoefficientSeries h = mobius_series(0.4, 8);
  for (std::size_t s = 0; s <= 8; ++s) CHECK(t.modulus(s) == doctest::Approx(h.modulus(s)));
  CHECK(space_from_json(space_to_json(b.target)).is_infinity());
  CHECK(describe(in).find("mobius") != std::string::npos);

  const auto z = std::get<BanachInput>(parse_function_input(R"({
    "form": "Z_TIMES_SCALAR", "domain": {"n": 3, "q": 1.5}, "u": [0, 1, 0],
    "h": {"family": "constant", "value": 0.25}})"));
  CHECK(z.mode == ReadMode::Norm);
  CHECK(z.terms(4).modulus(1) == doctest::Approx(0.25));
  CHECK(z.terms(4).modulus(0) == 0.0);

  for (const char* bad : {
           R"({"form": "SIDEWAYS", "domain": {"n": 1, "q": 2}, "u": [1], "h": {"family": "constant", "value": 0}})",
           R"({"form": "SCALAR_COMPOSITE", "domain": {"n": 2, "q": 0.5}, "u": [1, 0], "h": {"family": "constant", "value": 0}})",
           R"({"form": "SCALAR_COMPOSITE", "domain": {"n": 2, "q": 2}, "u": [1], "h": {"family": "constant", "value": 0}})",
           R"({"form": "Z_TIMES_SCALAR", "domain": {"n": 1, "q": 2}, "u": [1], "h": {"family": "constant", "value": 0}, "read": "scalar"})",
           R"({"form": "SCALAR_COMPOSITE", "domain": {"n": 1, "q": 2}, "u": [1], "h": {"family": "constant", "value": 0}, "read": "loud"})"}) {
    CHECK_MESSAGE(throws_code([&] { parse_function_input(bad); }, ErrorCode::Parse), bad);
  }
}

TEST_CASE("report serialization") {
  const FunctionalKind kind = FunctionalKind::a_pm(2, 1);
  const EvaluationReport rep =
      eval_A({1, 2, mobius_minus_series(0.3, default_truncation(0.5))}, 0.5);
  const std::string row = report_csv_row(kind, rep);
  CHECK(row.rfind("A_PM,p=2;m=1,0.5,", 0) == 0);
  const std::string header = report_csv_header();
  CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
  const Json j = report_to_json(rep);
  CHECK(j.at("value").get<double>() == rep.value);
  CHECK(j.at("certified").get<bool>());
  CHECK(kind_params(FunctionalKind::i_m({0.5, 0.25})) == "d=0.5 0.25");
  CHECK(kind_params(FunctionalKind::g_mpn(1, 1.5, 2)) == "m=1;p=1.5;N=2");
}
