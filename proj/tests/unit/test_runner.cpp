#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperharm/config.hpp"
#include "hyperharm/error.hpp"
#include "hyperharm/report.hpp"
#include "hyperharm/runner.hpp"
#include "hyperharm/serialize.hpp"

using namespace hyperharm;
namespace fs = std::filesystem;

namespace {

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Usage;
}

std::string error_text(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("hyperharm_unit_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config parsing") {
  RunConfig c;
  CHECK(c.get("geometry") == "hyperbolic");
  CHECK(c.number("n") == 3.0);
  CHECK_FALSE(c.has_value("p"));
  CHECK(std::isnan(c.number_or_nan("p")));
  c.load_text("# comment\n p = 1.5 \n\nt_grid = 0.1, 1,inf\nexploratory=yes # trailing\n");
  CHECK(c.number("p") == 1.5);
  CHECK(c.list("t_grid") == std::vector<double>{0.1, 1.0, kInfinity});
  CHECK(c.flag("exploratory"));

  CHECK(kind_of([&] { c.set("nonsense", "1"); }) == ErrorKind::Usage);
  std::string msg = error_text([&] { c.load_text("p=2\nbogus=1\n", "run.cfg"); });
  CHECK(msg.find("run.cfg:2") != std::string::npos);
  CHECK(kind_of([&] { c.load_text("just words\n"); }) == ErrorKind::Parse);
  c.set("q", "four");
  CHECK(kind_of([&] { c.number("q"); }) == ErrorKind::Parse);
  c.set("n", "2.5");
  CHECK(kind_of([&] { c.integer("n"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { geometry_from(c); }) == ErrorKind::InvalidDimension);
}

TEST_CASE("config builders") {
  RunConfig c;
  c.set("geometry", "jacobi");
  CHECK(kind_of([&] { geometry_from(c); }) == ErrorKind::InvalidParameters);
  c.set("alpha", "1.5");
  c.set("beta", "0.5");
  CHECK(geometry_from(c).rho == 3.0);

  RunConfig s;
  s.set("symbol", "indicator");
  s.set("R", "2");
  CHECK(symbol_from(s, make_hyperbolic(3))(1.9) == cplx(1.0));
  s.set("symbol", "wavelet");
  CHECK(kind_of([&] { symbol_from(s, make_hyperbolic(3)); }) == ErrorKind::Usage);

  RunConfig o;
  o.set("fit_lo", "0.5");
  o.set("fit_hi", "0.1");
  CHECK(kind_of([&] { suite_options_from(o); }) == ErrorKind::InvalidParameter);
  RunConfig x;
  x.set("p", "3");
  CHECK(kind_of([&] { suite_options_from(x); }) == ErrorKind::InvalidExponent);
  RunConfig ok;
  ok.set("t_grid", "0.01,0.1");
  CHECK(suite_options_from(ok).t_grid.size() == 2u);
}

TEST_CASE("two-column csv") {
  fs::path dir = scratch("csv");
  std::ofstream(dir / "good.csv") << "lambda,value\n0,1\n1,0.5\n2,0.25\n";
  auto rows = read_two_column_csv((dir / "good.csv").string());
  CHECK(rows.size() == 3u);
  CHECK(rows[2].second == 0.25);
  std::ofstream(dir / "bad.csv") << "lambda,value\n0,1\n1,x\n";
  std::string msg = error_text([&] { read_two_column_csv((dir / "bad.csv").string()); });
  CHECK(msg.find("bad.csv:3") != std::string::npos);
  CHECK(kind_of([&] { read_two_column_csv((dir / "missing.csv").string()); }) == ErrorKind::Io);
}

TEST_CASE("serialization") {
  CHECK(json_number(kInfinity) == "inf");
  CHECK(json_number(std::nan("")).is_null());
  CHECK(json_number(0.5) == 0.5);
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(kInfinity) == "inf");

  VerificationRecord rec{"hy", "gaussian", 1.0, 2.0, 0.5, {{"p", 1.5}}, false};
  std::string csv = records_csv({rec});
  CHECK(csv.rfind("inequality,item,lhs,rhs_core,ratio,exploratory,parameters\n", 0) == 0);
  CHECK(csv.find("hy,gaussian,1,2,0.5,false") != std::string::npos);
  CHECK(curve_csv({}).rfind("t,empirical,bound\n", 0) == 0);

  BoundReport br;
  br.value = kInfinity;
  br.components.push_back({"far", kInfinity, 3.0, false});
  Json j = to_json(br);
  for (const char* key : {"value", "components", "argmax", "converged", "refinements"}) CHECK(j.contains(key));
  CHECK(j["value"] == "inf");
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorKind::OutOfStrip) == kExitValidation);
  CHECK(exit_code_for(ErrorKind::Usage) == kExitValidation);
  CHECK(exit_code_for(ErrorKind::Accuracy) == kExitNumerical);
  CHECK(exit_code_for(ErrorKind::TruncationRisk) == kExitNumerical);
}

TEST_CASE("bound command") {
  RunConfig c;
  c.set("out", "");
  c.set("bound", "heat");
  c.set("t", "0.25");
  c.set("p", "4/3");
  CHECK(kind_of([&] { run_command("bound", c); }) == ErrorKind::Parse);
  c.set("p", "1.3333333333333333");
  c.set("q", "4");
  auto heat = run_command("bound", c);
  CHECK(heat.document["value"].get<double>() == doctest::Approx(std::pow(4.0, 0.75)).epsilon(1e-15));
  CHECK(heat.files.empty());

  c.set("bound", "weak");
  c.set("symbol", "indicator");
  c.set("R", "2");
  auto weak = run_command("bound", c);
  // ∫_{−2}^{2} λ²/(2π) dλ = 8/(3π), to the power 1/r = 1/2
  CHECK(weak.document["value"].get<double>() == doctest::Approx(std::sqrt(8.0 / (3.0 * M_PI))).epsilon(1e-9));
  CHECK(weak.document["config"]["R"] == "2");
  CHECK(weak.document["config"].size() == config_defaults().size());

  c.set("bound", "spectral");
  c.set("symbol", "tabulated");
  fs::path dir = scratch("bound");
  std::ofstream(dir / "phi.csv") << "s,phi\n1,1\n2,0.2\n3,0.8\n4,0.1\n";
  c.set("symbol_file", (dir / "phi.csv").string());
  CHECK(kind_of([&] { run_command("bound", c); }) == ErrorKind::HypothesisViolation);
  c.set("bound", "nope");
  CHECK(kind_of([&] { run_command("bound", c); }) == ErrorKind::Usage);
}

TEST_CASE("transform command") {
  fs::path dir = scratch("transform");
  RunConfig c;
  c.set("out", dir.string());
  c.set("round_trip", "true");
  auto r = run_command("transform", c);
  std::string csv = slurp(dir / "transform.csv");
  CHECK(csv.rfind("lambda,re,im\n", 0) == 0);
  CHECK(r.document["plancherel_defect"].get<double>() < 1e-6);
  CHECK(fs::exists(dir / "transform.json"));

  c.set("shift", "2");
  CHECK(kind_of([&] { run_command("transform", c); }) == ErrorKind::OutOfStrip);

  c.set("shift", "0");
  c.set("input", "gaussian");
  c.set("input_file", "");
  std::ofstream(dir / "f.csv") << "r,f\n0,1\n1,0.5\nnot,numbers\n";
  c.set("input_file", (dir / "f.csv").string());
  CHECK(kind_of([&] { run_command("transform", c); }) == ErrorKind::Parse);
}

TEST_CASE("verify command is deterministic") {
  fs::path a = scratch("verify_a");
  RunConfig c;
  c.set("suite", "hyp");
  c.set("out", a.string());
  auto first = run_command("verify", c);
  CHECK(first.status == kExitPass);
  CHECK(fs::exists(a / "hyp_report.json"));
  CHECK(fs::exists(a / "hyp_records.csv"));
  std::string json1 = slurp(a / "hyp_report.json");
  std::string csv1 = slurp(a / "hyp_records.csv");
  auto second = run_command("verify", c);
  CHECK(slurp(a / "hyp_report.json") == json1);
  CHECK(slurp(a / "hyp_records.csv") == csv1);

  Json j = Json::parse(json1);
  for (const char* key : {"suite", "geometry", "parameters", "records", "summary", "config"}) CHECK(j.contains(key));
  CHECK(j["summary"].contains("max_ratio"));
  CHECK(j["summary"].contains("slope_fits"));

  c.set("suite", "unknown");
  CHECK(kind_of([&] { run_command("verify", c); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { run_command("frobnicate", c); }) == ErrorKind::Usage);
}

TEST_CASE("heat-curve command") {
  fs::path dir = scratch("curve");
  RunConfig c;
  c.set("out", dir.string());
  c.set("t_grid", "0.01,0.1,1");
  c.set("heat_items", "3");
  auto r = run_command("heat-curve", c);
  std::string csv = slurp(dir / "heat_curve.csv");
  CHECK(csv.rfind("t,empirical,bound\n", 0) == 0);
  CHECK(r.document["curve"].size() == 3u);
  CHECK(r.document["slope_fit"]["points"] == 2);
}
