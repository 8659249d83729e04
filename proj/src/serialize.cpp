#include "hyperharm/serialize.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperharm/error.hpp"

namespace hyperharm {

Json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const Geometry& geom) {
  Json j;
  j["label"] = geom.label();
  j["alpha"] = geom.alpha;
  j["beta"] = geom.beta;
  j["rho"] = geom.rho;
  j["n"] = geom.n;
  j["nu"] = geom.nu;
  j["preset"] = geom.preset;
  if (!geom.preset) j["convention_notice"] = geom.convention_notice();
  return j;
}

Json to_json(const Parameters& params) {
  // arrays keep the insertion order, which carries meaning for records
  Json j = Json::array();
  for (const auto& [key, value] : params) j.push_back({{"name", key}, {"value", json_number(value)}});
  return j;
}

Json to_json(const RunConfig& config) {
  Json j = Json::object();
  for (const auto& [key, value] : config.entries()) j[key] = value;
  return j;
}

Json to_json(const VerificationRecord& rec) {
  return {{"inequality", rec.inequality}, {"item", rec.item},         {"lhs", json_number(rec.lhs)},
          {"rhs_core", json_number(rec.rhs_core)}, {"ratio", json_number(rec.ratio)},
          {"parameters", to_json(rec.parameters)}, {"exploratory", rec.exploratory}};
}

Json to_json(const SlopeFit& fit) {
  return {{"name", fit.name},
          {"slope", json_number(fit.slope)},
          {"intercept", json_number(fit.intercept)},
          {"expected", json_number(fit.expected)},
          {"points", fit.points}};
}

Json to_json(const BoundReport& report) {
  Json components = Json::array();
  for (const auto& c : report.components)
    components.push_back({{"name", c.name},
                          {"value", json_number(c.value)},
                          {"argmax", json_number(c.argmax)},
                          {"converged", c.converged}});
  return {{"value", json_number(report.value)},
          {"argmax", json_number(report.argmax)},
          {"converged", report.converged},
          {"refinements", report.refinements},
          {"components", components},
          {"notes", report.notes}};
}

Json to_json(const SuiteReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) records.push_back(to_json(r));
  Json assertions = Json::array();
  for (const auto& a : report.assertions)
    assertions.push_back({{"name", a.name},
                          {"passed", a.passed},
                          {"value", json_number(a.value)},
                          {"limit", json_number(a.limit)},
                          {"detail", a.detail}});
  Json fits = Json::array();
  for (const auto& f : report.fits) fits.push_back(to_json(f));
  Json j;
  j["suite"] = report.suite;
  j["geometry"] = to_json(report.geometry);
  j["parameters"] = to_json(report.parameters);
  j["records"] = records;
  j["assertions"] = assertions;
  j["summary"] = {{"max_ratio", json_number(report.max_ratio)},
                  {"median_ratio", json_number(report.median_ratio)},
                  {"slope_fits", fits}};
  j["notes"] = report.notes;
  j["passed"] = report.passed();
  if (!report.curve.empty()) {
    Json curve = Json::array();
    for (const auto& p : report.curve)
      curve.push_back({{"t", json_number(p.t)},
                       {"empirical", json_number(p.empirical)},
                       {"bound", json_number(p.bound)},
                       {"argmax_item", p.argmax_item}});
    j["curve"] = curve;
  }
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string records_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream out;
  out << "inequality,item,lhs,rhs_core,ratio,exploratory,parameters\n";
  for (const auto& r : records) {
    std::string params;
    for (const auto& [k, v] : r.parameters) {
      if (!params.empty()) params += ';';
      params += k + "=" + format_number(v);
    }
    out << csv_field(r.inequality) << ',' << csv_field(r.item) << ',' << format_number(r.lhs) << ','
        << format_number(r.rhs_core) << ',' << format_number(r.ratio) << ',' << (r.exploratory ? "true" : "false")
        << ',' << csv_field(params) << '\n';
  }
  return out.str();
}

std::string curve_csv(const std::vector<HeatPoint>& curve) {
  std::ostringstream out;
  out << "t,empirical,bound\n";
  for (const auto& p : curve)
    out << format_number(p.t) << ',' << format_number(p.empirical) << ',' << format_number(p.bound) << '\n';
  return out.str();
}

std::string spectral_csv(const SpectralFunction& F) {
  std::ostringstream out;
  out << "lambda,re,im\n";
  const auto& lam = F.grid().nodes();
  for (std::size_t i = 0; i < lam.size(); ++i)
    out << format_number(lam[i]) << ',' << format_number(F.samples()[i].real()) << ','
        << format_number(F.samples()[i].imag()) << '\n';
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::filesystem::path target(path);
  std::error_code ec;
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path(), ec);
  std::ofstream out(target, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot write ", path);
  out << text;
  if (!out) fail(ErrorKind::Io, "write failed for ", path);
}

}  // namespace hyperharm
