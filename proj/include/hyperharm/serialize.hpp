#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyperharm/bounds.hpp"
#include "hyperharm/config.hpp"
#include "hyperharm/suites.hpp"
#include "hyperharm/transform.hpp"

namespace hyperharm {

using Json = nlohmann::json;

/// Infinite values become the strings "inf"/"-inf", NaN becomes null.
Json json_number(double x);
/// Shortest round-trip text, "inf" for infinity, "nan" for NaN.
std::string format_number(double x);

Json to_json(const Geometry& geom);
Json to_json(const Parameters& params);
Json to_json(const RunConfig& config);
Json to_json(const VerificationRecord& rec);
Json to_json(const SlopeFit& fit);
Json to_json(const BoundReport& report);
Json to_json(const SuiteReport& report);

/// Header: inequality,item,lhs,rhs_core,ratio,exploratory,parameters
std::string records_csv(const std::vector<VerificationRecord>& records);
/// Header: t,empirical,bound
std::string curve_csv(const std::vector<HeatPoint>& curve);
/// Header: lambda,re,im
std::string spectral_csv(const SpectralFunction& F);

/// Creates parent directories as needed.
void write_text(const std::string& path, const std::string& text);

}  // namespace hyperharm
