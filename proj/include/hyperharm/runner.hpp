#pragma once

#include <string>
#include <vector>

#include "hyperharm/config.hpp"
#include "hyperharm/serialize.hpp"

namespace hyperharm {

struct RunResult {
  int status = 0;  // 0 pass, 1 assertion failure; errors are thrown
  Json document;
  std::string summary;
  std::vector<std::string> files;
};

/// Commands: transform, bound, verify, heat-curve. Files go to the "out" directory of the config;
/// an empty "out" writes nothing.
RunResult run_command(const std::string& command, const RunConfig& config);

}  // namespace hyperharm
