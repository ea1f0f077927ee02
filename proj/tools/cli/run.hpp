#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "run_config.hpp"

namespace solgeom::cli {

struct RunResult {
    std::vector<std::filesystem::path> artifacts;
    nlohmann::json summary;  // mirror of the <command>.json document
};

// Executes one validated run configuration: computes the requested reports,
// writes every requested artifact under config.out_dir, and logs one line
// per artifact to `log`. Outputs are deterministic for identical configs.
RunResult run(const RunConfig& config, std::ostream& log);

}  // namespace solgeom::cli
