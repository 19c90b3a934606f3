#ifndef RYDSIM_SCENARIO_HPP
#define RYDSIM_SCENARIO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "rydsim/config.hpp"

namespace rydsim {

inline constexpr const char* artifact_version = "rydsim 0.1.0";

struct OutputBundle {
    std::vector<std::filesystem::path> csv_files;
    std::vector<std::filesystem::path> svg_files;
    std::filesystem::path manifest;
};

// Run the named scenario and write its CSV tables, SVG plots and the run
// manifest into config.output_dir. Deterministic: identical config and seed
// produce byte-identical CSV files.
OutputBundle run_scenario(const ScenarioConfig& config);

} // namespace rydsim

#endif
