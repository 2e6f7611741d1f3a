#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "wordlab/metrics.hpp"
#include "wordlab/sim.hpp"

namespace wordlab {

/// Experiment settings plus reporting options, read from flat
/// `key=value` text. List values are comma separated; '#' starts a comment.
///
///   board=15
///   d=0.1,0.5,1
///   p=0.1,0.2,0.3
///   matches=50
///   seed=42
///   dict=../data/sowpods.txt
///
/// Optional keys: tiles, workers, fit_p_min, fit_p_max, tendency_eps,
/// per_turn (true/false), records (true/false).
struct RunConfig {
    ExperimentConfig experiment;
    FitRange fit;
    double tendency_tolerance = kDefaultTendencyTolerance;
    bool per_turn = false;
    bool records = false;
    std::map<std::string, std::string> raw;  ///< keys as written, for the manifest
};

/// Relative paths resolve against `base_dir`. Throws ConfigError.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
/// Throws IoError if the file cannot be read, ConfigError if it is malformed.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace wordlab
