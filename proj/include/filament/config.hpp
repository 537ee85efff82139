#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filament/timestepper.hpp"

namespace filament {

/// Everything a run reads from its configuration file.
struct RunConfig {
    SimConfig sim;
    std::optional<double> equilibrium_area;
    std::optional<double> equilibrium_center;
    std::vector<std::size_t> convergence_sizes{64, 128, 256};
    double convergence_t_final = 0.5;
    double convergence_dt = 0.04;
    std::vector<std::pair<std::string, std::string>> echo;  // "section.key" -> raw value
};

/// INI-style text: [grid] n_nodes; [time] dt, t_final; [ic] preset and its
/// parameters; [bounds] M_bound, m_bound, sigma, check_every; [tolerances]
/// free-form; [output] snapshot_every, diagnostics; [equilibrium] area or
/// center; [convergence] sizes, dt, t_final. Numbers may carry a "*pi"
/// suffix. Throws ConfigError.
RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& path);

/// Rows "s,X1,X2" or "X1,X2"; '#' starts a comment.
Curve load_samples(const std::filesystem::path& path);

}  // namespace filament
