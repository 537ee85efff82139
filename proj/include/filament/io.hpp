#pragma once

#include <chrono>
#include <filesystem>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "filament/diagnostics.hpp"
#include "filament/timestepper.hpp"

namespace filament {

inline constexpr const char* version_string = "0.1.0";

/// Shortest-round-trip-safe text with 17 significant digits, independent of
/// the C and C++ locales.
std::string format_double(double v);

inline constexpr const char* diagnostics_header =
    "step,time,area,area_rel_error,iso_error,chord_arc,min_height,remainder_endpoint_norm";

void write_diagnostics(std::ostream& out, const std::vector<DiagnosticsRecord>& rows);

/// One block per snapshot: "# t=<time>", then rows "s,X1,X2"; blocks are
/// separated by a blank line.
void write_trajectory(std::ostream& out, const std::vector<TrajectoryState>& snapshots);

struct RunManifest {
    std::string mode;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::string config_path;
    std::chrono::system_clock::time_point start;
    std::chrono::system_clock::time_point end;
    int exit_code = 0;
    bool seedless = false;
    std::vector<std::string> outputs;
};

std::string platform_string();
void write_manifest(const std::filesystem::path& path, const RunManifest& m);

}  // namespace filament
