#include "filament/io.hpp"

#include <sys/utsname.h>

#include <charconv>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "filament/errors.hpp"

namespace filament {
namespace {

std::string iso_time(std::chrono::system_clock::time_point tp)
{
    const std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_diagnostics(std::ostream& out, const std::vector<DiagnosticsRecord>& rows)
{
    out << diagnostics_header << '\n';
    for (const auto& r : rows) {
        out << r.step << ',' << format_double(r.time) << ',' << format_double(r.area) << ','
            << format_double(r.area_rel_error) << ',' << format_double(r.iso_error) << ','
            << format_double(r.chord_arc) << ',' << format_double(r.min_height) << ','
            << format_double(r.remainder_endpoint_norm) << '\n';
    }
}

void write_trajectory(std::ostream& out, const std::vector<TrajectoryState>& snapshots)
{
    bool first = true;
    for (const auto& snap : snapshots) {
        if (!first)
            out << '\n';
        first = false;
        out << "# t=" << format_double(snap.time) << '\n';
        const Filament& f = snap.filament;
        for (std::size_t j = 0; j < f.size(); ++j)
            out << format_double(f.s(j)) << ',' << format_double(f[j].x()) << ',' << format_double(f[j].y())
                << '\n';
    }
}

std::string platform_string()
{
    utsname u{};
    std::string os = "unknown";
    if (uname(&u) == 0)
        os = std::string(u.sysname) + " " + u.release + " " + u.machine;
#if defined(__clang__)
    const std::string cc = "clang " __clang_version__;
#elif defined(__GNUC__)
    const std::string cc = "gcc " __VERSION__;
#else
    const std::string cc = "unknown compiler";
#endif
    return os + "; " + cc;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m)
{
    nlohmann::ordered_json j;
    j["mode"] = m.mode;
    j["code_version"] = version_string;
    j["platform"] = platform_string();
    j["config_path"] = m.config_path;
    nlohmann::ordered_json echo = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.config_echo)
        echo[k] = v;
    j["config"] = echo;
    j["seedless"] = m.seedless;
    j["start"] = iso_time(m.start);
    j["end"] = iso_time(m.end);
    j["exit_code"] = m.exit_code;
    j["outputs"] = m.outputs;
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write manifest " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace filament
