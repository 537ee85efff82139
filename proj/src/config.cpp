#include "filament/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "filament/errors.hpp"

namespace filament {
namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& raw)
{
    std::string v = trim(raw);
    double factor = 1.0;
    if (v == "pi")
        return pi;
    if (v.size() > 3 && v.compare(v.size() - 3, 3, "*pi") == 0) {
        factor = pi;
        v = trim(v.substr(0, v.size() - 3));
    }
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("'" + key + "': not a number: '" + raw + "'");
    return out * factor;
}

long parse_integer(const std::string& key, const std::string& raw)
{
    const std::string v = trim(raw);
    long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("'" + key + "': not an integer: '" + raw + "'");
    return out;
}

bool parse_bool(const std::string& key, const std::string& raw)
{
    const std::string v = trim(raw);
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ConfigError("'" + key + "': not a boolean: '" + raw + "'");
}

}  // namespace

Curve load_samples(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read sample file " + path.string());
    Curve out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty() || std::isalpha(static_cast<unsigned char>(line[0])))
            continue;
        std::vector<double> vals;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            vals.push_back(parse_number(path.string(), cell));
        if (vals.size() == 3)
            out.emplace_back(vals[1], vals[2]);
        else if (vals.size() == 2)
            out.emplace_back(vals[0], vals[1]);
        else
            throw ConfigError("sample file rows need 2 or 3 columns: " + line);
    }
    return out;
}

RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir)
{
    boost::property_tree::ptree tree;
    std::istringstream in(text);
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(std::string("config syntax: ") + e.what());
    }

    static const std::set<std::string> known = {
        "grid.n_nodes", "time.dt", "time.t_final", "ic.preset", "ic.a", "ic.d", "ic.w", "ic.h", "ic.s_w",
        "ic.s_d", "ic.c", "ic.file", "bounds.M_bound", "bounds.m_bound", "bounds.sigma", "bounds.check_every",
        "output.snapshot_every", "output.diagnostics", "equilibrium.area", "equilibrium.center",
        "convergence.sizes", "convergence.dt", "convergence.t_final"};

    RunConfig rc;
    SimConfig& cfg = rc.sim;
    std::optional<std::string> sample_file;
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty())
            throw ConfigError("key '" + section + "' outside any section");
        for (const auto& [name, node] : body) {
            const std::string key = section + "." + name;
            const std::string raw = node.data();
            rc.echo.emplace_back(key, raw);
            if (section == "tolerances") {
                cfg.tolerances[name] = parse_number(key, raw);
                continue;
            }
            if (!known.count(key))
                throw ConfigError("unknown config key '" + key + "'");
            if (key == "grid.n_nodes") {
                const long n = parse_integer(key, raw);
                if (n < 4)
                    throw ConfigError("grid.n_nodes must be at least 4");
                cfg.n_nodes = static_cast<std::size_t>(n);
            } else if (key == "time.dt") cfg.dt = parse_number(key, raw);
            else if (key == "time.t_final") cfg.t_final = parse_number(key, raw);
            else if (key == "ic.preset") cfg.ic.preset = preset_from_name(trim(raw));
            else if (key == "ic.a") cfg.ic.a = parse_number(key, raw);
            else if (key == "ic.d") cfg.ic.d = parse_number(key, raw);
            else if (key == "ic.w") cfg.ic.w = parse_number(key, raw);
            else if (key == "ic.h") cfg.ic.h = parse_number(key, raw);
            else if (key == "ic.s_w") cfg.ic.s_w = parse_number(key, raw);
            else if (key == "ic.s_d") cfg.ic.s_d = parse_number(key, raw);
            else if (key == "ic.c") cfg.ic.c = parse_number(key, raw);
            else if (key == "ic.file") sample_file = trim(raw);
            else if (key == "bounds.M_bound") cfg.bounds.M_bound = parse_number(key, raw);
            else if (key == "bounds.m_bound") cfg.bounds.m_bound = parse_number(key, raw);
            else if (key == "bounds.sigma") cfg.bounds.sigma = parse_number(key, raw);
            else if (key == "bounds.check_every") cfg.geometry_check_every = parse_integer(key, raw);
            else if (key == "output.snapshot_every") cfg.snapshot_every = parse_integer(key, raw);
            else if (key == "output.diagnostics") cfg.record_diagnostics = parse_bool(key, raw);
            else if (key == "equilibrium.area") rc.equilibrium_area = parse_number(key, raw);
            else if (key == "equilibrium.center") rc.equilibrium_center = parse_number(key, raw);
            else if (key == "convergence.dt") rc.convergence_dt = parse_number(key, raw);
            else if (key == "convergence.t_final") rc.convergence_t_final = parse_number(key, raw);
            else if (key == "convergence.sizes") {
                rc.convergence_sizes.clear();
                std::stringstream ss(raw);
                std::string cell;
                while (std::getline(ss, cell, ','))
                    rc.convergence_sizes.push_back(static_cast<std::size_t>(parse_integer(key, cell)));
            }
        }
    }

    if (cfg.ic.preset == Preset::custom) {
        if (!sample_file)
            throw ConfigError("custom preset needs ic.file");
        std::filesystem::path p(*sample_file);
        if (p.is_relative())
            p = base_dir / p;
        cfg.ic.samples = load_samples(p);
        cfg.n_nodes = cfg.ic.samples.size();
    }
    cfg.validate();
    return rc;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.parent_path().empty() ? "." : path.parent_path());
}

}  // namespace filament
