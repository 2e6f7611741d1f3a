#include "wordlab/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wordlab/errors.hpp"

namespace wordlab {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not a number: '" + v + "'");
    }
}

template <class Int>
Int parse_int(const std::string& key, const std::string& v) {
    Int x{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        throw ConfigError("config key '" + key + "': not an integer: '" + v + "'");
    return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("config key '" + key + "': expected true or false");
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError("config key '" + key + "': empty list item");
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
    return out;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& v) {
    std::filesystem::path p(v);
    return p.is_relative() && !base.empty() ? base / p : p;
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
    RunConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (cfg.raw.contains(key)) throw ConfigError("config key '" + key + "' given twice");
        cfg.raw[key] = value;

        auto& e = cfg.experiment;
        if (key == "board") {
            e.board = parse_int<int>(key, value);
        } else if (key == "d") {
            e.d_values = parse_list(key, value);
        } else if (key == "p") {
            e.p_values = parse_list(key, value);
        } else if (key == "matches") {
            e.matches = parse_int<int>(key, value);
        } else if (key == "seed") {
            e.seed = parse_int<std::uint64_t>(key, value);
        } else if (key == "dict") {
            e.dictionary = resolve(base_dir, value);
        } else if (key == "tiles") {
            e.tiles = resolve(base_dir, value);
        } else if (key == "workers") {
            e.workers = parse_int<int>(key, value);
        } else if (key == "fit_p_min") {
            cfg.fit.p_min = parse_double(key, value);
        } else if (key == "fit_p_max") {
            cfg.fit.p_max = parse_double(key, value);
        } else if (key == "tendency_eps") {
            cfg.tendency_tolerance = parse_double(key, value);
        } else if (key == "per_turn") {
            cfg.per_turn = parse_bool(key, value);
        } else if (key == "records") {
            cfg.records = parse_bool(key, value);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    if (!cfg.raw.contains("dict")) throw ConfigError("config must name a dictionary (dict=...)");
    if (cfg.fit.p_min > cfg.fit.p_max) throw ConfigError("fit_p_min exceeds fit_p_max");
    if (cfg.tendency_tolerance < 0) throw ConfigError("tendency_eps must not be negative");
    cfg.experiment.validate();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.parent_path());
}

}  // namespace wordlab
