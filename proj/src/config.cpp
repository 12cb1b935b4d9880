#include "subbergman/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "subbergman/operators.hpp"

namespace subbergman {

namespace {

enum class ValueType { real, count, seed, real_list, window };

struct KeyInfo {
    const char* key;
    const char* default_value;
    ValueType type;
};

// Default sizes are chosen so the bundled scenario runs in minutes.
constexpr KeyInfo kKeys[] = {
    {"matrix_size", "400", ValueType::count},
    {"series_length", "200", ValueType::count},
    {"singular_series_length", "600", ValueType::count},
    {"cnp_points", "30", ValueType::count},
    {"cnp_trials", "20", ValueType::count},
    {"seed", "7", ValueType::seed},
    {"cnp_tol", "1e-9", ValueType::real},
    {"cnp_fail_threshold", "1e-6", ValueType::real},
    {"berezin_points", "20", ValueType::count},
    {"berezin_radius", "0.8", ValueType::real},
    {"berezin_tol", "1e-6", ValueType::real},
    {"decay_window", "20:200", ValueType::window},
    {"decay_min", "-1.15", ValueType::real},
    {"decay_max", "-0.85", ValueType::real},
    {"boundary_radius", "0.995", ValueType::real},
    {"boundary_directions", "16", ValueType::count},
    {"boundary_size", "600", ValueType::count},
    {"boundary_blaschke_max", "0.1", ValueType::real},
    {"boundary_singular_min", "0.9", ValueType::real},
    {"rescaling_points", "10", ValueType::count},
    {"rescaling_radius", "0.9", ValueType::real},
    {"rescaling_tol", "1e-8", ValueType::real},
    {"hardy_tol", "1e-12", ValueType::real},
    {"hardy_size", "400", ValueType::count},
    {"lemma11_radii", "0.5,0.9,0.99", ValueType::real_list},
    {"lemma11_directions", "16", ValueType::count},
    {"lemma11_rel_tol", "0.02", ValueType::real},
    {"lemma11_singular_radius", "0.99", ValueType::real},
    {"lemma11_singular_min", "50", ValueType::real},
    {"inclusion_size", "256", ValueType::count},
    {"inclusion_gap", "1", ValueType::real},
    {"inclusion_from", "32", ValueType::count},
    {"inclusion_lo", "0.25", ValueType::real},
    {"inclusion_hi", "4", ValueType::real},
};

const KeyInfo* find_key(const std::string& key) {
    for (const auto& info : kKeys)
        if (key == info.key) return &info;
    return nullptr;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("config key '" + key + "': expected a number, got '" + text + "'");
    }
    return v;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("config key '" + key + "': expected a non-negative integer, got '" + text + "'");
    }
    return v;
}

}  // namespace

Config::Config() {
    for (const auto& info : kKeys) values_[info.key] = info.default_value;
}

Config Config::from_text(const std::string& text, const std::string& origin) {
    Config config;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": expected key = value");
        }
        config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    config.validate();
    return config;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "' for reading");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_text(buffer.str(), path);
}

void Config::set(const std::string& key, const std::string& value) {
    if (!find_key(key)) throw std::invalid_argument("unknown config key '" + key + "'");
    values_[key] = value;
}

void Config::apply_override(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("override must look like key=value, got '" + assignment + "'");
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

const std::string& Config::raw(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw std::invalid_argument("unknown config key '" + key + "'");
    return it->second;
}

double Config::real(const std::string& key) const { return parse_double(key, raw(key)); }

std::size_t Config::count(const std::string& key) const { return static_cast<std::size_t>(parse_unsigned(key, raw(key))); }

std::uint64_t Config::seed(const std::string& key) const { return parse_unsigned(key, raw(key)); }

std::vector<double> Config::real_list(const std::string& key) const {
    std::vector<double> out;
    std::stringstream in(raw(key));
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw std::invalid_argument("config key '" + key + "': expected a comma-separated list");
    return out;
}

void Config::validate() const {
    for (const auto& info : kKeys) {
        switch (info.type) {
            case ValueType::real: (void)real(info.key); break;
            case ValueType::count: (void)count(info.key); break;
            case ValueType::seed: (void)seed(info.key); break;
            case ValueType::real_list: (void)real_list(info.key); break;
            case ValueType::window:
                try {
                    (void)parse_window(raw(info.key));
                } catch (const std::invalid_argument& e) {
                    throw std::invalid_argument(std::string("config key '") + info.key + "': " + e.what());
                }
                break;
        }
    }
}

}  // namespace subbergman
