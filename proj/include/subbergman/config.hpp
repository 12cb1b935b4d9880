#ifndef SUBBERGMAN_CONFIG_HPP
#define SUBBERGMAN_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace subbergman {

/// Flat `key = value` configuration with `#` comments. Every key must be one
/// of the known keys; unknown keys are configuration errors. The full
/// resolved map is embedded in each run report.
class Config {
public:
    /// All known keys with their default values.
    Config();

    static Config from_text(const std::string& text, const std::string& origin = "<text>");
    static Config from_file(const std::string& path);

    /// Applies `key=value`; later calls win.
    void set(const std::string& key, const std::string& value);
    void apply_override(const std::string& assignment);

    const std::string& raw(const std::string& key) const;
    double real(const std::string& key) const;
    std::size_t count(const std::string& key) const;
    std::uint64_t seed(const std::string& key) const;
    std::vector<double> real_list(const std::string& key) const;

    const std::map<std::string, std::string>& values() const noexcept { return values_; }

    /// Parses every value with its expected type; throws std::invalid_argument
    /// naming the offending key.
    void validate() const;

private:
    std::map<std::string, std::string> values_;
};

}  // namespace subbergman

#endif
