#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gvl {

// Flat key-value experiment configuration: one `section.key = value` per
// line, '#' comments. Values are kept verbatim; typed getters parse on
// demand. Serialization is canonical (sorted keys), so parse -> serialize
// -> parse is the identity on the mapping.
class Config {
public:
    static Config parse(const std::string& text,
                        const std::string& origin = "<string>");
    static Config parse_file(const std::filesystem::path& path);

    std::string serialize() const;

    bool has(const std::string& key) const { return kv_.count(key) > 0; }
    void set(const std::string& key, const std::string& value) {
        kv_[key] = value;
    }

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key,
                           const std::string& fallback) const;
    // Reals accept a "pi" suffix: "40pi" means 40 * pi.
    double get_real(const std::string& key) const;
    double get_real(const std::string& key, double fallback) const;
    long get_int(const std::string& key) const;
    long get_int(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    // Comma-separated list of reals; tokens preserved for column naming.
    std::vector<std::string> get_list(const std::string& key) const;
    std::vector<double> get_real_list(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

    bool operator==(const Config&) const = default;

private:
    std::map<std::string, std::string> kv_;
};

// Shared value parser (used by Config and the CLI): plain real or a real
// with a "pi" suffix.
double parse_real(const std::string& token, const std::string& context);

}  // namespace gvl
