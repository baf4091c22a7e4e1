#include "gevreylab/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gvl {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& what) {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " +
                                what);
}

}  // namespace

double parse_real(const std::string& token, const std::string& context) {
    std::string t = trim(token);
    double factor = 1.0;
    if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
        factor = std::numbers::pi;
        t = trim(t.substr(0, t.size() - 2));
        if (t.empty() || t == "-") t += "1";
    } else if (t == "pi") {
        return std::numbers::pi;
    }
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(context + ": cannot parse real '" + token +
                                    "'");
    }
    if (pos != t.size())
        throw std::invalid_argument(context + ": trailing junk in real '" +
                                    token + "'");
    return v * factor;
}

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(origin, lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(origin, lineno, "empty key");
        if (value.empty()) fail(origin, lineno, "empty value for '" + key + "'");
        if (cfg.kv_.count(key))
            fail(origin, lineno, "duplicate key '" + key + "'");
        cfg.kv_[key] = value;
    }
    return cfg;
}

Config Config::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file: " +
                                    path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

std::string Config::serialize() const {
    std::ostringstream out;
    for (const auto& [k, v] : kv_) out << k << " = " << v << "\n";
    return out.str();
}

std::string Config::get_string(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end())
        throw std::invalid_argument("config: missing key '" + key + "'");
    return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double Config::get_real(const std::string& key) const {
    return parse_real(get_string(key), "config key '" + key + "'");
}

double Config::get_real(const std::string& key, double fallback) const {
    return has(key) ? get_real(key) : fallback;
}

long Config::get_int(const std::string& key) const {
    const std::string s = get_string(key);
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key +
                                    "': cannot parse integer '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument("config key '" + key +
                                    "': trailing junk in integer '" + s + "'");
    return v;
}

long Config::get_int(const std::string& key, long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string s = get_string(key);
    if (s == "true" || s == "on" || s == "1") return true;
    if (s == "false" || s == "off" || s == "0") return false;
    throw std::invalid_argument("config key '" + key +
                                "': expected a boolean, got '" + s + "'");
}

std::vector<std::string> Config::get_list(const std::string& key) const {
    std::vector<std::string> out;
    std::string s = get_string(key);
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string tok =
            trim(s.substr(start, comma == std::string::npos ? std::string::npos
                                                            : comma - start));
        if (!tok.empty()) out.push_back(tok);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<double> Config::get_real_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& tok : get_list(key))
        out.push_back(parse_real(tok, "config key '" + key + "'"));
    return out;
}

}  // namespace gvl
