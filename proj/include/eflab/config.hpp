#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace eflab {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Flat key-value configuration with [section] headers; ordered so that
// emission is canonical and goldens diff cleanly.
class Config {
public:
    void set(const std::string& section, const std::string& key, const std::string& value) {
        auto& sec = section_ref(section);
        for (auto& kv : sec.second) {
            if (kv.first == key) {
                kv.second = value;
                return;
            }
        }
        sec.second.emplace_back(key, value);
    }

    bool has(const std::string& section, const std::string& key) const {
        for (const auto& sec : sections_)
            if (sec.first == section)
                for (const auto& kv : sec.second)
                    if (kv.first == key) return true;
        return false;
    }

    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback = "") const {
        for (const auto& sec : sections_)
            if (sec.first == section)
                for (const auto& kv : sec.second)
                    if (kv.first == key) return kv.second;
        return fallback;
    }

    double get_double(const std::string& section, const std::string& key, double fallback) const {
        std::string v = get(section, key);
        if (v.empty()) return fallback;
        try {
            std::size_t pos = 0;
            double d = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return d;
        } catch (const std::exception&) {
            throw ConfigError("config: bad numeric value for [" + section + "] " + key + " = " + v);
        }
    }

    long get_int(const std::string& section, const std::string& key, long fallback) const {
        std::string v = get(section, key);
        if (v.empty()) return fallback;
        try {
            std::size_t pos = 0;
            long d = std::stol(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return d;
        } catch (const std::exception&) {
            throw ConfigError("config: bad integer value for [" + section + "] " + key + " = " + v);
        }
    }

    std::vector<double> get_list(const std::string& section, const std::string& key,
                                 const std::vector<double>& fallback) const {
        std::string v = get(section, key);
        if (v.empty()) return fallback;
        std::vector<double> out;
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                out.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ConfigError("config: bad list value for [" + section + "] " + key + " = " + v);
            }
        }
        if (out.empty()) throw ConfigError("config: empty list for [" + section + "] " + key);
        return out;
    }

    static Config parse(const std::string& text) {
        Config cfg;
        std::istringstream in(text);
        std::string line, section;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string s = trim(line);
            if (s.empty() || s[0] == '#') continue;
            if (s.front() == '[') {
                if (s.back() != ']')
                    throw ConfigError("config: unterminated section header on line " + std::to_string(lineno));
                section = trim(s.substr(1, s.size() - 2));
                if (section.empty())
                    throw ConfigError("config: empty section name on line " + std::to_string(lineno));
                cfg.section_ref(section);
                continue;
            }
            auto eq = s.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config: expected key = value on line " + std::to_string(lineno));
            std::string key = trim(s.substr(0, eq));
            std::string val = trim(s.substr(eq + 1));
            if (key.empty())
                throw ConfigError("config: empty key on line " + std::to_string(lineno));
            if (section.empty())
                throw ConfigError("config: key outside any section on line " + std::to_string(lineno));
            cfg.set(section, key, val);
        }
        return cfg;
    }

    std::string emit() const {
        std::string out;
        for (std::size_t i = 0; i < sections_.size(); ++i) {
            if (i) out += "\n";
            out += "[" + sections_[i].first + "]\n";
            for (const auto& kv : sections_[i].second) out += kv.first + " = " + kv.second + "\n";
        }
        return out;
    }

    using Section = std::pair<std::string, std::vector<std::pair<std::string, std::string>>>;

    const std::vector<Section>& sections() const { return sections_; }

    // Lays every key of other on top of this config.
    void apply(const Config& other) {
        for (const auto& sec : other.sections())
            for (const auto& kv : sec.second) set(sec.first, kv.first, kv.second);
    }

private:
    Section& section_ref(const std::string& name) {
        for (auto& sec : sections_)
            if (sec.first == name) return sec;
        sections_.emplace_back(name, std::vector<std::pair<std::string, std::string>>{});
        return sections_.back();
    }

    static std::string trim(const std::string& s) {
        std::size_t a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return "";
        std::size_t b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    }

    std::vector<Section> sections_;
};

} // namespace eflab
