#include "qorbit/config.hpp"

#include <cstdlib>
#include <fstream>

#include "qorbit/rational.hpp"

namespace qorbit {

Config Config::load_default() {
    const char* path = std::getenv("QORBIT_CONFIG");
    if (path && *path) return load_file(path);
    return Config{};
}

Config Config::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file '" + path + "'");
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw usage_error("config line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r\n");
            auto e = s.find_last_not_of(" \t\r\n");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "dim_cutoff")
                cfg.dim_cutoff = std::stoi(value);
            else if (key == "probe_degree")
                cfg.probe_degree = std::stoi(value);
            else if (key == "sample_count")
                cfg.sample_count = std::stoi(value);
            else if (key == "seed")
                cfg.seed = static_cast<unsigned>(std::stoul(value));
            else
                throw usage_error("config line " + std::to_string(lineno) + ": unknown key '" +
                                  key + "'");
        } catch (const std::invalid_argument&) {
            throw usage_error("config line " + std::to_string(lineno) + ": bad value");
        }
    }
    if (cfg.dim_cutoff < 1 || cfg.probe_degree < 1 || cfg.sample_count < 1)
        throw usage_error("config values must be positive");
    return cfg;
}

} // namespace qorbit
