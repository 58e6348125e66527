#pragma once

#include <string>

namespace qorbit {

/// Runtime defaults; overridable by a key=value config file located through
/// the QORBIT_CONFIG environment variable, then by CLI flags.
struct Config {
    int dim_cutoff = 64;
    int probe_degree = 3;
    int sample_count = 100;
    unsigned seed = 20240811;

    static Config load_default();                 // env var + file when present
    static Config load_file(const std::string& path);
};

} // namespace qorbit
