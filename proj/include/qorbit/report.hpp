#pragma once

#include <string>
#include <vector>

namespace qorbit {

struct CheckRecord {
    std::string id;
    std::string detail;   // what identity the check decided
    bool pass = false;
    std::string witness;  // rendered counterexample on failure
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> checks;

    void add(std::string id, std::string detail, bool pass, std::string witness = "");
    void merge(const Report& other);
    bool all_passed() const;
    std::size_t failures() const;
};

} // namespace qorbit
