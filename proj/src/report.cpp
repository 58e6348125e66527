#include "qorbit/report.hpp"

namespace qorbit {

void Report::add(std::string id, std::string detail, bool pass, std::string witness) {
    checks.push_back({std::move(id), std::move(detail), pass, std::move(witness)});
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

} // namespace qorbit
