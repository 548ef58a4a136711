#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spandec {

// Diagnostic outcome of a validator. Empty violation list means valid.
struct ValidationReport {
    struct Violation {
        std::string property;  // short machine-readable id, e.g. "edge-coverage"
        std::string witness;   // human-readable description of the offender
    };

    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string property, std::string witness) {
        violations.push_back({std::move(property), std::move(witness)});
    }

    std::string summary() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& v : violations) {
            if (!s.empty()) s += "; ";
            s += v.property + ": " + v.witness;
        }
        return s;
    }
};

}  // namespace spandec
