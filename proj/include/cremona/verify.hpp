#pragma once

#include "cremona/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cremona {

struct CheckResult {
    std::string name;
    std::string range;
    bool passed = false;
    std::string counterexample;  // first failure, empty when passed
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

struct VerifyOptions {
    int max_n = 5;
    // Closed-form volume used by the first check; tests substitute a
    // corrupted version to prove failures surface. Null means the library's
    // own closed form.
    std::function<Rational(const Rational&, const Rational&, int)> closed_form;
};

// Runs the whole cross-check suite, clamping each check to its own desk
// range. Failures become report entries, never exceptions.
VerificationReport run_verification(const VerifyOptions& options = {});

}  // namespace cremona
