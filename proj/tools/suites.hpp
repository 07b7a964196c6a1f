#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <cobord/lazard.hpp>

namespace cobord::tools {

/// Outcome of one named invariant suite.
struct SuiteResult {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

SuiteResult run_fgl_suite(const Lazard& lazard);
/// u_m in I_p(n) below p^n - 1, v_n outside I_p(n) and inside I_p(n+1),
/// v_n indecomposable mod p, and the Y_s chain, for n <= max_n.
SuiteResult run_ideals_suite(const Lazard& lazard, int p, int max_n);
SuiteResult run_presentation_suite(const Lazard& lazard, int p);
/// Every witness reports bound <= realized fixed dimension.
SuiteResult run_soundness_suite(const Lazard& lazard, int p, int max_dim);

}  // namespace cobord::tools
