#pragma once

#include <string>
#include <vector>

namespace mmsim {

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
};

// Self-check suite behind the `validate` CLI verb: demag tensor invariants
// (trace, parity, permutation symmetry), spectral-vs-direct field equivalence
// on small grids in both precisions, linearity, and the cube / thin-film
// shape factors.
ValidationReport run_validation();

std::string render_report(const ValidationReport& report);

} // namespace mmsim
