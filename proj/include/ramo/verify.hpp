#pragma once

#include <string>
#include <vector>

#include "ramo/lattice.hpp"

namespace ramo {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // witness or note; empty on a clean pass
};

// theorem property suite for one ring, exhaustive over its ideal lattice
std::vector<CheckResult> property_suite(const std::string& ring_name,
                                        const IdealLattice& lattice);

// the nine acceptance criteria; when `slow` is false the F2[x,y]/(x,y)^5
// criterion is reported as skipped (passing)
std::vector<CheckResult> run_acceptance(bool slow);

} // namespace ramo
