#pragma once

#include "horoct/identity.hpp"

#include <string>
#include <vector>

namespace horoct {

struct SweepConfig {
    std::vector<HoradamParams> points;
    unsigned n_min = 1;
    unsigned n_max = 16;
    std::vector<std::string> ids;  // empty = every registered identity
    unsigned jobs = 1;
};

// a, b in {-1, 0, 1, 2} and p, q in {-1, 1, 2, 3} minus the single D = 0
// combination (p, q) = (2, -1): 240 points, n in [1, 16], every identity.
SweepConfig default_sweep();

// Evaluates every (identity, point, n) in scope and returns verdicts in the
// canonical order: identity id ascending, then params lexicographically, then
// n ascending. The order, and therefore every rendered report, is independent
// of `jobs`. Throws UsageError for unknown ids.
std::vector<Verdict> run_sweep(const Registry& reg, const SweepConfig& cfg);

} // namespace horoct
