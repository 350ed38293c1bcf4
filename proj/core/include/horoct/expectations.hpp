#pragma once

#include "horoct/identity.hpp"
#include "horoct/sweep.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace horoct {

// Per-identity verdict census over one sweep configuration. The fingerprint
// pins the full status sequence in canonical order, so any single flipped
// verdict drifts even when the counts balance out.
struct StatusProfile {
    std::uint64_t match = 0;
    std::uint64_t mismatch = 0;
    std::uint64_t inapplicable = 0;
    std::string fingerprint;

    friend bool operator==(const StatusProfile&, const StatusProfile&) = default;
};

struct Expectations {
    std::string n_range;             // "1..16"
    std::uint64_t point_count = 0;
    std::string points_fingerprint;  // over the canonical point list
    std::map<std::string, StatusProfile> profiles;
};

std::uint64_t fnv1a64(std::string_view bytes);

// Census of a verdict list that is already in canonical sweep order.
Expectations summarize(const SweepConfig& cfg, const std::vector<Verdict>& verdicts);

std::string expectations_to_json(const Expectations& e);
Expectations expectations_from_json(const std::string& text);  // UsageError on bad input

Expectations load_expectations(const std::string& path);       // UsageError on io/parse failure
void save_expectations(const std::string& path, const Expectations& e);

// Comparable = same grid and n range; a drift check against a different
// configuration would be meaningless.
bool same_config(const Expectations& a, const Expectations& b);

// One message per identity in `fresh` whose profile differs from `pinned`
// (or is missing there). Empty = no drift.
std::vector<std::string> diff_profiles(const Expectations& pinned, const Expectations& fresh);

} // namespace horoct
