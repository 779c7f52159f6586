#pragma once

#include <string>
#include <vector>

#include "mukai/walls.hpp"

namespace mukai {

struct InvariantFailure {
    long genus;
    std::string invariant_id;
    std::string witness;
};

struct VerifyOptions {
    /// The box-filter enumeration oracle is quadratic in g; it is on by
    /// default for verification sweeps.
    bool include_box_oracle = true;
};

/// Brute-force enumeration oracle: scan the box 0 <= c <= g, -1 <= d <= g
/// and keep the admissible pairs, sorted like enumerate_pairs.
std::vector<std::pair<long, long>> brute_force_box_pairs(const GenusContext& ctx);

struct GenusCheck {
    long genus;
    long pairs_checked;
    std::vector<InvariantFailure> failures;
};

/// Runs every per-genus invariant of the wall, flip, cone, ledger, duality
/// and oracle modules; returns the failures (empty means the genus passes).
GenusCheck check_genus(const GenusContext& ctx, const VerifyOptions& opts = {});

struct SweepResult {
    long genera_checked = 0;
    long pairs_checked = 0;
    std::vector<InvariantFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks every genus in [lo, hi]. threads <= 1 runs sequentially; results
/// are merged in genus order either way.
SweepResult verify_range(long lo, long hi, int threads, const VerifyOptions& opts = {});

} // namespace mukai
