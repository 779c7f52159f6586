#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mukai/walls.hpp"

namespace mukai {

/// Eigenspace dimensions of the duality involution on Ext^1(T, T^dual):
/// the ranks of the two flipped bundles at the wall (c,d).
Int k_plus(long c, long d, const GenusContext& ctx);
Int k_minus(long c, long d, const GenusContext& ctx);

/// Per-pair flip numerics. dim_p_minus / dim_p_plus are the dimensions of
/// the contracted and extracted projectivized bundles, g - k^+ and g - k^-.
struct FlipRecord {
    WallPair pair;
    Int k_plus;
    Int k_minus;
    Int ext1_dim;    // g - 1 - 2d
    Int moduli_dim;  // 2d + 2
    Int dim_p_minus; // g - k^+
    Int dim_p_plus;  // g - k^-
    std::string moduli_label; // "Hilb^{d+1}(X)" when c = 0, else "M(v_{c,d})"
    bool twisted_possible;
};

FlipRecord make_flip_record(const WallPair& pair, const GenusContext& ctx);

std::string moduli_label(const WallPair& pair);

enum class CrossingKind { Blowup, SmallFlip, TerminalDivisorial, BrillNoetherWall };

std::string to_string(CrossingKind k);

/// One wall crossing M_i --> M_{i+1}: the records of every pair in J^i plus
/// its classification. i = 0 is the blow-down inverse; 1 <= i <= nu-1 are
/// small flips; the boundary crossings (i = -1 always, and i = eta-1, eta
/// when g = 3 mod 4) create or absorb a whole model and carry the terminal
/// divisorial kind.
struct WallCrossing {
    long index;
    CrossingKind kind;
    std::vector<FlipRecord> records;
};

WallCrossing build_crossing(long i, const GenusContext& ctx, const WallSystem& walls);

/// Divisor stratification data on the wall closing the movable cone when
/// 4 | g. A is the unique stable spherical bundle killed on that wall; the
/// stratum k consists of complexes with a k-dimensional space of maps from A
/// and is a Gr(k,2k)-bundle over the moduli of the quotient vector
/// b_k = v - k v(A). The involution fixes a Lagrangian (respectively
/// orthogonal) Grassmannian in each fiber.
struct DivisorialStratum {
    long k;
    MukaiVector b_k;
    Int b_square;
    std::string fiber;               // Gr(k,2k)
    std::string fixed_fiber_on_m;    // LGr(k,2k)
    std::string fixed_fiber_on_omega; // OGr(k,2k)
};

struct DivisorialWallData {
    MukaiVector spherical_vector; // (2, -1, g/2)
    std::vector<DivisorialStratum> strata;
};

/// Requires 4 | g. Strata run over k >= 1 while <b_k, b_k> >= -2.
DivisorialWallData divisorial_wall_data(const GenusContext& ctx);

/// The crossings for i = -1..eta in order, with nu and eta, and the
/// divisorial wall attached as side data when 4 | g.
struct SequenceSummary {
    long eta;
    long nu;
    std::vector<WallCrossing> crossings;
    std::optional<DivisorialWallData> divisorial;
};

SequenceSummary sequence_summary(const GenusContext& ctx, const WallSystem& walls);

} // namespace mukai
