#pragma once

#include <vector>

#include "mukai/flips.hpp"
#include "mukai/walls.hpp"

namespace mukai {

/// The Mukai-dual partner of an admissible pair when g = 3 mod 4:
/// (c', d') = (((g-3)/4 - d - c)/(2c+1), d). An admissibility-preserving
/// involution with mu' = 1/mu and swapped bundle ranks.
WallPair dual_pair(long c, long d, const GenusContext& ctx);

struct DualPairEntry {
    WallPair pair;
    WallPair dual;
    bool self_dual; // g-1-4d = 2(2c+1)^2
};

/// The full order-reversing symmetry of the wall system for g = 3 mod 4:
/// pair map, the induced map i -> nu - i on group labels, and the self-dual
/// walls (always including (0, (g-3)/4)).
struct DualityTable {
    std::vector<DualPairEntry> pair_map;
    std::vector<std::pair<long, long>> group_map; // (i, nu - i)
    std::vector<WallPair> self_dual;
};

DualityTable build_duality_table(const GenusContext& ctx, const WallSystem& walls);

/// Image of the wall vector under the dual-exchange isometry:
/// theta(v_{c,d}) = v - v_{c',d'}. Verified against the matrix action.
MukaiVector vartheta_wall_image(const WallPair& pair, const GenusContext& ctx);

/// Arithmetic certificate that the dual K3 is not isomorphic to X: the
/// induced action on the discriminant group is multiplication by g, which is
/// never +-1 mod 2g-2 for g >= 4.
DiscriminantAction non_isomorphism_certificate(const GenusContext& ctx);

} // namespace mukai
