#pragma once

#include <vector>

#include "mukai/genus.hpp"
#include "mukai/lattice.hpp"

namespace mukai {

/// An admissible pair (c,d): c >= 0, d >= -1, with
///   a) (2c+1) | (g-1)c^2 - d, and
///   b) slope mu(c,d) > 0,
/// carrying its exact slope, the normalized slope t, and the wall vector
/// v_{c,d} = (2c+1, -c h, ((g-1)c^2 - d)/(2c+1)).
struct WallPair {
    long c = 0;
    long d = 0;
    Rat slope;        // mu(c,d), fully reduced
    Int t;            // (g-1-4d-(2c+1)^2)/(2c+1) for even g, (g-1-4d)/(2(2c+1)) for odd g
    MukaiVector vector;

    bool operator==(const WallPair& o) const { return c == o.c && d == o.d; }
};

/// mu(c,d) = (g-1-4d-(2c+1)^2)/(2(2c+1)^2) for even g,
///           (g-1-4d)/(2(2c+1)^2)          for odd g.
Rat slope(long c, long d, const GenusContext& ctx);

bool is_admissible(long c, long d, const GenusContext& ctx);

/// Builds the full record for an admissible pair. Throws std::invalid_argument
/// when (c,d) is not admissible.
WallPair make_wall_pair(long c, long d, const GenusContext& ctx);

/// All admissible pairs, ordered by descending slope, then ascending c.
/// Iterates residue classes d = (g-1)/4 mod (2c+1) per c instead of scanning
/// the whole box.
std::vector<WallPair> enumerate_pairs(const GenusContext& ctx);

/// The ordered wall system: distinct slopes mu_{-1} > mu_0 > ... > mu_eta and
/// the groups J^i of pairs that share slope mu_i. Index labels run from -1 as
/// in the table layout; storage is offset by +1 internally.
class WallSystem {
public:
    WallSystem(GenusContext ctx, std::vector<Rat> slopes, std::vector<std::vector<WallPair>> groups);

    const GenusContext& ctx() const noexcept { return ctx_; }
    long eta() const noexcept { return eta_; }
    long nu() const noexcept { return nu_; }

    /// i ranges over -1..eta.
    const Rat& slope_at(long i) const { return slopes_.at(offset(i)); }
    const std::vector<WallPair>& group_at(long i) const { return groups_.at(offset(i)); }

    long group_count() const noexcept { return static_cast<long>(groups_.size()); }
    long pair_count() const noexcept;

    /// Label of the group with slope exactly 1, when present (g = 3 mod 4).
    long slope_one_index() const;

private:
    std::size_t offset(long i) const {
        if (i < -1 || i > eta_)
            throw std::out_of_range("wall index out of range");
        return static_cast<std::size_t>(i + 1);
    }

    GenusContext ctx_;
    std::vector<Rat> slopes_;
    std::vector<std::vector<WallPair>> groups_;
    long eta_;
    long nu_;
};

/// Groups the admissible pairs by slope and checks the structural
/// postconditions (fixed J^{-1} and J^0, strict slope ordering, slope-1
/// presence by residue class).
WallSystem build_wall_system(const GenusContext& ctx);

} // namespace mukai
