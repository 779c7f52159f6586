#pragma once

#include <optional>
#include <vector>

#include "mukai/walls.hpp"

namespace mukai {

/// A divisor class on M_1 (and on every M_i through the canonical
/// identification of Picard groups) in the pencil coordinates
/// O(m,n) = (m+n)H - nE.
struct PicClass {
    Rat m;
    Rat n;

    PicClass() = default;
    PicClass(Rat mm, Rat nn) : m(std::move(mm)), n(std::move(nn)) {
        m.canonicalize();
        n.canonicalize();
    }
    PicClass(long mm, long nn) : m(mm), n(nn) {}

    /// (coefficient of H, coefficient of E) = (m+n, -n).
    std::pair<Rat, Rat> he_coordinates() const { return {m + n, -n}; }

    bool operator==(const PicClass& o) const { return m == o.m && n == o.n; }
};

/// theta_g = g/2 - 1 for even g, (g-1)/2 for odd g: the n-coordinate of the
/// restricted movable-cone generator lambda = O(2, theta_g).
Rat theta_g(const GenusContext& ctx);

/// Restrictions of the two movable-cone generators of the ambient moduli
/// space: f -> O(0,-1) and lambda -> O(2, theta_g).
struct RestrictedGenerators {
    PicClass f_restr;
    PicClass lambda_restr;
};

RestrictedGenerators restrict_generators(const GenusContext& ctx);

/// Degree of the divisor associated to w (in v-perp) on a line in a fiber of
/// the flipped bundle at the given pair: -<w, v_{c,d}>. Rejects w not
/// orthogonal to the base vector.
Int wall_curve_degree(const MukaiVector& w, const WallPair& pair, const GenusContext& ctx);

struct Chamber {
    long model_index; // i, 1 <= i <= nu
    PicClass lower;        // O(2, theta_g - mu_{i-1})
    PicClass upper;        // O(2, theta_g - mu_i); O(2, theta_g) at i = nu
    bool upper_is_outer_bound; // i = nu: only containment is known there
};

/// Ample chamber of the model M_i, 1 <= i <= nu.
Chamber ample_chamber(long i, const GenusContext& ctx, const WallSystem& walls);

/// -K on every model: O(4, g-3), twice the ray of O(2, (g-3)/2).
PicClass anticanonical(const GenusContext& ctx);

/// The anticanonical threshold as a slope: 1/2 for even g, 1 for odd g.
Rat fano_threshold(const GenusContext& ctx);

/// Strict (resp. closure) membership of -K in the chamber of M_i.
bool is_fano(long i, const GenusContext& ctx, const WallSystem& walls);
bool is_weak_fano(long i, const GenusContext& ctx, const WallSystem& walls);

/// The unique model with -K strictly inside its chamber; absent when
/// g = 3 mod 4 (-K then lies on the slope-1 wall).
std::optional<long> fano_index(const GenusContext& ctx, const WallSystem& walls);

struct ChamberTable {
    Rat theta;
    std::vector<Chamber> chambers; // i = 1..nu
    std::optional<long> fano_index;
    std::vector<long> weak_fano_indices;
};

ChamberTable build_chamber_table(const GenusContext& ctx, const WallSystem& walls);

} // namespace mukai
