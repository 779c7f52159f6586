#include "mukai/cones.hpp"

namespace mukai {

Rat theta_g(const GenusContext& ctx) {
    Rat th = ctx.is_even() ? Rat(ctx.genus() - 2, 2) : Rat(ctx.genus() - 1, 2);
    th.canonicalize();
    return th;
}

RestrictedGenerators restrict_generators(const GenusContext& ctx) {
    return RestrictedGenerators{PicClass(Rat(0), Rat(-1)), PicClass(Rat(2), theta_g(ctx))};
}

Int wall_curve_degree(const MukaiVector& w, const WallPair& pair, const GenusContext& ctx) {
    if (mukai_pairing(w, base_vector(ctx), ctx) != 0)
        throw std::invalid_argument("wall_curve_degree requires w orthogonal to the base vector");
    return -mukai_pairing(w, pair.vector, ctx);
}

namespace {

// Slope of the upper chamber boundary of M_i; the last chamber extends to
// the lambda ray (mu = 0).
Rat upper_slope(long i, const WallSystem& walls) {
    return i == walls.nu() ? Rat(0) : walls.slope_at(i);
}

} // namespace

Chamber ample_chamber(long i, const GenusContext& ctx, const WallSystem& walls) {
    if (i < 1 || i > walls.nu())
        throw std::out_of_range("model index must lie in 1..nu");
    Rat th = theta_g(ctx);
    Chamber ch;
    ch.model_index = i;
    ch.lower = PicClass(Rat(2), th - walls.slope_at(i - 1));
    ch.upper = PicClass(Rat(2), th - upper_slope(i, walls));
    ch.upper_is_outer_bound = (i == walls.nu());
    return ch;
}

PicClass anticanonical(const GenusContext& ctx) {
    return PicClass(Rat(4), Rat(ctx.genus() - 3));
}

Rat fano_threshold(const GenusContext& ctx) {
    return ctx.is_even() ? Rat(1, 2) : Rat(1);
}

bool is_fano(long i, const GenusContext& ctx, const WallSystem& walls) {
    if (i < 1 || i > walls.nu())
        throw std::out_of_range("model index must lie in 1..nu");
    Rat th = fano_threshold(ctx);
    return walls.slope_at(i - 1) > th && upper_slope(i, walls) < th;
}

bool is_weak_fano(long i, const GenusContext& ctx, const WallSystem& walls) {
    if (i < 1 || i > walls.nu())
        throw std::out_of_range("model index must lie in 1..nu");
    Rat th = fano_threshold(ctx);
    return walls.slope_at(i - 1) >= th && upper_slope(i, walls) <= th;
}

std::optional<long> fano_index(const GenusContext& ctx, const WallSystem& walls) {
    std::optional<long> found;
    for (long i = 1; i <= walls.nu(); ++i) {
        if (is_fano(i, ctx, walls)) {
            if (found)
                throw std::logic_error("two chambers strictly contain the anticanonical class");
            found = i;
        }
    }
    if (ctx.is_three_mod_4()) {
        if (found)
            throw std::logic_error("-K must sit on the slope-1 wall for g = 3 mod 4");
        return std::nullopt;
    }
    if (!found)
        throw std::logic_error("no chamber strictly contains the anticanonical class");
    return found;
}

ChamberTable build_chamber_table(const GenusContext& ctx, const WallSystem& walls) {
    ChamberTable table;
    table.theta = theta_g(ctx);
    for (long i = 1; i <= walls.nu(); ++i) {
        table.chambers.push_back(ample_chamber(i, ctx, walls));
        if (is_weak_fano(i, ctx, walls))
            table.weak_fano_indices.push_back(i);
    }
    table.fano_index = fano_index(ctx, walls);

    // -K = O(4, g-3) sits on the ray of O(2, theta - mu*) with mu* the
    // threshold slope; sanity-check the identity once per table.
    Rat expect = table.theta - fano_threshold(ctx);
    Rat half_anti(ctx.genus() - 3, 2);
    half_anti.canonicalize();
    if (expect != half_anti)
        throw std::logic_error("anticanonical ray is off the threshold slope");
    return table;
}

} // namespace mukai
