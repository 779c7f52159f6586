#include "mukai/duality.hpp"

namespace mukai {

WallPair dual_pair(long c, long d, const GenusContext& ctx) {
    if (!ctx.is_three_mod_4())
        throw std::invalid_argument("dual pairs require g = 3 mod 4");
    if (!is_admissible(c, d, ctx))
        throw std::invalid_argument("dual_pair requires an admissible pair");
    const long g = ctx.genus();
    long num = (g - 3) / 4 - d - c;
    long q = 2 * c + 1;
    if (num % q != 0 || num / q < 0)
        throw std::logic_error("dual pair index is not a nonnegative integer");
    return make_wall_pair(num / q, d, ctx);
}

DualityTable build_duality_table(const GenusContext& ctx, const WallSystem& walls) {
    if (!ctx.is_three_mod_4())
        throw std::invalid_argument("duality table requires g = 3 mod 4");
    DualityTable table;
    for (long i = -1; i <= walls.eta(); ++i) {
        table.group_map.emplace_back(i, walls.nu() - i);
        for (const auto& pair : walls.group_at(i)) {
            DualPairEntry entry;
            entry.pair = pair;
            entry.dual = dual_pair(pair.c, pair.d, ctx);
            entry.self_dual = (entry.dual.c == pair.c && entry.dual.d == pair.d);

            WallPair back = dual_pair(entry.dual.c, entry.dual.d, ctx);
            if (back.c != pair.c || back.d != pair.d)
                throw std::logic_error("dual pair map is not an involution");
            Rat prod = pair.slope * entry.dual.slope;
            prod.canonicalize();
            if (prod != 1)
                throw std::logic_error("dual slopes do not multiply to 1");
            if (entry.dual.d != pair.d)
                throw std::logic_error("dual pair must preserve d");
            // The dual lands in the mirrored group J^{nu-i}.
            const long j = walls.nu() - i;
            bool in_group = false;
            for (const auto& q : walls.group_at(j))
                in_group = in_group || (q.c == entry.dual.c && q.d == entry.dual.d);
            if (!in_group)
                throw std::logic_error("dual pair escaped the mirrored group");

            if (entry.self_dual)
                table.self_dual.push_back(pair);
            table.pair_map.push_back(std::move(entry));
        }
    }
    bool has_center = false;
    for (const auto& p : table.self_dual)
        has_center = has_center || (p.c == 0 && p.d == (ctx.genus() - 3) / 4);
    if (!has_center)
        throw std::logic_error("(0,(g-3)/4) must be self-dual");
    return table;
}

MukaiVector vartheta_wall_image(const WallPair& pair, const GenusContext& ctx) {
    LatticeIsometry theta = theta_isometry(ctx);
    MukaiVector image = theta.apply(pair.vector);
    WallPair dual = dual_pair(pair.c, pair.d, ctx);
    if (image != base_vector(ctx) - dual.vector)
        throw std::logic_error("isometry image of a wall vector must be v - v_dual");
    return image;
}

DiscriminantAction non_isomorphism_certificate(const GenusContext& ctx) {
    return discriminant_action(ctx);
}

} // namespace mukai
