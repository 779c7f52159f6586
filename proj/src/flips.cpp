#include "mukai/flips.hpp"

namespace mukai {

Int k_plus(long c, long d, const GenusContext& ctx) {
    if (!is_admissible(c, d, ctx))
        throw std::invalid_argument("k_plus requires an admissible pair");
    Int q(2 * c + 1);
    Int reduced = Int(ctx.genus() - 1) - Int(4) * d - q * q;
    // (c+1)/(2c+1) * (g-1-4d-(2c+1)^2) is integral because q | g-1-4d.
    Int num = Int(c + 1) * reduced;
    if (num % q != 0)
        throw std::logic_error("k_plus numerator not divisible by 2c+1");
    return num / q + q * c + d;
}

Int k_minus(long c, long d, const GenusContext& ctx) {
    Int kp = k_plus(c, d, ctx);
    return Int(ctx.genus() - 1) - Int(2) * d - kp;
}

std::string moduli_label(const WallPair& pair) {
    if (pair.c == 0)
        return "Hilb^" + std::to_string(pair.d + 1) + "(X)";
    return "M" + to_string(pair.vector);
}

FlipRecord make_flip_record(const WallPair& pair, const GenusContext& ctx) {
    FlipRecord rec;
    rec.pair = pair;
    rec.k_plus = k_plus(pair.c, pair.d, ctx);
    rec.k_minus = k_minus(pair.c, pair.d, ctx);
    rec.ext1_dim = Int(ctx.genus() - 1) - Int(2) * pair.d;
    rec.moduli_dim = Int(2) * pair.d + 2;
    rec.dim_p_minus = Int(ctx.genus()) - rec.k_plus;
    rec.dim_p_plus = Int(ctx.genus()) - rec.k_minus;
    rec.moduli_label = moduli_label(pair);

    // Fineness heuristic: gcd of rank, degree of the determinant, and the
    // last component. Advisory only; never affects any count.
    Int g1 = gcd(Int(2 * pair.c + 1), Int(pair.c) * ctx.h_square());
    rec.twisted_possible = gcd(g1, pair.vector.s) > 1;

    if (rec.k_plus < 0 || rec.k_minus < 0)
        throw std::logic_error("bundle ranks must be nonnegative");
    if (rec.moduli_dim != mukai_square(pair.vector, ctx) + 2)
        throw std::logic_error("moduli dimension disagrees with the Mukai square");
    return rec;
}

std::string to_string(CrossingKind k) {
    switch (k) {
    case CrossingKind::Blowup: return "blowup";
    case CrossingKind::SmallFlip: return "small_flip";
    case CrossingKind::TerminalDivisorial: return "terminal_divisorial";
    case CrossingKind::BrillNoetherWall: return "brill_noether_wall";
    }
    return "unknown";
}

WallCrossing build_crossing(long i, const GenusContext& ctx, const WallSystem& walls) {
    if (i < -1 || i > walls.eta())
        throw std::out_of_range("crossing index out of range");
    WallCrossing cr;
    cr.index = i;
    for (const auto& pair : walls.group_at(i))
        cr.records.push_back(make_flip_record(pair, ctx));

    const bool boundary_end = ctx.is_three_mod_4() && (i == walls.eta() || i == walls.eta() - 1);
    if (i == 0) {
        cr.kind = CrossingKind::Blowup;
    } else if (i == -1 || boundary_end) {
        // Boundary events: i = -1 extracts the whole dual projective space,
        // and for g = 3 mod 4 the last two crossings blow M_nu down to P^g
        // and then absorb it.
        cr.kind = CrossingKind::TerminalDivisorial;
    } else {
        cr.kind = CrossingKind::SmallFlip;
        for (const auto& rec : cr.records)
            if (rec.k_plus < 2 || rec.k_minus < 2)
                throw std::logic_error("small flip with a bundle of rank < 2 at crossing " +
                                       std::to_string(i));
    }

    if (ctx.is_three_mod_4() && i == walls.eta()) {
        const auto& rec = cr.records.at(0);
        if (cr.records.size() != 1 || rec.pair.c != (ctx.genus() + 1) / 4 || rec.pair.d != -1 ||
            rec.k_plus != 0)
            throw std::logic_error("terminal crossing must be the single pair ((g+1)/4,-1) with k+ = 0");
    }
    return cr;
}

DivisorialWallData divisorial_wall_data(const GenusContext& ctx) {
    if (!ctx.divisible_by_4())
        throw std::invalid_argument("divisorial wall data requires 4 | g");
    DivisorialWallData data;
    data.spherical_vector = MukaiVector(Int(2), Int(-1), Int(ctx.genus() / 2));
    if (mukai_square(data.spherical_vector, ctx) != -2)
        throw std::logic_error("wall destabilizer must be spherical");

    const MukaiVector v = base_vector(ctx);
    for (long k = 1;; ++k) {
        MukaiVector b = v - data.spherical_vector * Int(k);
        Int sq = mukai_square(b, ctx);
        if (sq < -2)
            break;
        DivisorialStratum st;
        st.k = k;
        st.b_k = b;
        st.b_square = sq;
        st.fiber = "Gr(" + std::to_string(k) + "," + std::to_string(2 * k) + ")";
        st.fixed_fiber_on_m = "LGr(" + std::to_string(k) + "," + std::to_string(2 * k) + ")";
        st.fixed_fiber_on_omega = "OGr(" + std::to_string(k) + "," + std::to_string(2 * k) + ")";
        data.strata.push_back(std::move(st));
    }
    return data;
}

SequenceSummary sequence_summary(const GenusContext& ctx, const WallSystem& walls) {
    SequenceSummary summary;
    summary.eta = walls.eta();
    summary.nu = walls.nu();
    for (long i = -1; i <= walls.eta(); ++i)
        summary.crossings.push_back(build_crossing(i, ctx, walls));
    if (ctx.divisible_by_4())
        summary.divisorial = divisorial_wall_data(ctx);
    return summary;
}

} // namespace mukai
