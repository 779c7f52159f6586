#include "mukai/sod.hpp"

namespace mukai {

EmbeddingCondition embedding_condition(const WallPair& pair, const GenusContext& ctx) {
    Int kp = k_plus(pair.c, pair.d, ctx);
    Int km = k_minus(pair.c, pair.d, ctx);
    if (kp > km)
        return EmbeddingCondition::StrictGain;
    if (kp == km)
        return EmbeddingCondition::Equality;
    return EmbeddingCondition::Loss;
}

std::string to_string(EmbeddingCondition cond) {
    switch (cond) {
    case EmbeddingCondition::StrictGain: return "strict_gain";
    case EmbeddingCondition::Equality: return "equality";
    case EmbeddingCondition::Loss: return "loss";
    }
    return "unknown";
}

namespace {

long designated_model(const GenusContext& ctx, const WallSystem& walls) {
    if (ctx.is_three_mod_4()) {
        // The model just past the k+ = k- wall; boundary chambers on either
        // side of it are both weak Fano.
        return walls.slope_one_index() + 1;
    }
    auto idx = fano_index(ctx, walls);
    if (!idx)
        throw std::logic_error("a Fano chamber must exist for g != 3 mod 4");
    return *idx;
}

} // namespace

VisitorVerdict theorem_verdicts(const GenusContext& ctx, const WallSystem& walls) {
    VisitorVerdict out;
    out.genus = ctx.genus();
    out.verdict = ctx.is_three_mod_4() ? Verdict::WeakFano : Verdict::Fano;
    out.fano_model_index = designated_model(ctx, walls);
    out.strict_d_bound = Rat(ctx.genus() - 3, 4);
    out.stated_d_bound = Rat(ctx.genus() + 1, 4);
    out.strict_d_bound.canonicalize();
    out.stated_d_bound.canonicalize();

    const Rat threshold = fano_threshold(ctx);
    for (long i = -1; i <= walls.eta(); ++i) {
        if (walls.slope_at(i) < threshold)
            break;
        const bool on_wall = (walls.slope_at(i) == threshold);
        for (const auto& pair : walls.group_at(i)) {
            if (on_wall && !ctx.is_three_mod_4())
                throw std::logic_error("threshold slope can be attained only for g = 3 mod 4");
            Visitor vis;
            vis.pair = pair;
            vis.label = moduli_label(pair);
            vis.strict = !on_wall;
            if (vis.strict != (embedding_condition(pair, ctx) == EmbeddingCondition::StrictGain))
                throw std::logic_error("visitor strictness disagrees with the rank gain");
            out.visitors.push_back(std::move(vis));
        }
    }
    return out;
}

std::vector<SodBlock> block_inventory(const GenusContext& ctx, const WallSystem& walls) {
    const long g = ctx.genus();
    const long j = designated_model(ctx, walls);
    std::vector<SodBlock> blocks;
    blocks.push_back(SodBlock{"D(pt)", Int(0), Int(g + 1), false});
    blocks.push_back(SodBlock{"D(X)", Int(2), Int(g - 3), false});
    for (long i = 1; i <= j - 1; ++i) {
        for (const auto& pair : walls.group_at(i)) {
            FlipRecord rec = make_flip_record(pair, ctx);
            Int gain = rec.k_plus - rec.k_minus;
            if (gain < 0)
                throw std::logic_error("crossed wall with negative rank gain before the Fano model");
            if (gain == 0)
                continue; // equality walls add no blocks
            blocks.push_back(SodBlock{"D(" + rec.moduli_label + ")", rec.moduli_dim, gain,
                                      rec.twisted_possible});
        }
    }
    return blocks;
}

Int block_total(const GenusContext& ctx, const WallSystem& walls) {
    const long j = designated_model(ctx, walls);
    Int total = Int(ctx.genus() + 1) + Int(ctx.genus() - 3);
    for (long i = 1; i <= j - 1; ++i)
        for (const auto& pair : walls.group_at(i))
            total += k_plus(pair.c, pair.d, ctx) - k_minus(pair.c, pair.d, ctx);
    return total;
}

} // namespace mukai
