#include "mukai/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "mukai/cones.hpp"
#include "mukai/duality.hpp"
#include "mukai/flips.hpp"
#include "mukai/riemann_roch.hpp"
#include "mukai/sod.hpp"

namespace mukai {

namespace {

std::string pair_witness(long c, long d) {
    return "(" + std::to_string(c) + "," + std::to_string(d) + ")";
}

std::string rat_witness(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string pic_witness(const PicClass& p) {
    return "O(" + rat_witness(p.m) + "," + rat_witness(p.n) + ")";
}

class Checker {
public:
    Checker(const GenusContext& ctx, GenusCheck& out) : ctx_(ctx), out_(out) {}

    void expect(bool cond, const std::string& id, const std::string& witness) {
        if (!cond)
            out_.failures.push_back({ctx_.genus(), id, witness});
    }

private:
    const GenusContext& ctx_;
    GenusCheck& out_;
};

} // namespace

std::vector<std::pair<long, long>> brute_force_box_pairs(const GenusContext& ctx) {
    std::vector<std::pair<long, long>> found;
    const long g = ctx.genus();
    for (long c = 0; c <= g; ++c)
        for (long d = -1; d <= g; ++d)
            if (is_admissible(c, d, ctx))
                found.emplace_back(c, d);
    std::sort(found.begin(), found.end(),
              [&](const std::pair<long, long>& a, const std::pair<long, long>& b) {
                  Rat sa = slope(a.first, a.second, ctx);
                  Rat sb = slope(b.first, b.second, ctx);
                  if (sa != sb)
                      return sa > sb;
                  return a.first < b.first;
              });
    return found;
}

GenusCheck check_genus(const GenusContext& ctx, const VerifyOptions& opts) {
    GenusCheck result{ctx.genus(), 0, {}};
    Checker check(ctx, result);
    const long g = ctx.genus();
    const MukaiVector v = base_vector(ctx);

    WallSystem walls = build_wall_system(ctx);
    result.pairs_checked = walls.pair_count();

    // Fixed leading groups and the analytic starting slope.
    const auto& jm1 = walls.group_at(-1);
    const auto& j0 = walls.group_at(0);
    check.expect(jm1.size() == 1 && jm1[0].c == 0 && jm1[0].d == -1, "group-j-minus-1", "J^{-1}");
    check.expect(j0.size() == 1 && j0[0].c == 0 && j0[0].d == 0, "group-j0", "J^0");
    Rat start(Int(g + (ctx.is_even() ? 2 : 3)), Int(2));
    start.canonicalize();
    check.expect(walls.slope_at(-1) == start, "mu-start-value", rat_witness(walls.slope_at(-1)));

    // Slope ordering and parity exclusions.
    Rat half(1, 2);
    long slope_one_groups = 0;
    for (long i = -1; i <= walls.eta(); ++i) {
        if (i > -1)
            check.expect(walls.slope_at(i) < walls.slope_at(i - 1), "slopes-strictly-decreasing",
                         "i=" + std::to_string(i));
        if (walls.slope_at(i) == 1)
            ++slope_one_groups;
        if (ctx.is_even())
            check.expect(walls.slope_at(i) != half, "slope-half-absent", "i=" + std::to_string(i));
    }
    if (ctx.residue_mod_4() == 1)
        check.expect(slope_one_groups == 0, "slope-one-absent", std::to_string(slope_one_groups));
    if (ctx.is_three_mod_4())
        check.expect(slope_one_groups == 1, "slope-one-unique", std::to_string(slope_one_groups));

    // Enumeration against the brute-force box filter.
    if (opts.include_box_oracle) {
        auto box = brute_force_box_pairs(ctx);
        std::vector<std::pair<long, long>> got;
        for (long i = -1; i <= walls.eta(); ++i)
            for (const auto& p : walls.group_at(i))
                got.emplace_back(p.c, p.d);
        check.expect(box == got, "enumeration-box-match",
                     "box=" + std::to_string(box.size()) + " enum=" + std::to_string(got.size()));
    }

    // Per-pair identities.
    for (long i = -1; i <= walls.eta(); ++i) {
        for (const auto& pair : walls.group_at(i)) {
            const std::string w = pair_witness(pair.c, pair.d);
            check.expect(pair.t > 0, "t-positive-integer", w);

            Int kp = k_plus(pair.c, pair.d, ctx);
            Int km = k_minus(pair.c, pair.d, ctx);
            check.expect(kp >= 0 && km >= 0, "k-nonnegative", w);
            check.expect(kp + km == Int(g - 1) - Int(2) * pair.d, "k-sum", w);

            // k+ - k- = (2c+1)(2 mu - 1) for even g, (2c+1)(2 mu - 2) for odd g.
            Rat diff = Rat(Int(2 * pair.c + 1)) * (pair.slope * 2 - (ctx.is_even() ? 1 : 2));
            diff.canonicalize();
            check.expect(Rat(kp - km) == diff, "k-diff", w);

            check.expect(kp == k_plus_oracle(pair.c, pair.d, ctx), "k-oracle", w);

            Int ext1 = mukai_pairing(pair.vector, v - pair.vector, ctx);
            check.expect(ext1 == Int(g - 1) - Int(2) * pair.d, "ext1-pairing", w);

            check.expect(dual_twist_vector(pair.vector, ctx) == v - pair.vector, "psi-complement",
                         w);

            FlipRecord rec = make_flip_record(pair, ctx);
            check.expect(rec.dim_p_minus + rec.k_plus == g && rec.dim_p_plus + rec.k_minus == g,
                         "flip-dims", w);
            check.expect(rec.moduli_dim == mukai_square(pair.vector, ctx) + 2, "moduli-dim", w);
            if (pair.c == 0)
                check.expect(rec.moduli_label == "Hilb^" + std::to_string(pair.d + 1) + "(X)",
                             "hilb-label", w);

            // chi(T (x) T (x) Lambda) recomputed through Chern-character
            // products equals k+ + k-.
            SheafClass t_class = chern_of_mukai(pair.vector, ctx);
            check.expect(chi_tensor_square_line(t_class, ctx) == Int(g - 1) - Int(2) * pair.d,
                         "chi-tensor-square", w);
            check.expect(mukai_of_chern(t_class, ctx) == pair.vector, "chern-round-trip", w);
        }
    }

    check.expect(dual_twist_vector(v, ctx) == v, "psi-fixes-v", "v");

    // Crossing classification and rank bounds.
    SequenceSummary seq = sequence_summary(ctx, walls);
    check.expect(static_cast<long>(seq.crossings.size()) == walls.eta() + 2,
                 "crossing-count", std::to_string(seq.crossings.size()));
    check.expect(seq.nu == (ctx.is_three_mod_4() ? walls.eta() - 1 : walls.eta() + 1), "nu-case",
                 std::to_string(seq.nu));
    {
        Int kp = k_plus(0, 0, ctx);
        Int km = k_minus(0, 0, ctx);
        check.expect(kp == g - 2 && km == 1, "k00", pair_witness(0, 0));
    }
    for (const auto& crossing : seq.crossings) {
        check.expect((crossing.kind == CrossingKind::Blowup) == (crossing.index == 0),
                     "blowup-at-zero", std::to_string(crossing.index));
        if (crossing.index >= 1 && crossing.index <= walls.nu() - 1)
            for (const auto& rec : crossing.records)
                check.expect(rec.k_plus >= 2 && rec.k_minus >= 2, "min-k-small-crossings",
                             pair_witness(rec.pair.c, rec.pair.d));
    }
    if (ctx.is_three_mod_4()) {
        Int k1 = k_plus((g - 3) / 4, 0, ctx);
        Int k0 = k_plus((g + 1) / 4, -1, ctx);
        check.expect(k1 == 1, "boundary-k-plus-one", pair_witness((g - 3) / 4, 0));
        check.expect(k0 == 0, "boundary-k-plus-zero", pair_witness((g + 1) / 4, -1));
    }

    // Chamber tiling and the anticanonical straddle.
    ChamberTable chambers = build_chamber_table(ctx, walls);
    check.expect(static_cast<long>(chambers.chambers.size()) == walls.nu(), "chamber-count",
                 std::to_string(chambers.chambers.size()));
    for (std::size_t k = 0; k < chambers.chambers.size(); ++k) {
        const Chamber& ch = chambers.chambers[k];
        check.expect(ch.lower.n < ch.upper.n, "chamber-oriented",
                     "i=" + std::to_string(ch.model_index));
        if (k == 0)
            check.expect(ch.lower == PicClass(Rat(2), Rat(0)), "chamber-tiling-start",
                         pic_witness(ch.lower));
        else
            check.expect(ch.lower == chambers.chambers[k - 1].upper, "chamber-tiling",
                         "i=" + std::to_string(ch.model_index));
        if (k + 1 == chambers.chambers.size())
            check.expect(ch.upper == PicClass(Rat(2), chambers.theta), "chamber-tiling-end",
                         pic_witness(ch.upper));
    }
    long strict_count = 0;
    for (long i = 1; i <= walls.nu(); ++i)
        if (is_fano(i, ctx, walls))
            ++strict_count;
    if (ctx.is_three_mod_4()) {
        check.expect(strict_count == 0, "fano-straddle", std::to_string(strict_count));
        check.expect(chambers.weak_fano_indices.size() == 2 &&
                         chambers.weak_fano_indices[0] + 1 == chambers.weak_fano_indices[1],
                     "weak-fano-wall", std::to_string(chambers.weak_fano_indices.size()));
    } else {
        check.expect(strict_count == 1 && chambers.fano_index.has_value(), "fano-straddle",
                     std::to_string(strict_count));
    }

    // Verdict and block ledger.
    VisitorVerdict verdict = theorem_verdicts(ctx, walls);
    check.expect((verdict.verdict == Verdict::WeakFano) == ctx.is_three_mod_4(), "verdict-parity",
                 std::to_string(g));
    for (const auto& vis : verdict.visitors) {
        // Strict exactly when (g-1-4d)/(2(2c+1)^2) > 1.
        Int q(2 * vis.pair.c + 1);
        Rat lhs(Int(g - 1) - Int(4) * vis.pair.d, 2 * q * q);
        lhs.canonicalize();
        check.expect(vis.strict == (lhs > 1), "visitor-strictness",
                     pair_witness(vis.pair.c, vis.pair.d));
    }
    std::vector<SodBlock> blocks = block_inventory(ctx, walls);
    Int listed(0);
    bool mults_positive = true;
    for (const auto& b : blocks) {
        listed += b.multiplicity;
        mults_positive = mults_positive && b.multiplicity >= 1;
    }
    check.expect(mults_positive, "blocks-multiplicities", "");
    check.expect(listed == block_total(ctx, walls), "blocks-total", listed.get_str());
    check.expect(blocks.size() >= 2 && blocks[0].label == "D(pt)" &&
                     blocks[0].multiplicity == g + 1 && blocks[1].label == "D(X)" &&
                     blocks[1].multiplicity == g - 3,
                 "blocks-blowup-counts", "");

    // Duality suite.
    if (ctx.is_three_mod_4()) {
        DualityTable duality = build_duality_table(ctx, walls);
        LatticeIsometry theta = theta_isometry(ctx);
        check.expect(theta.is_integral() && theta.preserves_pairing(ctx),
                     "theta-integral-isometry", "");
        check.expect(theta.apply(v) == v, "theta-fixes-v", "v");
        for (const auto& e : duality.pair_map) {
            const std::string w = pair_witness(e.pair.c, e.pair.d);
            check.expect(k_plus(e.dual.c, e.dual.d, ctx) == k_minus(e.pair.c, e.pair.d, ctx) &&
                             k_minus(e.dual.c, e.dual.d, ctx) == k_plus(e.pair.c, e.pair.d, ctx),
                         "duality-k-swap", w);
            check.expect(theta.apply(e.pair.vector) == v - e.dual.vector, "theta-wall-image", w);
            bool claims_self = Int(g - 1) - Int(4) * e.pair.d ==
                               Int(2) * Int(2 * e.pair.c + 1) * Int(2 * e.pair.c + 1);
            check.expect(claims_self == e.self_dual, "self-dual-set", w);
        }
        DiscriminantAction action = non_isomorphism_certificate(ctx);
        check.expect((action.multiplier * action.multiplier) % action.modulus == 1 &&
                         !action.is_trivial && action.multiplier == Int(g) % action.modulus,
                     "discriminant-certificate", action.multiplier.get_str());
    }

    // Divisorial stratification.
    if (ctx.divisible_by_4()) {
        DivisorialWallData data = divisorial_wall_data(ctx);
        check.expect(mukai_square(data.spherical_vector, ctx) == -2, "divisorial-spherical",
                     to_string(data.spherical_vector));
        check.expect(!data.strata.empty(), "divisorial-strata-nonempty", "");
        for (const auto& st : data.strata) {
            check.expect(st.b_k == v - data.spherical_vector * Int(st.k), "divisorial-b-k",
                         "k=" + std::to_string(st.k));
            check.expect(st.b_square >= -2, "divisorial-strata", "k=" + std::to_string(st.k));
        }
    }

    return result;
}

SweepResult verify_range(long lo, long hi, int threads, const VerifyOptions& opts) {
    if (lo < 4 || hi < lo)
        throw std::invalid_argument("range must satisfy 4 <= a <= b");
    const long count = hi - lo + 1;
    std::vector<GenusCheck> checks(static_cast<std::size_t>(count));

    int workers = std::max(1, threads);
    workers = static_cast<int>(std::min<long>(workers, count));
    if (workers == 1) {
        for (long g = lo; g <= hi; ++g)
            checks[static_cast<std::size_t>(g - lo)] = check_genus(GenusContext(g), opts);
    } else {
        std::atomic<long> next{lo};
        auto worker = [&]() {
            for (;;) {
                long g = next.fetch_add(1);
                if (g > hi)
                    return;
                checks[static_cast<std::size_t>(g - lo)] = check_genus(GenusContext(g), opts);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    SweepResult result;
    for (auto& chk : checks) {
        ++result.genera_checked;
        result.pairs_checked += chk.pairs_checked;
        for (auto& f : chk.failures)
            result.failures.push_back(std::move(f));
    }
    return result;
}

} // namespace mukai
