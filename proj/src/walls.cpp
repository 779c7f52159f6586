#include "mukai/walls.hpp"

#include <algorithm>

namespace mukai {

Rat slope(long c, long d, const GenusContext& ctx) {
    if (c < 0 || d < -1)
        throw std::invalid_argument("slope requires c >= 0 and d >= -1");
    Int q(2 * c + 1);
    Int num = Int(ctx.genus() - 1) - Int(4) * d;
    if (ctx.is_even())
        num -= q * q;
    Rat mu(num, 2 * q * q);
    mu.canonicalize();
    return mu;
}

bool is_admissible(long c, long d, const GenusContext& ctx) {
    if (c < 0 || d < -1)
        return false;
    Int q(2 * c + 1);
    Int num = Int(ctx.genus() - 1) * Int(c) * Int(c) - d;
    if (num % q != 0)
        return false;
    return slope(c, d, ctx) > 0;
}

WallPair make_wall_pair(long c, long d, const GenusContext& ctx) {
    if (!is_admissible(c, d, ctx))
        throw std::invalid_argument("pair (" + std::to_string(c) + "," + std::to_string(d) +
                                    ") is not admissible for genus " + std::to_string(ctx.genus()));
    WallPair p;
    p.c = c;
    p.d = d;
    p.slope = slope(c, d, ctx);

    Int q(2 * c + 1);
    Int reduced = Int(ctx.genus() - 1) - Int(4) * d;
    if (ctx.is_even()) {
        p.t = (reduced - q * q) / q;
    } else {
        p.t = reduced / (2 * q);
    }
    if (p.t <= 0 || p.t * (ctx.is_even() ? q : 2 * q) != (ctx.is_even() ? reduced - q * q : reduced))
        throw std::logic_error("normalized slope t is not a positive integer");

    Int third = Int(ctx.genus() - 1) * Int(c) * Int(c) - d;
    if (third % q != 0)
        throw std::logic_error("wall vector third entry is not integral");
    p.vector = MukaiVector(q, Int(-c), third / q);
    return p;
}

std::vector<WallPair> enumerate_pairs(const GenusContext& ctx) {
    std::vector<WallPair> pairs;
    const long g = ctx.genus();
    for (long c = 0;; ++c) {
        const long q = 2 * c + 1;
        // b) bounds: even g needs g-1-4d > q^2 with d >= -1, so q^2 <= g+2;
        //    odd g needs t = (g-1-4d)/(2q) >= 1, so 2q <= g+3.
        if (ctx.is_even() && Int(q) * q > Int(g) + 2)
            break;
        if (!ctx.is_even() && Int(q) * 2 > Int(g) + 3)
            break;
        // a) is equivalent to (2c+1) | (g-1-4d); walk that residue class.
        // 4 d = g-1 mod q: d0 = (g-1) * inv(4) mod q.
        Int inv4;
        Int qz(q);
        if (mpz_invert(inv4.get_mpz_t(), Int(4).get_mpz_t(), qz.get_mpz_t()) == 0)
            throw std::logic_error("4 must be invertible modulo an odd number");
        Int d0z = (Int(g - 1) * inv4) % qz;
        long d0 = d0z.get_si(); // 0 <= d0 < q
        long d = d0 == q - 1 ? -1 : d0; // smallest value >= -1 in the class
        for (; ; d += q) {
            Int reduced = Int(g - 1) - Int(4) * d;
            if (ctx.is_even() ? reduced <= Int(q) * q : reduced <= 0)
                break;
            pairs.push_back(make_wall_pair(c, d, ctx));
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const WallPair& a, const WallPair& b) {
        if (a.slope != b.slope)
            return a.slope > b.slope;
        return a.c < b.c;
    });
    return pairs;
}

WallSystem::WallSystem(GenusContext ctx, std::vector<Rat> slopes,
                       std::vector<std::vector<WallPair>> groups)
    : ctx_(ctx), slopes_(std::move(slopes)), groups_(std::move(groups)) {
    if (slopes_.size() != groups_.size() || slopes_.size() < 2)
        throw std::logic_error("wall system needs at least the two fixed groups");
    eta_ = static_cast<long>(slopes_.size()) - 2;
    nu_ = ctx_.is_three_mod_4() ? eta_ - 1 : eta_ + 1;
}

long WallSystem::pair_count() const noexcept {
    long n = 0;
    for (const auto& grp : groups_)
        n += static_cast<long>(grp.size());
    return n;
}

long WallSystem::slope_one_index() const {
    for (long i = -1; i <= eta_; ++i)
        if (slope_at(i) == 1)
            return i;
    throw std::out_of_range("no group with slope 1");
}

WallSystem build_wall_system(const GenusContext& ctx) {
    std::vector<WallPair> pairs = enumerate_pairs(ctx);

    std::vector<Rat> slopes;
    std::vector<std::vector<WallPair>> groups;
    for (auto& p : pairs) {
        if (slopes.empty() || p.slope != slopes.back()) {
            slopes.push_back(p.slope);
            groups.emplace_back();
        }
        groups.back().push_back(std::move(p));
    }
    WallSystem ws(ctx, std::move(slopes), std::move(groups));

    // Postconditions of the construction.
    const auto& first = ws.group_at(-1);
    const auto& second = ws.group_at(0);
    if (first.size() != 1 || first[0].c != 0 || first[0].d != -1)
        throw std::logic_error("J^{-1} must be {(0,-1)}");
    if (second.size() != 1 || second[0].c != 0 || second[0].d != 0)
        throw std::logic_error("J^0 must be {(0,0)}");
    Rat start(Int(ctx.genus() + (ctx.is_even() ? 2 : 3)), Int(2));
    start.canonicalize();
    if (ws.slope_at(-1) != start)
        throw std::logic_error("mu_{-1} must be (g+2)/2 or (g+3)/2");
    for (long i = -1; i <= ws.eta(); ++i) {
        if (i > -1 && !(ws.slope_at(i) < ws.slope_at(i - 1)))
            throw std::logic_error("slopes must be strictly decreasing");
        for (const auto& p : ws.group_at(i))
            if (p.slope != ws.slope_at(i))
                throw std::logic_error("pair slope disagrees with its group slope");
    }
    bool has_one = false;
    Rat half(1, 2);
    for (long i = -1; i <= ws.eta(); ++i) {
        if (ws.slope_at(i) == 1)
            has_one = true;
        if (ctx.is_even() && ws.slope_at(i) == half)
            throw std::logic_error("slope 1/2 cannot occur for even genus");
    }
    if (ctx.is_three_mod_4() && !has_one)
        throw std::logic_error("slope 1 must occur for g = 3 mod 4");
    if (ctx.residue_mod_4() == 1 && has_one)
        throw std::logic_error("slope 1 cannot occur for g = 1 mod 4");
    return ws;
}

} // namespace mukai
