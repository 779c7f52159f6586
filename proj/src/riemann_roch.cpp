#include "mukai/riemann_roch.hpp"

#include "mukai/walls.hpp"

namespace mukai {

namespace {

Int rat_to_int(const Rat& q, const char* what) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() != 1)
        throw std::logic_error(std::string(what) + " is not an integer");
    return c.get_num();
}

} // namespace

SheafClass chern_of_mukai(const MukaiVector& a, const GenusContext& ctx) {
    SheafClass s;
    s.rank = a.r;
    s.c1_mult = Rat(a.m);
    s.c2 = Rat(a.m * a.m * Int(ctx.genus() - 1) + a.r - a.s);
    return s;
}

MukaiVector mukai_of_chern(const SheafClass& s, const GenusContext& ctx) {
    Rat third = s.c1_mult * s.c1_mult * Int(ctx.genus() - 1) - s.c2 + s.rank;
    return MukaiVector(s.rank, rat_to_int(s.c1_mult, "c1 multiple"),
                       rat_to_int(third, "Mukai third component"));
}

SheafClass sym2(const SheafClass& s, const GenusContext& ctx) {
    if (s.rank < 1)
        throw std::domain_error("sym2 requires rank >= 1");
    Rat r(s.rank);
    Rat c1sq = s.c1_mult * s.c1_mult * ctx.h_square();
    SheafClass out;
    out.rank = s.rank * (s.rank + 1) / 2;
    out.c1_mult = s.c1_mult * (r + 1);
    out.c2 = c1sq * (r * r / 2 + r / 2 - 1) + s.c2 * (r + 2);
    out.c1_mult.canonicalize();
    out.c2.canonicalize();
    return out;
}

SheafClass tensor_line(const SheafClass& s, long t, const GenusContext& ctx) {
    Rat r(s.rank);
    Rat tt(t);
    Rat c1_dot_h = s.c1_mult * ctx.h_square();
    SheafClass out;
    out.rank = s.rank;
    out.c1_mult = s.c1_mult + r * tt;
    out.c2 = s.c2 + (r - 1) * tt * c1_dot_h + (r * (r - 1) / 2) * tt * tt * ctx.h_square();
    out.c1_mult.canonicalize();
    out.c2.canonicalize();
    return out;
}

Int euler_char(const SheafClass& s, const GenusContext& ctx) {
    Rat chi = Rat(2 * s.rank) + s.c1_mult * s.c1_mult * Int(ctx.genus() - 1) - s.c2;
    return rat_to_int(chi, "Euler characteristic");
}

ChernCharacter chern_character(const SheafClass& s, const GenusContext& ctx) {
    ChernCharacter ch;
    ch.rank = Rat(s.rank);
    ch.c1_mult = s.c1_mult;
    ch.ch2 = s.c1_mult * s.c1_mult * Int(ctx.genus() - 1) - s.c2;
    return ch;
}

ChernCharacter ch_mul(const ChernCharacter& a, const ChernCharacter& b, const GenusContext& ctx) {
    ChernCharacter out;
    out.rank = a.rank * b.rank;
    out.c1_mult = a.rank * b.c1_mult + b.rank * a.c1_mult;
    out.ch2 = a.rank * b.ch2 + b.rank * a.ch2 + a.c1_mult * b.c1_mult * ctx.h_square();
    return out;
}

Int chi_of_character(const ChernCharacter& ch, const GenusContext& ctx) {
    (void)ctx;
    return rat_to_int(ch.rank * 2 + ch.ch2, "Euler characteristic");
}

Int k_plus_oracle(long c, long d, const GenusContext& ctx) {
    WallPair pair = make_wall_pair(c, d, ctx);
    SheafClass t_class = chern_of_mukai(pair.vector, ctx);
    return euler_char(tensor_line(sym2(t_class, ctx), 1, ctx), ctx);
}

Int chi_tensor_square_line(const SheafClass& t_class, const GenusContext& ctx) {
    ChernCharacter t_ch = chern_character(t_class, ctx);
    ChernCharacter lambda;
    lambda.rank = 1;
    lambda.c1_mult = 1;
    lambda.ch2 = Rat(ctx.genus() - 1);
    return chi_of_character(ch_mul(ch_mul(t_ch, t_ch, ctx), lambda, ctx), ctx);
}

} // namespace mukai
