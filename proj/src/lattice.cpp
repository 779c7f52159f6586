#include "mukai/lattice.hpp"

#include <sstream>

namespace mukai {

MukaiVector base_vector(const GenusContext& ctx) {
    return MukaiVector(Int(0), Int(1), Int(1 - ctx.genus()));
}

Int mukai_pairing(const MukaiVector& a, const MukaiVector& b, const GenusContext& ctx) {
    return ctx.h_square() * a.m * b.m - a.r * b.s - b.r * a.s;
}

Int mukai_square(const MukaiVector& a, const GenusContext& ctx) {
    return mukai_pairing(a, a, ctx);
}

Int moduli_dim(const MukaiVector& a, const GenusContext& ctx) {
    return mukai_square(a, ctx) + 2;
}

MukaiVector dual_twist_vector(const MukaiVector& a, const GenusContext& ctx) {
    Int gm1(ctx.genus() - 1);
    return MukaiVector(-a.r, a.m + a.r, -(a.r + 2 * a.m) * gm1 - a.s);
}

MukaiVector LatticeIsometry::apply(const MukaiVector& a) const {
    std::array<Rat, 3> in = {Rat(a.r), Rat(a.m), Rat(a.s)};
    std::array<Rat, 3> out = {Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out[i] += mat_[i][j] * in[j];
    MukaiVector res;
    Int* slot[3] = {&res.r, &res.m, &res.s};
    for (int i = 0; i < 3; ++i) {
        out[i].canonicalize();
        if (out[i].get_den() != 1)
            throw std::logic_error("isometry image of an integer triple is not integral");
        *slot[i] = out[i].get_num();
    }
    return res;
}

bool LatticeIsometry::is_integral() const {
    for (const auto& row : mat_)
        for (const auto& e : row) {
            Rat c = e;
            c.canonicalize();
            if (c.get_den() != 1)
                return false;
        }
    return true;
}

bool LatticeIsometry::preserves_pairing(const GenusContext& ctx) const {
    const MukaiVector basis[3] = {MukaiVector(1, 0, 0), MukaiVector(0, 1, 0), MukaiVector(0, 0, 1)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            MukaiVector fi = apply(basis[i]);
            MukaiVector fj = apply(basis[j]);
            if (mukai_pairing(fi, fj, ctx) != mukai_pairing(basis[i], basis[j], ctx))
                return false;
        }
    return true;
}

namespace {

// Solve M * src_k = dst_k for the 3x3 rational matrix M, given three
// source/target pairs. Gaussian elimination on the transposed system
// src^T * M^T = dst^T, exact over mpq.
std::array<std::array<Rat, 3>, 3> solve_linear_map(const std::array<MukaiVector, 3>& src,
                                                   const std::array<MukaiVector, 3>& dst) {
    // aug[i] = row i of src^T augmented with row i of dst^T.
    std::array<std::array<Rat, 6>, 3> aug;
    for (int i = 0; i < 3; ++i) {
        aug[i][0] = Rat(src[i].r);
        aug[i][1] = Rat(src[i].m);
        aug[i][2] = Rat(src[i].s);
        aug[i][3] = Rat(dst[i].r);
        aug[i][4] = Rat(dst[i].m);
        aug[i][5] = Rat(dst[i].s);
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int row = col; row < 3; ++row)
            if (aug[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw std::logic_error("source vectors are linearly dependent");
        std::swap(aug[col], aug[pivot]);
        Rat inv = 1 / aug[col][col];
        for (int k = 0; k < 6; ++k)
            aug[col][k] *= inv;
        for (int row = 0; row < 3; ++row) {
            if (row == col || aug[row][col] == 0)
                continue;
            Rat f = aug[row][col];
            for (int k = 0; k < 6; ++k)
                aug[row][k] -= f * aug[col][k];
        }
    }
    // aug rows now read  e_i | (M^T row i),  so M[i][j] = aug[j][3+i].
    std::array<std::array<Rat, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m[i][j] = aug[j][3 + i];
            m[i][j].canonicalize();
        }
    return m;
}

} // namespace

LatticeIsometry theta_isometry(const GenusContext& ctx) {
    if (!ctx.is_three_mod_4())
        throw std::invalid_argument("dual-exchange isometry requires g = 3 mod 4");
    const long g = ctx.genus();
    const MukaiVector point(Int(0), Int(0), Int(-1));
    const MukaiVector bundle(Int(2), Int(-1), Int((g - 1) / 2));
    const MukaiVector v = base_vector(ctx);

    LatticeIsometry theta(solve_linear_map({point, bundle, v}, {bundle, point, v}));
    if (!theta.is_integral())
        throw std::logic_error("dual-exchange isometry is not integral on the lattice");
    if (!theta.preserves_pairing(ctx))
        throw std::logic_error("dual-exchange isometry does not preserve the pairing");
    return theta;
}

DiscriminantAction discriminant_action(const GenusContext& ctx) {
    if (!ctx.is_three_mod_4())
        throw std::invalid_argument("discriminant action requires g = 3 mod 4");
    Int modulus = ctx.h_square();
    Int multiplier = Int(ctx.genus()) % modulus;
    bool trivial = (multiplier == 1) || (multiplier == modulus - 1);
    return DiscriminantAction{modulus, multiplier, trivial};
}

std::string to_string(const MukaiVector& a) {
    std::string mh;
    if (a.m == 0)
        mh = "0";
    else if (a.m == 1)
        mh = "h";
    else if (a.m == -1)
        mh = "-h";
    else
        mh = a.m.get_str() + "h";
    return "(" + a.r.get_str() + "," + mh + "," + a.s.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const MukaiVector& a) {
    return os << to_string(a);
}

} // namespace mukai
