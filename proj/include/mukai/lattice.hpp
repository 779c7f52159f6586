#pragma once

#include <array>
#include <ostream>
#include <string>

#include "mukai/genus.hpp"

namespace mukai {

/// A vector (r, m*h, s) in the rank-3 algebraic Mukai lattice of a
/// Picard-rank-1 K3. The middle component is stored as the integer
/// multiple m of the ample generator h; this is lossless in rank 1.
struct MukaiVector {
    Int r; // rank component
    Int m; // coefficient of h in the H^2 component
    Int s; // H^4 component

    MukaiVector() : r(0), m(0), s(0) {}
    MukaiVector(Int rr, Int mm, Int ss) : r(std::move(rr)), m(std::move(mm)), s(std::move(ss)) {}
    MukaiVector(long rr, long mm, long ss) : r(rr), m(mm), s(ss) {}

    bool operator==(const MukaiVector& o) const { return r == o.r && m == o.m && s == o.s; }
    bool operator!=(const MukaiVector& o) const { return !(*this == o); }

    MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, m - o.m, s - o.s}; }
    MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, m + o.m, s + o.s}; }
    MukaiVector operator*(const Int& k) const { return {r * k, m * k, s * k}; }
};

/// The distinguished vector v = (0, h, 1-g) whose moduli spaces carry the
/// whole wall system.
MukaiVector base_vector(const GenusContext& ctx);

/// Mukai pairing <(r,m,s),(r',m',s')> = (2g-2) m m' - r s' - r' s.
Int mukai_pairing(const MukaiVector& a, const MukaiVector& b, const GenusContext& ctx);

Int mukai_square(const MukaiVector& a, const GenusContext& ctx);

/// Dimension of the moduli space of stable objects with primitive vector a:
/// <a,a> + 2.
Int moduli_dim(const MukaiVector& a, const GenusContext& ctx);

/// Action on Mukai vectors of the contravariant dualizing functor
/// E -> RHom(E, L^*[1]): (r, m, s) -> (-r, m+r, -(r+2m)(g-1) - s).
/// A pairing-preserving involution fixing base_vector.
MukaiVector dual_twist_vector(const MukaiVector& a, const GenusContext& ctx);

/// A linear isometry of the lattice, stored as an exact rational 3x3 matrix
/// acting on (r, m, s) column vectors.
class LatticeIsometry {
public:
    explicit LatticeIsometry(std::array<std::array<Rat, 3>, 3> mat) : mat_(std::move(mat)) {}

    MukaiVector apply(const MukaiVector& a) const;
    const std::array<std::array<Rat, 3>, 3>& matrix() const noexcept { return mat_; }

    /// Every matrix entry is an integer, so integer triples map to integer triples.
    bool is_integral() const;
    /// <Fa, Fb> = <a, b> on all nine basis products.
    bool preserves_pairing(const GenusContext& ctx) const;

private:
    std::array<std::array<Rat, 3>, 3> mat_;
};

/// The cohomological isometry exchanging the lattice of X with the lattice
/// of the Mukai-dual K3 (identified coordinate-wise). Defined for
/// g = 3 mod 4 only: it is the unique linear map with
///   (0,0,-1)           ->  (2, -1, (g-1)/2)
///   (2,-1,(g-1)/2)     ->  (0, 0, -1)
///   (0,1,1-g)          ->  (0, 1, 1-g)
/// solved exactly over the rationals, then checked to be an integral
/// pairing-preserving isometry.
LatticeIsometry theta_isometry(const GenusContext& ctx);

/// Induced action of the dual-exchange isometry on the discriminant group
/// A*/A (cyclic of order 2g-2): multiplication by g. Nontriviality is the
/// arithmetic certificate that X and its Mukai dual are not isomorphic.
struct DiscriminantAction {
    Int modulus;    // 2g-2
    Int multiplier; // residue mod 2g-2
    bool is_trivial;
};

DiscriminantAction discriminant_action(const GenusContext& ctx);

std::string to_string(const MukaiVector& a);
std::ostream& operator<<(std::ostream& os, const MukaiVector& a);

} // namespace mukai
