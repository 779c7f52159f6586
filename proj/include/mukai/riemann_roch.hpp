#pragma once

#include "mukai/genus.hpp"
#include "mukai/lattice.hpp"

namespace mukai {

/// Chern data (rank, c1 = c1_mult * h, c2) of a class on the K3. Fields are
/// exact rationals so that symmetric-power intermediates stay exact; every
/// class of an honest sheaf assembled here has integral entries.
struct SheafClass {
    Int rank;
    Rat c1_mult;
    Rat c2;

    bool operator==(const SheafClass& o) const {
        return rank == o.rank && c1_mult == o.c1_mult && c2 == o.c2;
    }
};

/// Chern character (rank, c1_mult, ch2) with ch2 = c1^2/2 - c2 measured
/// against the point class. Multiplicative, unlike the Chern class, so all
/// products go through this form. h^2 = (2g-2) pt.
struct ChernCharacter {
    Rat rank;
    Rat c1_mult;
    Rat ch2;
};

/// Dictionary (r, m, s) -> (r, m, c2 = m^2 (g-1) + r - s); inverse of
/// mukai_of_chern.
SheafClass chern_of_mukai(const MukaiVector& a, const GenusContext& ctx);

/// Dictionary (r, c1, c2) -> (r, c1, r + c1^2/2 - c2). Throws when the
/// result is not an integer triple.
MukaiVector mukai_of_chern(const SheafClass& s, const GenusContext& ctx);

/// Symmetric square: rank r(r+1)/2, c1(S^2 F) = (r+1) c1,
/// c2(S^2 F) = c1^2 (r^2/2 + r/2 - 1) + c2 (r + 2). Rejects rank < 1.
SheafClass sym2(const SheafClass& s, const GenusContext& ctx);

/// Tensor with the t-th power of the polarization: rank unchanged,
/// c1 += rank * t * h, c2 += (rank-1) t (c1 . h) + C(rank,2) t^2 (2g-2),
/// with c1 . h taken before the twist.
SheafClass tensor_line(const SheafClass& s, long t, const GenusContext& ctx);

/// Riemann-Roch on a K3: chi = 2 rank + c1^2/2 - c2. A non-integral value
/// signals an upstream formula bug and throws.
Int euler_char(const SheafClass& s, const GenusContext& ctx);

ChernCharacter chern_character(const SheafClass& s, const GenusContext& ctx);
ChernCharacter ch_mul(const ChernCharacter& a, const ChernCharacter& b, const GenusContext& ctx);
Int chi_of_character(const ChernCharacter& ch, const GenusContext& ctx);

/// From-first-principles recomputation of the flipped bundle rank:
/// k^+(c,d) = chi(S^2 T (x) Lambda) for T with vector v_{c,d}. Kept
/// independent of the closed-form route in flips.
Int k_plus_oracle(long c, long d, const GenusContext& ctx);

/// chi(T (x) T (x) Lambda) by Chern-character multiplication; equals
/// k^+ + k^- = g-1-2d for admissible pairs.
Int chi_tensor_square_line(const SheafClass& t_class, const GenusContext& ctx);

} // namespace mukai
