#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mukai {

using Int = mpz_class;
using Rat = mpq_class;

enum class Parity { Even, Odd };

/// Fixed numerical context of a Picard-rank-1 K3 of genus g: the square of
/// the ample generator is h^2 = 2g-2. Everything downstream is a pure
/// function of this context.
class GenusContext {
public:
    explicit GenusContext(long genus) : g_(genus) {
        if (genus < 4)
            throw std::invalid_argument("genus must be >= 4");
    }

    long genus() const noexcept { return g_; }
    Int h_square() const { return Int(g_) * 2 - 2; }
    Parity parity() const noexcept { return (g_ % 2 == 0) ? Parity::Even : Parity::Odd; }
    bool is_even() const noexcept { return g_ % 2 == 0; }
    int residue_mod_4() const noexcept { return static_cast<int>(g_ % 4); }
    bool divisible_by_4() const noexcept { return g_ % 4 == 0; }
    bool is_three_mod_4() const noexcept { return g_ % 4 == 3; }

    bool operator==(const GenusContext& other) const noexcept { return g_ == other.g_; }

private:
    long g_;
};

inline std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

} // namespace mukai
