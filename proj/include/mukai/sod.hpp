#pragma once

#include <string>
#include <vector>

#include "mukai/cones.hpp"
#include "mukai/flips.hpp"

namespace mukai {

enum class EmbeddingCondition { StrictGain, Equality, Loss };

/// Sign of k^+ - k^-: whether crossing the wall grows, preserves or shrinks
/// the flipped bundle rank (equivalently the fully-faithful direction).
EmbeddingCondition embedding_condition(const WallPair& pair, const GenusContext& ctx);

std::string to_string(EmbeddingCondition cond);

enum class Verdict { Fano, WeakFano };

struct Visitor {
    WallPair pair;
    std::string label; // Hilb^{d+1}(X) or M(v_{c,d})
    bool strict;       // k^+ > k^-; false on the slope-1 equality walls
};

/// The headline classification for one genus: M_j is Fano when
/// g != 3 mod 4 and weak Fano when g = 3 mod 4, and the moduli spaces whose
/// derived categories ride along into D^b(M_j).
struct VisitorVerdict {
    long genus;
    Verdict verdict;
    long fano_model_index; // Fano chamber, or the model after the slope-1 wall
    std::vector<Visitor> visitors;
    Rat strict_d_bound; // Hilb^{d+1} is a strict visitor for d < (g-3)/4
    Rat stated_d_bound; // headline range d <= (g+1)/4, reported for reference
};

VisitorVerdict theorem_verdicts(const GenusContext& ctx, const WallSystem& walls);

/// One block of the semiorthogonal decomposition of D^b(M_j).
struct SodBlock {
    std::string label; // D(pt), D(X), D(Hilb^{d+1}(X)), D(M(v_{c,d}))
    Int dimension;     // 0, 2, or 2d+2
    Int multiplicity;  // >= 1
    bool twisted_possible;
};

/// Block ledger at the (weak) Fano model: g+1 point blocks and g-3 copies of
/// D(X) from the blow-up of P^g along X, then k^+ - k^- copies of
/// D(M(v_{c,d})) per pair crossed at i = 1..j-1. Equality walls contribute
/// nothing and are omitted.
std::vector<SodBlock> block_inventory(const GenusContext& ctx, const WallSystem& walls);

/// Independent total: (g+1) + (g-3) + sum of k^+ - k^- over crossed pairs.
Int block_total(const GenusContext& ctx, const WallSystem& walls);

} // namespace mukai
