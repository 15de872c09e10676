#pragma once

#include <vector>

#include "zadual/types.hpp"

namespace zadual {

struct EnumParams {
    GroupKind group = GroupKind::SpEven;
    std::vector<Rho> lines;      // declared labels; self-dual or ugly pairs
    int max_rank = 4;
    int max_block_d = 7;
    // Exponent window for segments: -exp_bound <= y <= x <= exp_bound.
    int exp_bound2 = 0; // doubled; 0 means derive from max_rank
    std::optional<SigmaInfo> sigma; // attach an anchor (required for bad/ugly lines)
};

// Exhaustively generates the valid canonical data over the declared lines
// within the rank budget, deduplicated. Sign assignments respect the z_phi
// product constraint; bad lines produce even-multiplicity unsigned blocks.
std::vector<LanglandsDatum> enumerate_reps(const EnumParams& params);

} // namespace zadual
