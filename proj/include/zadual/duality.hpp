#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zadual/calculus.hpp"
#include "zadual/types.hpp"

namespace zadual {

enum class StepKind {
    DerivativeRho,  // D_{rho|.|^x}^{(k)}
    DerivativeD01,  // D_{Delta[0,-1]}^{(k)}
    SocleRho,       // S_{rho|.|^x}^{(k)}
    SocleZ01,       // S_{Z[0,1]}^{(k)}
    DualTempered,   // tempered good-parity base case
    FixedPoint      // supercuspidal-like fixed point
};

struct TraceStep {
    int factor = 0;
    StepKind kind = StepKind::FixedPoint;
    std::string rho_id;
    HalfInt x;
    int k = 0;
    LanglandsDatum before, after;
};

struct DualTrace {
    std::vector<TraceStep> steps;
};

std::string step_name(const TraceStep& s);

struct DualOptions {
    // Scan candidate points in the reversed order and pick the largest
    // instead of the smallest qualifying line in step 2; the dual is
    // unchanged (cross-checked by the verification suite).
    bool reverse_scan = false;
};

// First point of the deterministic candidate scan whose highest derivative
// has order k >= 1, with that order.
std::optional<std::pair<Point, int>> find_candidate(const LanglandsDatum& d,
                                                    const DualOptions& opts = {});

// Zelevinsky-Aubert dual of a single Jantzen factor.
LanglandsDatum dual_factor(const Factor& f, DualTrace& trace, int factor_index,
                           const DualOptions& opts = {});

// Zelevinsky-Aubert dual: Jantzen split, per-factor duality, merge.
std::pair<LanglandsDatum, DualTrace> dual(const LanglandsDatum& d,
                                          const DualOptions& opts = {});

} // namespace zadual
