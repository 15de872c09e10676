#pragma once

#include <vector>

#include "zadual/types.hpp"

namespace zadual {

// Splits a datum into its good factor and one factor per bad/ugly line.
// The good factor collects all good-line segments and all signed blocks; it
// is always emitted. Bad and ugly factors carry the sigma anchor. Inverse of
// jantzen_merge.
std::vector<Factor> jantzen_split(const LanglandsDatum& d);

// Reassembles a datum from factors produced by jantzen_split.
LanglandsDatum jantzen_merge(const std::vector<Factor>& factors);

} // namespace zadual
