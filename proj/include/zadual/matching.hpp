#pragma once

#include <functional>
#include <vector>

#include "zadual/types.hpp"

namespace zadual {

// Totally ordered finite index set, listed from the maximum downwards.
// Elements are opaque ids (indices into some segment list).
struct OrderedIndexSet {
    std::vector<int> desc; // ids in strictly decreasing set order
};

// b ~> a : can b be matched onto a?
using Relation = std::function<bool(int b, int a)>;

// Best matching between A and B: the greedy top-down recursion
//   f(a) = min{ b in B \ f(A^0 cap A_{>a}) | b ~> a }.
struct MatchResult {
    std::vector<std::pair<int, int>> f; // (a, f(a)) pairs, a taken in descending order
    std::vector<int> a0, b0;            // matched ids
    std::vector<int> ac, bc;            // complements, in input (descending) order

    bool matched_all_a() const { return ac.empty(); }
};

MatchResult best_match(const OrderedIndexSet& a, const OrderedIndexSet& b, const Relation& rel);

// Hall's criterion: every subset of A has enough related elements of B.
// Equivalent to best_match(a, b, rel).ac.empty().
bool hall_check(const OrderedIndexSet& a, const OrderedIndexSet& b, const Relation& rel);

// Checks the traversability hypothesis on the given inputs; used by tests
// and debug assertions.
bool is_traversable(const OrderedIndexSet& a, const OrderedIndexSet& b, const Relation& rel);

} // namespace zadual
