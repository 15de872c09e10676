#include "zadual/matching.hpp"

#include <algorithm>

namespace zadual {

MatchResult best_match(const OrderedIndexSet& a, const OrderedIndexSet& b, const Relation& rel) {
    MatchResult res;
    std::vector<bool> used(b.desc.size(), false);

    for (int ai : a.desc) {
        // min available related b = last hit scanning the descending list
        int pick = -1;
        for (size_t j = 0; j < b.desc.size(); ++j)
            if (!used[j] && rel(b.desc[j], ai)) pick = static_cast<int>(j);
        if (pick >= 0) {
            used[pick] = true;
            res.f.emplace_back(ai, b.desc[pick]);
            res.a0.push_back(ai);
        } else {
            res.ac.push_back(ai);
        }
    }
    for (size_t j = 0; j < b.desc.size(); ++j)
        (used[j] ? res.b0 : res.bc).push_back(b.desc[j]);
    return res;
}

bool hall_check(const OrderedIndexSet& a, const OrderedIndexSet& b, const Relation& rel) {
    return best_match(a, b, rel).ac.empty();
}

bool is_traversable(const OrderedIndexSet& a, const OrderedIndexSet& b, const Relation& rel) {
    // a.desc and b.desc are decreasing, so earlier entries are the larger ones.
    for (size_t i1 = 0; i1 < a.desc.size(); ++i1)
        for (size_t i2 = i1; i2 < a.desc.size(); ++i2)
            for (size_t j1 = 0; j1 < b.desc.size(); ++j1)
                for (size_t j2 = j1; j2 < b.desc.size(); ++j2) {
                    int a1 = a.desc[i1], a2 = a.desc[i2];
                    int b1 = b.desc[j1], b2 = b.desc[j2];
                    if (rel(b1, a1) && rel(b2, a1) && rel(b2, a2) && !rel(b1, a2))
                        return false;
                }
    return true;
}

} // namespace zadual
