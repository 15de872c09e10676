#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "zadual/matching.hpp"

using namespace zadual;

namespace {

// Exhaustive maximum matching size over all injections contained in rel.
int brute_max_matching(int na, int nb, const std::vector<std::vector<bool>>& rel) {
    int best = 0;
    std::vector<int> used(nb, 0);
    std::function<void(int, int)> rec = [&](int a, int size) {
        best = std::max(best, size);
        if (a == na) return;
        rec(a + 1, size);
        for (int b = 0; b < nb; ++b) {
            if (!used[b] && rel[b][a]) {
                used[b] = 1;
                rec(a + 1, size + 1);
                used[b] = 0;
            }
        }
    };
    rec(0, 0);
    return best;
}

// Hall criterion by subset enumeration.
bool brute_hall(int na, int nb, const std::vector<std::vector<bool>>& rel) {
    for (int mask = 1; mask < (1 << na); ++mask) {
        int need = __builtin_popcount(mask);
        int have = 0;
        for (int b = 0; b < nb; ++b) {
            bool hit = false;
            for (int a = 0; a < na && !hit; ++a)
                if ((mask >> a) & 1) hit = rel[b][a];
            if (hit) ++have;
        }
        if (have < need) return false;
    }
    return true;
}

OrderedIndexSet iota_set(int n) {
    OrderedIndexSet s;
    for (int i = 0; i < n; ++i) s.desc.push_back(i);
    return s;
}

} // namespace

TEST_CASE("best matching on empty sets") {
    auto rel = [](int, int) { return true; };
    MatchResult r = best_match(OrderedIndexSet{}, iota_set(3), rel);
    CHECK(r.f.empty());
    CHECK(r.bc.size() == 3);
    CHECK(hall_check(OrderedIndexSet{}, OrderedIndexSet{}, rel));
}

TEST_CASE("single unmatched element fails Hall") {
    auto rel = [](int, int) { return false; };
    CHECK(!hall_check(iota_set(1), iota_set(2), rel));
}

TEST_CASE("greedy picks the minimum related b from the top of A") {
    // A = {a0 > a1}, B = {b0 > b1 > b2}; everything related.
    auto rel = [](int, int) { return true; };
    MatchResult r = best_match(iota_set(2), iota_set(3), rel);
    REQUIRE(r.f.size() == 2);
    CHECK(r.f[0] == std::pair<int, int>{0, 2}); // a0 takes the minimum b2
    CHECK(r.f[1] == std::pair<int, int>{1, 1});
    CHECK(r.bc == std::vector<int>{0});
}

TEST_CASE("matching agrees with brute force on random traversable relations") {
    std::mt19937 gen(20240817);
    std::uniform_int_distribution<int> size_dist(0, 6), val_dist(0, 5);
    int instances = 0;
    while (instances < 10000) {
        int na = size_dist(gen), nb = size_dist(gen);
        std::vector<std::vector<bool>> rel(nb, std::vector<bool>(na, false));
        // g non-increasing along descending B guarantees traversability of
        // rel(b, a) = (g(b) >= h(a)); h arbitrary.
        std::vector<int> g(nb), h(na);
        for (auto& v : h) v = val_dist(gen);
        for (auto& v : g) v = val_dist(gen);
        std::sort(g.begin(), g.end(), std::greater<int>());
        for (int b = 0; b < nb; ++b)
            for (int a = 0; a < na; ++a) rel[b][a] = g[b] >= h[a];

        auto relf = [&](int b, int a) { return rel[b][a]; };
        OrderedIndexSet A = iota_set(na), B = iota_set(nb);
        REQUIRE(is_traversable(A, B, relf));
        MatchResult r = best_match(A, B, relf);

        CHECK(static_cast<int>(r.f.size()) == brute_max_matching(na, nb, rel));
        CHECK(r.f.size() == r.a0.size());
        CHECK(r.f.size() == r.b0.size());
        CHECK(r.a0.size() + r.ac.size() == static_cast<size_t>(na));
        CHECK(hall_check(A, B, relf) == brute_hall(na, nb, rel));
        CHECK(hall_check(A, B, relf) == r.ac.empty());

        // f respects the defining recursion: processing a downward, f(a) is
        // the minimum related b not taken by bigger a's.
        std::vector<bool> taken(nb, false);
        size_t fi = 0;
        for (int a = 0; a < na; ++a) {
            int expect = -1;
            for (int b = nb - 1; b >= 0; --b)
                if (!taken[b] && rel[b][a]) {
                    expect = b;
                    break;
                }
            if (expect >= 0) {
                REQUIRE(fi < r.f.size());
                CHECK(r.f[fi].first == a);
                CHECK(r.f[fi].second == expect);
                taken[expect] = true;
                ++fi;
            }
        }
        ++instances;
    }
}

TEST_CASE("determinism") {
    auto rel = [](int b, int a) { return (b + a) % 2 == 0; };
    MatchResult r1 = best_match(iota_set(4), iota_set(4), rel);
    MatchResult r2 = best_match(iota_set(4), iota_set(4), rel);
    CHECK(r1.f == r2.f);
    CHECK(r1.ac == r2.ac);
    CHECK(r1.bc == r2.bc);
}
