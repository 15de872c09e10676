#include "zadual/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "zadual/parse.hpp"

namespace zadual {

namespace {

struct SegType {
    Segment seg;
    int cost; // gl size
};

// All segments on the line of rho within the exponent window and budget.
// Ugly lines use integral exponents and admit any x+y.
std::vector<SegType> segment_types(const Rho& rho, ExpClass cls, int budget, int bound2) {
    std::vector<SegType> out;
    bool ugly = cls == ExpClass::Ugly;
    int want_parity = cls == ExpClass::HalfIntegral ? 1 : 0;
    for (int x2 = -bound2; x2 <= bound2; ++x2) {
        if (((x2 % 2) + 2) % 2 != want_parity) continue;
        int y2_start = -bound2;
        if (((y2_start - x2) % 2 + 2) % 2 != 0) ++y2_start;
        for (int y2 = y2_start; y2 <= x2; y2 += 2) {
            Segment s{rho, HalfInt(x2), HalfInt(y2)};
            if (!ugly && s.center2().twice >= 0) continue;
            if (s.gl_size() > budget) continue;
            out.push_back(SegType{s, s.gl_size()});
        }
    }
    return out;
}

void segment_multisets(const std::vector<SegType>& types, int budget,
                       const std::function<void(const std::vector<Segment>&, int)>& emit) {
    std::vector<Segment> acc;
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (i == types.size()) {
            emit(acc, budget - left);
            return;
        }
        rec(i + 1, left);
        for (int c = 1; c * types[i].cost <= left; ++c) {
            for (int j = 0; j < c; ++j) acc.push_back(types[i].seg);
            rec(i + 1, left - c * types[i].cost);
            for (int j = 0; j < c; ++j) acc.pop_back();
        }
    };
    rec(0, budget);
}

struct BlockShape {
    Rho rho;
    int d;
    int mult;
};

// Unsigned block multisets on one line with total dim exactly `dim`.
// Integral lines carry odd d, half-integral lines even d.
void block_multisets(const Rho& rho, ExpClass cls, int dim, int max_d, bool even_mult,
                     const std::function<void(const std::vector<BlockShape>&)>& emit) {
    std::vector<int> ds;
    for (int d = 1; d <= max_d; ++d)
        if ((d % 2 == 1) == (cls == ExpClass::Integral)) ds.push_back(d);

    std::vector<BlockShape> acc;
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
        if (left == 0) {
            emit(acc);
            return;
        }
        if (i == ds.size()) return;
        rec(i + 1, left);
        int step = even_mult ? 2 : 1;
        int unit = rho.dim * ds[i];
        for (int m = step; m * unit <= left; m += step) {
            acc.push_back(BlockShape{rho, ds[i], m});
            rec(i + 1, left - m * unit);
            acc.pop_back();
        }
    };
    rec(0, dim);
}

struct LineContent {
    std::vector<Segment> segments;
    std::vector<BlockShape> blocks;
    int min_rank = 0; // lower bound on the rank this content consumes
};

int content_min_rank(const LineContent& c) {
    int r = 0;
    for (const auto& s : c.segments) r += s.gl_size();
    int dim = 0;
    for (const auto& b : c.blocks) dim += b.rho.dim * b.d * b.mult;
    return r + dim / 2;
}

} // namespace

std::vector<LanglandsDatum> enumerate_reps(const EnumParams& params) {
    if (params.max_rank < 0 || params.max_rank > 16)
        throw ValidationError("enumerate_reps: max_rank out of range (0..16)");
    int bound2 = params.exp_bound2 > 0 ? params.exp_bound2 : 2 * params.max_rank;

    std::set<std::string> seen;
    std::vector<LanglandsDatum> out;

    auto consider = [&](LanglandsDatum d) {
        canonicalize(d);
        try {
            validate(d);
            if (rank(d) > params.max_rank) return;
        } catch (const ValidationError&) {
            return;
        }
        std::string key = format_rep_json(d);
        if (seen.insert(key).second) out.push_back(std::move(d));
    };

    std::vector<std::vector<LineContent>> per_line;
    for (const auto& rho : params.lines) {
        std::vector<ExpClass> classes;
        if (rho.is_self_dual())
            classes = {ExpClass::Integral, ExpClass::HalfIntegral};
        else
            classes = {ExpClass::Ugly};
        for (ExpClass cls : classes) {
            LineClass lc = classify_line(rho, cls, params.group);
            if ((lc == LineClass::Bad || lc == LineClass::Ugly) && !params.sigma)
                continue; // unanchored bad/ugly content can never validate
            std::vector<LineContent> contents;
            auto types = segment_types(rho, cls, params.max_rank, bound2);
            segment_multisets(types, params.max_rank,
                              [&](const std::vector<Segment>& segs, int cost) {
                                  if (lc == LineClass::Ugly) {
                                      LineContent c{segs, {}, 0};
                                      c.min_rank = content_min_rank(c);
                                      contents.push_back(std::move(c));
                                      return;
                                  }
                                  int left = params.max_rank - cost;
                                  int dim_budget =
                                      2 * left + (params.group == GroupKind::SpEven ? 1 : 0);
                                  for (int dim = 0; dim <= dim_budget; ++dim)
                                      block_multisets(
                                          rho, cls, dim, params.max_block_d,
                                          lc == LineClass::Bad,
                                          [&](const std::vector<BlockShape>& bs) {
                                              LineContent c{segs, bs, 0};
                                              c.min_rank = content_min_rank(c);
                                              contents.push_back(std::move(c));
                                          });
                              });
            per_line.push_back(std::move(contents));
        }
    }

    std::vector<const LineContent*> pick(per_line.size());
    std::function<void(size_t, int)> fold = [&](size_t i, int budget) {
        if (i == per_line.size()) {
            LanglandsDatum d;
            d.group = params.group;
            d.temp.sigma = params.sigma;
            for (const auto* c : pick) {
                for (const auto& s : c->segments) d.segments.push_back(s);
                for (const auto& b : c->blocks) {
                    bool bad = classify_line(b.rho, line_of_block(b.rho, b.d).cls,
                                             params.group) == LineClass::Bad;
                    d.temp.blocks.push_back(
                        JordanBlock{b.rho, b.d, b.mult, bad ? Sign::Unset : Sign::Plus});
                }
            }
            std::vector<JordanBlock*> slots;
            for (auto& jb : d.temp.blocks)
                if (jb.sign != Sign::Unset) slots.push_back(&jb);
            size_t nb = slots.size();
            for (size_t mask = 0; mask < (size_t{1} << nb); ++mask) {
                for (size_t j = 0; j < nb; ++j)
                    slots[j]->sign = (mask >> j) & 1 ? Sign::Minus : Sign::Plus;
                consider(d);
            }
            return;
        }
        for (const auto& c : per_line[i]) {
            if (c.min_rank > budget) continue;
            pick[i] = &c;
            fold(i + 1, budget - c.min_rank);
        }
    };
    if (per_line.empty()) {
        LanglandsDatum d;
        d.group = params.group;
        d.temp.sigma = params.sigma;
        consider(d);
    } else {
        fold(0, params.max_rank);
    }

    std::sort(out.begin(), out.end(), [](const LanglandsDatum& a, const LanglandsDatum& b) {
        return format_rep_json(a) < format_rep_json(b);
    });
    return out;
}

} // namespace zadual
