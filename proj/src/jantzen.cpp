#include "zadual/jantzen.hpp"

#include <algorithm>
#include <map>

namespace zadual {

std::vector<Factor> jantzen_split(const LanglandsDatum& d) {
    validate(d);

    Factor good;
    good.cls = LineClass::Good;
    good.datum.group = d.group;
    good.datum.temp.sigma = d.temp.sigma;

    std::map<LineKey, Factor> bad, ugly;
    auto factor_for = [&](std::map<LineKey, Factor>& pool, LineClass cls,
                          const LineKey& key) -> Factor& {
        auto it = pool.find(key);
        if (it == pool.end()) {
            Factor f;
            f.cls = cls;
            f.line = key;
            f.datum.group = d.group;
            f.datum.temp.sigma = d.temp.sigma;
            it = pool.emplace(key, std::move(f)).first;
        }
        return it->second;
    };

    for (const auto& seg : d.segments) {
        LineKey key = line_of(seg.rho, seg.x);
        switch (classify_line(seg.rho, key.cls, d.group)) {
            case LineClass::Good:
                good.datum.segments.push_back(seg);
                break;
            case LineClass::Bad:
                factor_for(bad, LineClass::Bad, key).datum.segments.push_back(seg);
                break;
            case LineClass::Ugly:
                factor_for(ugly, LineClass::Ugly, key).datum.segments.push_back(seg);
                break;
        }
    }
    for (const auto& b : d.temp.blocks) {
        if (b.sign != Sign::Unset) {
            good.datum.temp.blocks.push_back(b);
        } else {
            LineKey key = line_of_block(b.rho, b.d);
            factor_for(bad, LineClass::Bad, key).datum.temp.blocks.push_back(b);
        }
    }

    std::vector<Factor> out;
    canonicalize(good.datum);
    out.push_back(std::move(good));
    for (auto& [key, f] : bad) {
        canonicalize(f.datum);
        out.push_back(std::move(f));
    }
    for (auto& [key, f] : ugly) {
        canonicalize(f.datum);
        out.push_back(std::move(f));
    }
    for (const auto& f : out) validate(f.datum);
    return out;
}

LanglandsDatum jantzen_merge(const std::vector<Factor>& factors) {
    if (factors.empty()) throw ValidationError("jantzen_merge: no factors");
    LanglandsDatum d;
    d.group = factors.front().datum.group;
    for (const auto& f : factors) {
        if (f.datum.group != d.group)
            throw ValidationError("jantzen_merge: factors from different groups");
        for (const auto& seg : f.datum.segments) d.segments.push_back(seg);
        for (const auto& b : f.datum.temp.blocks) d.temp.blocks.push_back(b);
        if (f.datum.temp.sigma) {
            if (d.temp.sigma && !(d.temp.sigma == f.datum.temp.sigma))
                throw ValidationError("jantzen_merge: conflicting sigma anchors");
            d.temp.sigma = f.datum.temp.sigma;
        }
    }
    canonicalize(d);
    validate(d);
    return d;
}

} // namespace zadual
