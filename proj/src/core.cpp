#include "zadual/types.hpp"

#include <algorithm>
#include <tuple>

namespace zadual {

int TemperedData::mult_of(const Rho& rho, int d) const {
    for (const auto& b : blocks)
        if (b.rho == rho && b.d == d) return b.mult;
    return 0;
}

Sign TemperedData::sign_of(const Rho& rho, int d) const {
    for (const auto& b : blocks)
        if (b.rho == rho && b.d == d) return b.sign;
    return Sign::Unset;
}

void TemperedData::add_block(const Rho& rho, int d, int mult, Sign sign) {
    if (mult == 0 || d == 0) return; // S_0 insertions are formal no-ops
    for (auto& b : blocks) {
        if (b.rho == rho && b.d == d) {
            if (b.sign != sign)
                throw InternalError("conflicting signs on block " + rho.id + ":S_" +
                                    std::to_string(d));
            b.mult += mult;
            return;
        }
    }
    blocks.push_back(JordanBlock{rho, d, mult, sign});
}

void TemperedData::remove_block(const Rho& rho, int d, int mult) {
    if (mult == 0 || d == 0) return;
    for (auto it = blocks.begin(); it != blocks.end(); ++it) {
        if (it->rho == rho && it->d == d) {
            if (it->mult < mult)
                throw InternalError("block multiplicity underflow at " + rho.id + ":S_" +
                                    std::to_string(d));
            it->mult -= mult;
            if (it->mult == 0) blocks.erase(it);
            return;
        }
    }
    throw InternalError("removing absent block " + rho.id + ":S_" + std::to_string(d));
}

int TemperedData::signed_dim() const {
    int dim = 0;
    for (const auto& b : blocks)
        if (b.sign != Sign::Unset) dim += b.dim();
    return dim;
}

void RhoTable::declare_rho(const Rho& rho) {
    if (rho.dim <= 0) throw ValidationError("rho " + rho.id + ": dim must be positive");
    if (rho.is_self_dual() && rho.dual_id != rho.id)
        throw ValidationError("rho " + rho.id + ": self-dual label must be its own dual");
    if (!rho.is_self_dual() && rho.dual_id == rho.id)
        throw ValidationError("rho " + rho.id + ": non-self-dual label needs a distinct dual");
    auto [it, fresh] = rhos_.emplace(rho.id, rho);
    if (!fresh && !(it->second == rho && it->second.dim == rho.dim &&
                    it->second.self_dual == rho.self_dual && it->second.dual_id == rho.dual_id))
        throw ValidationError("rho " + rho.id + " redeclared inconsistently");
    // Implicitly declare the partner of an ugly pair.
    if (!rho.is_self_dual() && !rhos_.count(rho.dual_id))
        rhos_.emplace(rho.dual_id, rho.dual());
}

void RhoTable::declare_sigma(const SigmaInfo& sigma) {
    if (sigma.rank < 0) throw ValidationError("sigma " + sigma.id + ": rank must be >= 0");
    auto [it, fresh] = sigmas_.emplace(sigma.id, sigma);
    if (!fresh && !(it->second == sigma))
        throw ValidationError("sigma " + sigma.id + " redeclared inconsistently");
}

const Rho& RhoTable::rho(const std::string& id) const {
    auto it = rhos_.find(id);
    if (it == rhos_.end()) throw ValidationError("undeclared rho '" + id + "'");
    return it->second;
}

const SigmaInfo& RhoTable::sigma(const std::string& id) const {
    auto it = sigmas_.find(id);
    if (it == sigmas_.end()) throw ValidationError("undeclared sigma '" + id + "'");
    return it->second;
}

const Rho& RhoTable::default_rho() const {
    const Rho* found = nullptr;
    for (const auto& [id, r] : rhos_) {
        if (r.is_self_dual()) {
            if (found) throw ValidationError("several self-dual rho declared; '@' is required");
            found = &r;
        }
    }
    if (!found) throw ValidationError("no self-dual rho declared; '@' is required");
    return *found;
}

ExpClass exp_class_of(const Rho& rho, HalfInt x) {
    if (!rho.is_self_dual()) return ExpClass::Ugly;
    return x.is_integer() ? ExpClass::Integral : ExpClass::HalfIntegral;
}

LineKey line_of(const Rho& rho, HalfInt x) {
    return LineKey{rho.pair_rep(), exp_class_of(rho, x)};
}

LineKey line_of_block(const Rho& rho, int d) {
    return LineKey{rho.pair_rep(), d % 2 == 1 ? ExpClass::Integral : ExpClass::HalfIntegral};
}

LineClass classify_line(const Rho& rho, ExpClass cls, GroupKind group) {
    if (cls == ExpClass::Ugly || !rho.is_self_dual()) return LineClass::Ugly;
    // Good iff rho x S_{2x+1} has the same type as the dual group parameters,
    // for x in the line's exponent class.
    SelfDualType line_type =
        cls == ExpClass::Integral ? rho.self_dual : flip(rho.self_dual);
    return line_type == phi_type(group) ? LineClass::Good : LineClass::Bad;
}

void canonicalize(LanglandsDatum& d) {
    std::vector<Segment> kept;
    kept.reserve(d.segments.size());
    for (auto seg : d.segments) {
        if (seg.is_empty()) continue;
        if (seg.x < seg.y)
            throw ValidationError("segment [" + seg.x.str() + "," + seg.y.str() + "]@" +
                                  seg.rho.id + " has x < y");
        if (!seg.rho.is_self_dual() && seg.rho.id != seg.rho.pair_rep()) {
            // canonical base of an ugly pair
            seg = Segment{seg.rho.dual(), -seg.y, -seg.x};
        }
        kept.push_back(seg);
    }
    std::sort(kept.begin(), kept.end(), [](const Segment& a, const Segment& b) {
        return std::tuple(a.center2().twice, a.x.twice, a.rho.id) <
               std::tuple(b.center2().twice, b.x.twice, b.rho.id);
    });
    d.segments = std::move(kept);

    std::vector<JordanBlock> merged;
    std::sort(d.temp.blocks.begin(), d.temp.blocks.end(),
              [](const JordanBlock& a, const JordanBlock& b) {
                  return std::tuple(a.rho.id, a.d) < std::tuple(b.rho.id, b.d);
              });
    for (const auto& b : d.temp.blocks) {
        if (b.mult == 0) continue;
        if (!merged.empty() && merged.back().rho == b.rho && merged.back().d == b.d) {
            if (merged.back().sign != b.sign)
                throw ValidationError("conflicting signs on block " + b.rho.id + ":S_" +
                                      std::to_string(b.d));
            merged.back().mult += b.mult;
        } else {
            merged.push_back(b);
        }
    }
    d.temp.blocks = std::move(merged);
}

LanglandsDatum canonicalized(LanglandsDatum d) {
    canonicalize(d);
    return d;
}

void validate(const LanglandsDatum& d) {
    bool needs_sigma = false;
    for (const auto& seg : d.segments) {
        if (seg.x < seg.y)
            throw ValidationError("segment has x < y");
        if (!seg.x.same_class(seg.y))
            throw ValidationError("segment endpoints differ by a non-integer");
        if (seg.rho.dim <= 0) throw ValidationError("segment rho has nonpositive dim");
        LineClass cls = classify_line(seg.rho, exp_class_of(seg.rho, seg.x), d.group);
        if (cls == LineClass::Ugly) {
            needs_sigma = true;
        } else {
            if (cls == LineClass::Bad) needs_sigma = true;
            if (seg.center2().twice >= 0)
                throw ValidationError("segment [" + seg.x.str() + "," + seg.y.str() + "]@" +
                                      seg.rho.id + " violates x+y < 0");
        }
    }

    Sign product = Sign::Plus;
    for (const auto& b : d.temp.blocks) {
        if (b.d <= 0 || b.mult <= 0)
            throw ValidationError("block with nonpositive d or multiplicity");
        if (!b.rho.is_self_dual())
            throw ValidationError("Jordan block on non-self-dual rho " + b.rho.id);
        LineClass cls = classify_line(b.rho, b.d % 2 == 1 ? ExpClass::Integral
                                                          : ExpClass::HalfIntegral,
                                      d.group);
        if (b.sign == Sign::Unset) {
            if (cls != LineClass::Bad)
                throw ValidationError("unsigned block " + b.rho.id + ":S_" +
                                      std::to_string(b.d) + " is not of bad parity");
            if (b.mult % 2 != 0)
                throw ValidationError("bad-parity block " + b.rho.id + ":S_" +
                                      std::to_string(b.d) + " has odd multiplicity");
            needs_sigma = true;
        } else {
            if (cls != LineClass::Good)
                throw ValidationError("signed block " + b.rho.id + ":S_" +
                                      std::to_string(b.d) + " is not of good parity");
            product = sign_mul(product, sign_pow(b.sign, b.mult));
        }
    }
    if (product != Sign::Plus)
        throw ValidationError("sign character is nontrivial on z_phi");

    if (needs_sigma && !d.temp.sigma)
        throw ValidationError("bad/ugly content requires a sigma anchor");

    if (d.temp.sigma) {
        if (d.temp.signed_dim() % 2 != 0)
            throw ValidationError("signed blocks next to sigma must have even total dim");
    } else {
        // Without an anchor the signed blocks are the whole parameter and
        // must have the dim parity of the dual group.
        int dim = d.temp.signed_dim();
        if (d.group == GroupKind::SpEven && dim % 2 == 0)
            throw ValidationError("Sp tempered parameter must have odd dim, got " +
                                  std::to_string(dim));
        if (d.group == GroupKind::SOodd && dim % 2 == 1)
            throw ValidationError("SO tempered parameter must have even dim, got " +
                                  std::to_string(dim));
    }
}

int rank(const LanglandsDatum& d) {
    int n = 0;
    for (const auto& seg : d.segments) n += seg.gl_size();
    int dim = d.temp.signed_dim();
    for (const auto& b : d.temp.blocks)
        if (b.sign == Sign::Unset) n += b.dim() / 2; // even multiplicity
    if (d.temp.sigma) {
        n += d.temp.sigma->rank;
        if (dim % 2 != 0)
            throw ValidationError("signed blocks next to sigma must have even total dim");
        n += dim / 2;
    } else {
        if (d.group == GroupKind::SpEven) {
            if (dim % 2 == 0)
                throw ValidationError("dim phi parity inconsistent with Sp group");
            n += (dim - 1) / 2;
        } else {
            if (dim % 2 == 1)
                throw ValidationError("dim phi parity inconsistent with SO group");
            n += dim / 2;
        }
    }
    return n;
}

std::vector<Segment> re_base(std::vector<Segment> segments, const Rho& target) {
    for (auto& seg : segments) {
        if (seg.rho == target) continue;
        if (seg.rho.id == target.dual_id && target.id == seg.rho.dual_id)
            seg = Segment{target, -seg.y, -seg.x};
        else
            throw ValidationError("re_base: segment on " + seg.rho.id +
                                  " is not in the line pair of " + target.id);
    }
    std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
        return std::tuple(a.center2().twice, a.x.twice, a.rho.id) <
               std::tuple(b.center2().twice, b.x.twice, b.rho.id);
    });
    return segments;
}

const char* to_string(GroupKind g) { return g == GroupKind::SpEven ? "Sp" : "SO"; }

const char* to_string(LineClass c) {
    switch (c) {
        case LineClass::Good: return "good";
        case LineClass::Bad: return "bad";
        default: return "ugly";
    }
}

} // namespace zadual
