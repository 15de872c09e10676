#include "zadual/arthur.hpp"

#include <algorithm>
#include <map>

namespace zadual {

namespace {

// eta(rho x S_{2x-1}) with the formal convention eta(rho x S_0) = +1.
Sign sign_minus_of(const AParamForm& a) {
    if (a.half_case()) return Sign::Plus;
    return a.phi.sign_of(a.rho, a.d_minus());
}

Sign signed_product(const TemperedData& temp) {
    Sign p = Sign::Plus;
    for (const auto& b : temp.blocks)
        if (b.sign != Sign::Unset) p = sign_mul(p, sign_pow(b.sign, b.mult));
    return p;
}

// Value of eta on the S_{2x} x S_2 block: pinned by the companion blocks
// when they are present in phi, otherwise the stored value (set when the
// form was built from the removed S_{2x-1} sign).
Sign resolve_s2_sign(const AParamForm& a) {
    if (a.l == 1) return Sign::Plus;
    if (a.half_case()) return Sign::Minus;
    if (a.phi.has_block(a.rho, a.d_minus())) return a.phi.sign_of(a.rho, a.d_minus());
    if (a.phi.has_block(a.rho, a.d_plus()))
        return sign_mul(parity_sign(a.t), a.phi.sign_of(a.rho, a.d_plus()));
    return a.s2_sign;
}

void check_mm_compat(const AParamForm& a) {
    if (m_of(a) == 0 || mprime_of(a) == 0) return;
    Sign sp = a.phi.sign_of(a.rho, a.d_plus());
    if (sign_mul(sign_minus_of(a), sp) != parity_sign(a.t))
        throw ValidationError("eta(S_{2x-1})eta(S_{2x+1}) != (-1)^t with mm' != 0");
}

} // namespace

int m_of(const AParamForm& a) { return a.phi.mult_of(a.rho, a.d_plus()); }

int mprime_of(const AParamForm& a) {
    if (a.half_case()) return 1;
    return a.phi.mult_of(a.rho, a.d_minus());
}

void validate_aparam(const AParamForm& a) {
    if (a.x.twice <= 0) throw ValidationError("aparam: x must be positive");
    if (!a.rho.is_self_dual()) throw ValidationError("aparam: rho must be self-dual");
    if (a.s < 0 || a.t < 0) throw ValidationError("aparam: negative s or t");
    if (a.l != 0 && a.l != 1) throw ValidationError("aparam: l must be 0 or 1");
    if (a.l == 0 && a.t == 0) throw ValidationError("aparam: l = 0 needs t >= 1");
    if (a.half_case() && a.s != 0) throw ValidationError("aparam: s must be 0 when x = 1/2");
    for (const auto& b : a.phi.blocks) {
        if (b.rho == a.rho && b.sign != Sign::Unset && (b.d - a.d_plus()) % 2 != 0)
            throw ValidationError("aparam: phi block off the line of x");
    }
    // z_phi constraint: trivial for l = 1, (-1)^t for l = 0; the S_{2x} x S_2
    // copies contribute s2_sign^t.
    Sign want = a.l == 1 ? Sign::Plus : parity_sign(a.t);
    if (signed_product(a.phi) != want)
        throw ValidationError("aparam: eta(z_phi) inconsistent with l");
    if (a.l == 0 && resolve_s2_sign(a) != a.s2_sign)
        throw ValidationError("aparam: stored S_{2x} x S_2 sign contradicts hat{S}_{psi,0}");
    if (a.l == 1 && a.s2_sign != Sign::Plus)
        throw ValidationError("aparam: l = 1 forces the S_{2x} x S_2 sign to +");
}

AParamForm to_aparam(const LanglandsDatum& core, const Rho& rho, HalfInt x) {
    AParamForm a;
    a.group = core.group;
    a.rho = rho;
    a.x = x;
    a.s = 0;
    int t = 0;
    for (const auto& seg : core.segments) {
        if (seg.rho == rho && seg.x == x - 1 && seg.y == -x)
            ++t;
        else
            throw ValidationError("to_aparam: core has a segment other than D[x-1,-x]");
    }
    a.phi = core.temp;

    int dp = a.d_plus(), dm = a.d_minus();
    int m_raw = a.phi.mult_of(rho, dp);
    int mp_raw = a.half_case() ? 1 : a.phi.mult_of(rho, dm);
    Sign sminus = a.half_case() ? Sign::Plus : a.phi.sign_of(rho, dm);

    if (m_raw > 0 && mp_raw > 0 &&
        sign_mul(a.phi.sign_of(rho, dp), sminus) == parity_sign(t + 1)) {
        a.phi.remove_block(rho, dp, 1);
        if (!a.half_case()) a.phi.remove_block(rho, dm, 1);
        a.t = t + 1;
        a.l = 0;
        a.s2_sign = a.half_case() ? Sign::Minus : sminus;
    } else {
        a.t = t;
        a.l = 1;
        a.s2_sign = Sign::Plus;
    }
    validate_aparam(a);
    return a;
}

LanglandsDatum from_aparam(const AParamForm& a) {
    validate_aparam(a);
    LanglandsDatum d;
    d.group = a.group;
    int delta_copies = a.l == 1 ? a.t : a.t - 1;
    for (int i = 0; i < a.s; ++i) d.segments.push_back(Segment{a.rho, -a.x, -a.x});
    for (int i = 0; i < delta_copies; ++i)
        d.segments.push_back(Segment{a.rho, a.x - 1, -a.x});
    d.temp = a.phi;
    if (a.l == 0) {
        if (a.half_case()) {
            d.temp.add_block(a.rho, 2, 1, parity_sign(a.t));
        } else {
            d.temp.add_block(a.rho, a.d_minus(), 1, a.s2_sign);
            d.temp.add_block(a.rho, a.d_plus(), 1, sign_mul(parity_sign(a.t), a.s2_sign));
        }
    }
    canonicalize(d);
    validate(d);
    return d;
}

void require_special_hypothesis(const AParamForm& a) { check_mm_compat(a); }

AParamForm move_blocks_down(const AParamForm& a, int count) {
    if (count == 0) return a;
    if (count > m_of(a)) throw InternalError("move_blocks_down: count exceeds m");
    AParamForm out = a;
    Sign sp = a.phi.sign_of(a.rho, a.d_plus());
    out.phi.remove_block(a.rho, a.d_plus(), count);
    if (!a.half_case())
        out.phi.add_block(a.rho, a.d_minus(), count, sign_mul(parity_sign(a.t), sp));
    out.l = (a.l + count) % 2;
    if (out.t == 0) out.l = 1;
    out.s2_sign = resolve_s2_sign(out);
    validate_aparam(out);
    return out;
}

DerSpecialResult der_special(const AParamForm& a) {
    validate_aparam(a);
    check_mm_compat(a);
    int m = m_of(a), mp = mprime_of(a);

    DerSpecialResult res;
    res.k = m + std::max(a.s - mp, 0);
    res.value = move_blocks_down(a, m);
    res.value.s = std::min(a.s, mp);
    return res;
}

AParamForm soc_special(const AParamForm& a) {
    validate_aparam(a);
    check_mm_compat(a);
    int mp = mprime_of(a);

    AParamForm out = a;
    if (a.s < mp) {
        if (a.half_case()) {
            out.phi.add_block(a.rho, 2, 1, parity_sign(a.t));
        } else {
            Sign sm = a.phi.sign_of(a.rho, a.d_minus());
            out.phi.remove_block(a.rho, a.d_minus(), 1);
            out.phi.add_block(a.rho, a.d_plus(), 1, sign_mul(parity_sign(a.t), sm));
        }
        out.l = (a.l + 1) % 2;
        if (out.t == 0) out.l = 1;
    } else {
        out.s = a.s + 1;
    }
    out.s2_sign = resolve_s2_sign(out);
    validate_aparam(out);
    return out;
}

bool check_star(const TemperedData& temp) {
    for (const auto& b : temp.blocks) {
        if (b.sign == Sign::Unset || b.d < 2) continue;
        if (b.mult != 1) return false;
        if (b.d == 2) {
            // formal companion S_0 with eta(S_0) = +1
            if (b.sign != Sign::Minus) return false;
        } else {
            Sign companion = temp.sign_of(b.rho, b.d - 2);
            if (companion == Sign::Unset || companion == b.sign) return false;
        }
    }
    return true;
}

LanglandsDatum dual_tempered(const LanglandsDatum& d) {
    if (!d.is_tempered()) throw ValidationError("dual_tempered: datum is not tempered");
    for (const auto& b : d.temp.blocks)
        if (b.sign == Sign::Unset)
            throw ValidationError("dual_tempered: bad-parity blocks not supported here");
    if (!check_star(d.temp)) throw ValidationError("dual_tempered: condition (*) fails");

    // Labels with positive even multiplicity at S_1, with the largest block
    // exponent of each.
    std::map<std::string, std::pair<Rho, int>> even_labels; // id -> (rho, max d)
    for (const auto& b : d.temp.blocks) {
        if (b.d == 1 && b.mult % 2 == 0) {
            auto& entry = even_labels[b.rho.id];
            entry.first = b.rho;
            entry.second = std::max(entry.second, 1);
        }
    }
    for (const auto& b : d.temp.blocks) {
        auto it = even_labels.find(b.rho.id);
        if (it != even_labels.end()) it->second.second = std::max(it->second.second, b.d);
    }

    LanglandsDatum out;
    out.group = d.group;
    out.temp = d.temp;
    for (const auto& [id, entry] : even_labels) {
        const auto& [rho, dmax] = entry;
        if (dmax > 1) {
            out.segments.push_back(Segment{rho, HalfInt::whole(0), -HalfInt(dmax - 1)});
            out.temp.remove_block(rho, 1, 1);
            out.temp.remove_block(rho, dmax, 1);
        }
    }
    for (auto& b : out.temp.blocks)
        if (even_labels.count(b.rho.id)) b.sign = flip(b.sign);
    canonicalize(out);
    validate(out);
    return out;
}

} // namespace zadual
