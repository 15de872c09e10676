#include "zadual/duality.hpp"

#include <algorithm>

#include "zadual/arthur.hpp"
#include "zadual/jantzen.hpp"

namespace zadual {

std::string step_name(const TraceStep& s) {
    switch (s.kind) {
        case StepKind::DerivativeRho:
            return "D{|.|^" + s.x.str() + "}^(" + std::to_string(s.k) + ")";
        case StepKind::SocleRho:
            return "S{|.|^" + s.x.str() + "}^(" + std::to_string(s.k) + ")";
        case StepKind::DerivativeD01:
            return "D{D[0,-1]}^(" + std::to_string(s.k) + ")";
        case StepKind::SocleZ01:
            return "S{Z[0,1]}^(" + std::to_string(s.k) + ")";
        case StepKind::DualTempered:
            return "dual_tempered";
        case StepKind::FixedPoint:
            return "fixed";
    }
    return "?";
}

std::optional<std::pair<Point, int>> find_candidate(const LanglandsDatum& d,
                                                    const DualOptions& opts) {
    for (const auto& p : candidate_points(d, opts.reverse_scan)) {
        int k = derivative_at(d, p).k;
        if (k >= 1) return std::make_pair(p, k);
    }
    return std::nullopt;
}

namespace {

// Smallest self-dual label carrying a segment (largest under the reversed
// scan); its Delta[0,-1]-derivative is nonzero once no rho|.|^z candidate
// remains.
std::optional<Rho> delta01_label(const LanglandsDatum& d, bool reverse) {
    std::optional<Rho> best;
    for (const auto& seg : d.segments) {
        if (!seg.rho.is_self_dual()) continue;
        if (!best || (reverse ? seg.rho.id > best->id : seg.rho.id < best->id))
            best = seg.rho;
    }
    return best;
}

bool bad_tempered_is_fixed(const LanglandsDatum& d) {
    for (const auto& b : d.temp.blocks)
        if (b.sign == Sign::Unset && b.d != 1) return false;
    return true;
}

} // namespace

LanglandsDatum dual_factor(const Factor& f, DualTrace& trace, int factor_index,
                           const DualOptions& opts) {
    const LanglandsDatum& d = f.datum;
    validate(d);
    int n = rank(d);

    if (auto cand = find_candidate(d, opts)) {
        auto [p, k] = *cand;
        DerivativeResult der = derivative_at(d, p);
        if (rank(der.value) >= n) throw InternalError("derivative did not decrease rank");
        trace.steps.push_back(TraceStep{factor_index, StepKind::DerivativeRho, p.rho.id, p.x,
                                        k, d, der.value});
        Factor sub{f.cls, f.line, der.value};
        LanglandsDatum rec = dual_factor(sub, trace, factor_index, opts);
        Point q = p.conj();
        LanglandsDatum out = socle_at(rec, q, k);
        trace.steps.push_back(
            TraceStep{factor_index, StepKind::SocleRho, q.rho.id, q.x, k, rec, out});
        return out;
    }

    if (!d.is_tempered()) {
        auto rho = delta01_label(d, opts.reverse_scan);
        if (!rho)
            throw InternalError("non-tempered reduced factor without a self-dual line");
        DerivativeResult der = derivative_delta01(d, *rho);
        if (rank(der.value) >= n) throw InternalError("derivative did not decrease rank");
        trace.steps.push_back(TraceStep{factor_index, StepKind::DerivativeD01, rho->id,
                                        HalfInt::whole(0), der.k, d, der.value});
        Factor sub{f.cls, f.line, der.value};
        LanglandsDatum rec = dual_factor(sub, trace, factor_index, opts);
        LanglandsDatum out = socle_z01(rec, *rho, der.k);
        trace.steps.push_back(TraceStep{factor_index, StepKind::SocleZ01, rho->id,
                                        HalfInt::whole(0), der.k, rec, out});
        return out;
    }

    // Tempered base cases.
    switch (f.cls) {
        case LineClass::Good: {
            if (!check_star(d.temp))
                throw InternalError("reduced tempered datum violates condition (*)");
            LanglandsDatum out = dual_tempered(d);
            trace.steps.push_back(TraceStep{factor_index,
                                            out == d ? StepKind::FixedPoint
                                                     : StepKind::DualTempered,
                                            "", HalfInt::whole(0), 0, d, out});
            return out;
        }
        case LineClass::Bad:
            if (!bad_tempered_is_fixed(d))
                throw InternalError("reduced bad tempered datum has blocks beyond S_1");
            [[fallthrough]];
        case LineClass::Ugly:
            trace.steps.push_back(TraceStep{factor_index, StepKind::FixedPoint, "",
                                            HalfInt::whole(0), 0, d, d});
            return d;
    }
    throw InternalError("unreachable factor class");
}

std::pair<LanglandsDatum, DualTrace> dual(const LanglandsDatum& d, const DualOptions& opts) {
    LanglandsDatum input = canonicalized(d);
    validate(input);

    DualTrace trace;
    std::vector<Factor> factors = jantzen_split(input);
    std::vector<Factor> duals;
    duals.reserve(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        LanglandsDatum fd =
            dual_factor(factors[i], trace, static_cast<int>(i), opts);
        duals.push_back(Factor{factors[i].cls, factors[i].line, std::move(fd)});
    }
    LanglandsDatum out = jantzen_merge(duals);
    if (rank(out) != rank(input)) throw InternalError("dual changed the rank");
    return {out, trace};
}

} // namespace zadual
