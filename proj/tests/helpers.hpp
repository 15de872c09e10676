#pragma once

#include <string>

#include "zadual/parse.hpp"
#include "zadual/types.hpp"

namespace zadual::testing {

// Standard declarations for the worked-example setting: one good integral
// line "rho" (orthogonal, dim 1), an ugly pair u/v and two anchors.
inline const RhoTable& table() {
    static RhoTable t = [] {
        RhoTable t2;
        t2.declare_rho(Rho{"rho", 1, SelfDualType::Orthogonal, "rho"});
        t2.declare_rho(Rho{"u", 1, SelfDualType::None, "v"});
        t2.declare_sigma(SigmaInfo{"sig", 0});
        t2.declare_sigma(SigmaInfo{"sig2", 2});
        return t2;
    }();
    return t;
}

// A symplectic line "b": bad on integral exponents for Sp, good for SO.
inline const RhoTable& table_b() {
    static RhoTable t = [] {
        RhoTable t2;
        t2.declare_rho(Rho{"b", 1, SelfDualType::Symplectic, "b"});
        t2.declare_sigma(SigmaInfo{"sig", 0});
        t2.declare_sigma(SigmaInfo{"sig1", 1});
        return t2;
    }();
    return t;
}

inline LanglandsDatum sp(const std::string& text) {
    return parse_rep(text, table(), GroupKind::SpEven);
}

inline LanglandsDatum so(const std::string& text) {
    return parse_rep(text, table(), GroupKind::SOodd);
}

// Bad-parity (for Sp) and half-integral good (for SO) data on the line "b".
inline LanglandsDatum sp_b(const std::string& text) {
    return parse_rep(text, table_b(), GroupKind::SpEven);
}

inline LanglandsDatum so_b(const std::string& text) {
    return parse_rep(text, table_b(), GroupKind::SOodd);
}

inline std::string str(const LanglandsDatum& d) { return format_rep(d, table()); }
inline std::string str_b(const LanglandsDatum& d) { return format_rep(d, table_b()); }

inline Rho rho() { return table().rho("rho"); }
inline Rho rho_b() { return table_b().rho("b"); }
inline Rho rho_u() { return table().rho("u"); }
inline Rho rho_v() { return table().rho("v"); }

} // namespace zadual::testing
