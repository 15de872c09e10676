#pragma once

#include "zadual/types.hpp"

namespace zadual {

// Normal form soc((rho|.|^{-x})^s x pi(psi, l, eta)) for the two-shape family
// psi = phi + (rho x S_{2x} x S_2)^t of good parity. The signs of eta live on
// the blocks of phi; s2_sign is the value of eta on the S_{2x} x S_2 block
// (always Plus when l = 1).
struct AParamForm {
    GroupKind group = GroupKind::SpEven;
    Rho rho;
    HalfInt x;       // > 0; s must be 0 when x = 1/2
    int s = 0;       // prefix copies of rho|.|^{-x}
    int t = 0;       // multiplicity of rho x S_{2x} x S_2
    int l = 1;       // 0 or 1; forced to 1 when t = 0
    Sign s2_sign = Sign::Plus;
    TemperedData phi;

    int d_plus() const { return x.twice + 1; }   // 2x+1
    int d_minus() const { return x.twice - 1; }  // 2x-1 (0 at x = 1/2)
    bool half_case() const { return x.twice == 1; }

    bool operator==(const AParamForm& o) const {
        return group == o.group && rho == o.rho && x == o.x && s == o.s && t == o.t &&
               l == o.l && s2_sign == o.s2_sign && phi == o.phi;
    }
};

// m_psi(rho x S_{2x+1}) and m_psi(rho x S_{2x-1}); the latter is formally 1
// when x = 1/2.
int m_of(const AParamForm& a);
int mprime_of(const AParamForm& a);

void validate_aparam(const AParamForm& a);

// Reads L(Delta_rho[x-1,-x]^t; pi(phi, eta)) into the (psi, l, eta) form,
// choosing l by the presence/sign test on the S_{2x+1}, S_{2x-1} companions.
AParamForm to_aparam(const LanglandsDatum& core, const Rho& rho, HalfInt x);

// Langlands datum of soc((rho|.|^{-x})^s x pi(psi, l, eta)).
LanglandsDatum from_aparam(const AParamForm& a);

struct DerSpecialResult {
    int k = 0;
    AParamForm value;
};

// Checks the eta hypothesis of the derivative formulas:
// eta(S_{2x-1})eta(S_{2x+1}) = (-1)^t whenever mm' != 0.
void require_special_hypothesis(const AParamForm& a);

// Replaces count copies of rho x S_{2x+1} by rho x S_{2x-1} and shifts l,
// extending eta by eta(S_{2x-1}) = (-1)^t eta(S_{2x+1}); count <= m.
AParamForm move_blocks_down(const AParamForm& a, int count);

// Highest rho|.|^x-derivative of the normal form.
DerSpecialResult der_special(const AParamForm& a);

// One-step rho|.|^x-socle; satisfies der_special(soc_special(a)).k == k + 1.
AParamForm soc_special(const AParamForm& a);

// Condition (*) on a tempered pi(phi, eta): every block with d >= 2 has
// multiplicity one, its S_{d-2} companion present (formally for d = 2) and
// alternating sign.
bool check_star(const TemperedData& temp);

// Zelevinsky-Aubert dual of a tempered good-parity pi(phi, eta) satisfying
// condition (*).
LanglandsDatum dual_tempered(const LanglandsDatum& d);

} // namespace zadual
