#pragma once

#include "zadual/types.hpp"

namespace zadual {

// A supercuspidal point rho|.|^x. For an ugly pair either label of the pair
// may be used; x = 0 on a self-dual label is rejected by the operations.
struct Point {
    Rho rho;
    HalfInt x;

    Point conj() const { return Point{rho.dual(), -x}; }

    bool operator==(const Point& o) const { return rho == o.rho && x == o.x; }
};

struct DerivativeResult {
    int k = 0;
    LanglandsDatum value;
};

// Highest rho|.|^x-derivative. Dispatches on the point: ugly line or
// self-dual with x < 0 (matching-function recipe), self-dual with x > 0
// (good- or bad-parity recipe with the A-parameter core).
DerivativeResult derivative_at(const LanglandsDatum& d, const Point& p);

// r-fold socle soc((rho|.|^x)^r x pi), computed by iterating the one-step
// case split of the dispatched recipe.
LanglandsDatum socle_at(const LanglandsDatum& d, const Point& p, int r);

// Highest Delta_rho[0,-1]-derivative of a datum that is rho|.|^z-reduced for
// all z != 0 on the lines of rho.
DerivativeResult derivative_delta01(const LanglandsDatum& d, const Rho& rho);

// Highest Z_rho[0,1]-derivative; requires rho|.|^1-reduced and
// rho|.|^z-reduced for all z < 0.
DerivativeResult derivative_z01(const LanglandsDatum& d, const Rho& rho);

// soc(Z_rho[0,1]^k x pi) for rho|.|^1-reduced pi.
LanglandsDatum socle_z01(const LanglandsDatum& d, const Rho& rho, int k);

// Irreducibility of rho|.|^x x pi for x > 0. Good parity evaluates the
// four-condition combinatorial criterion and cross-checks it against the
// socle comparison; bad parity uses the socle comparison alone.
bool irreducible_at(const LanglandsDatum& d, const Point& p);

// True when derivative_at(d, p).k == 0; for self-dual rho also checked on
// both signs of the exponent when scan_both is set.
bool is_reduced_at(const LanglandsDatum& d, const Point& p);

// All exponents worth probing on the lines of rho: segment endpoints x_i and
// -y_i plus block fringes (d +- 1)/2 with both signs, zero excluded on
// self-dual labels. Ordered by |x| descending, positive first.
std::vector<Point> candidate_points(const LanglandsDatum& d, bool reverse_order = false);

} // namespace zadual
