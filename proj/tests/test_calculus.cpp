#include "doctest.h"

#include "helpers.hpp"
#include "zadual/calculus.hpp"

using namespace zadual;
using namespace zadual::testing;

namespace {

Point at(int x2) { return Point{rho(), HalfInt(x2)}; }

} // namespace

TEST_CASE("negative-exponent derivatives and socles") {
    // L(|.|^{-2}; pi(3+)) at -2: k=1, pi(3+)
    DerivativeResult r = derivative_at(sp("L(D[-2,-2];pi(3+))"), at(-4));
    CHECK(r.k == 1);
    CHECK(str(r.value) == "pi(3+)");

    // socle inserts when nothing can merge
    CHECK(str(socle_at(sp("pi(1+)"), at(-2), 1)) == "L(D[-1,-1];pi(1+))");
    // two socle steps: merge then insert
    LanglandsDatum s2 = socle_at(sp("L(D[-2,-2];pi(1-,1-,1-,1-,3+))"), at(-2), 1);
    CHECK(str(s2) == "L(D[-1,-2];pi(1-,1-,1-,1-,3+))");
    LanglandsDatum s3 = socle_at(s2, at(-2), 1);
    CHECK(str(s3) == "L(D[-1,-2],D[-1,-1];pi(1-,1-,1-,1-,3+))");

    // absent point: k = 0, unchanged
    DerivativeResult r0 = derivative_at(sp("pi(3+)"), at(-2));
    CHECK(r0.k == 0);
    CHECK(r0.value == sp("pi(3+)"));
}

TEST_CASE("ugly derivatives work on both sides of the pair") {
    LanglandsDatum d = sp("L(D[1,1]@u;pi()*sig)");
    // on the stored side
    DerivativeResult r = derivative_at(d, Point{rho_u(), HalfInt::whole(1)});
    CHECK(r.k == 1);
    CHECK(str(r.value) == "pi()*sig");
    // mirrored side: D[1,1]@u is D[-1,-1]@v, nothing at v-exponent 1
    DerivativeResult rv = derivative_at(d, Point{rho_v(), HalfInt::whole(1)});
    CHECK(rv.k == 0);
    CHECK(derivative_at(d, Point{rho_v(), HalfInt::whole(-1)}).k == 1);
    // socle on the mirrored side inserts the flipped segment
    CHECK(str(socle_at(sp("pi()*sig"), Point{rho_v(), HalfInt::whole(-1)}, 1)) ==
          "L(D[1,1]@u;pi()*sig)");
}

TEST_CASE("positive good derivatives: worked chains") {
    // pi(1+,1+,3+,5-,5-) at 2: k=1 -> L(D[1,-2]; pi(1+,1+,3+))
    DerivativeResult r = derivative_at(sp("pi(1+,1+,3+,5-,5-)"), at(4));
    CHECK(r.k == 1);
    CHECK(str(r.value) == "L(D[1,-2];pi(1+,1+,3+))");

    // L(D[1,-2]; pi(1+,1+,3+)) at 1: k=2 -> L(D[0,-2]; pi(1+,1+,1+))
    DerivativeResult r2 = derivative_at(r.value, at(2));
    CHECK(r2.k == 2);
    CHECK(str(r2.value) == "L(D[0,-2];pi(1+,1+,1+))");

    // L(D[0,-2]; pi(1+,1+,1+)) at 2: k=1 -> L(D[0,-1]; pi(1+,1+,1+))
    DerivativeResult r3 = derivative_at(r2.value, at(4));
    CHECK(r3.k == 1);
    CHECK(str(r3.value) == "L(D[0,-1];pi(1+,1+,1+))");

    // right-hand chain
    DerivativeResult q = derivative_at(sp("pi(1-,1-,3+,5-,5-)"), at(4));
    CHECK(q.k == 1);
    CHECK(str(q.value) == "L(D[1,-2];pi(1-,1-,3+))");
    DerivativeResult q2 = derivative_at(q.value, at(2));
    CHECK(q2.k == 1);
    CHECK(str(q2.value) == "L(D[0,-2];pi(1-,1-,3+))");

    // reduced points of the golden example
    LanglandsDatum g = sp("L(D[0,-2],D[0,-1];pi(3+))");
    for (int x2 : {4, 2, -2, -4}) CHECK(derivative_at(g, at(x2)).k == 0);
}

TEST_CASE("positive good socles: worked chains") {
    CHECK(str(socle_at(sp("L(D[-1,-1];pi(1+))"), at(4), 1)) == "L(D[-1,-2];pi(1+))");
    CHECK(str(socle_at(sp("L(D[0,-1];pi(1+))"), at(4), 1)) == "L(D[0,-2];pi(1+))");
    CHECK(str(socle_at(sp("pi(1-,1-,3+)"), at(2), 1)) == "L(D[0,-1];pi(3+))");
    // socle inverse of the S_{|.|^{-1}}/S_{|.|^2} corner of the diagram
    CHECK(str(socle_at(sp("pi(1+)"), at(-2), 1)) == "L(D[-1,-1];pi(1+))");
}

TEST_CASE("bad-parity positive derivative") {
    // core shape: L(D[0,-1]^t; pi(...)) on the bad line with even blocks
    LanglandsDatum d = sp_b("L(D[0,-1]@b;pi(3.@b^2)*sig)");
    DerivativeResult r = derivative_at(d, Point{rho_b(), HalfInt::whole(1)});
    // t = 1 (kappa = 1), m = 2, m' = 0, no other segments: k = m + kappa = 3
    CHECK(r.k == 3);
    // v = |A^c_0| = 0 even: t' = 0, phi' = phi - S_3^2 + S_1^4
    CHECK(str_b(r.value) == "pi(1.,1.,1.,1.)*sig");
    // inverse law via socle steps
    LanglandsDatum back = socle_at(r.value, Point{rho_b(), HalfInt::whole(1)}, r.k);
    CHECK(back == d);
}

TEST_CASE("Delta[0,-1]-derivative (the golden example step)") {
    DerivativeResult r = derivative_delta01(sp("L(D[0,-2],D[0,-1];pi(3+))"), rho());
    CHECK(r.k == 2);
    CHECK(str(r.value) == "L(D[-2,-2];pi(3+))");

    DerivativeResult r2 = derivative_delta01(sp("L(D[0,-1];pi(1+,1+,1+))"), rho());
    CHECK(r2.k == 1);
    CHECK(str(r2.value) == "pi(1+,1+,1+)");

    DerivativeResult r3 = derivative_delta01(sp("L(D[0,-2];pi(1-,1-,3+))"), rho());
    CHECK(r3.k == 1);
    CHECK(str(r3.value) == "L(D[-2,-2];pi(1-,1-,3+))");

    // precondition: not reduced at z != 0
    CHECK_THROWS_AS(derivative_delta01(sp("L(D[-1,-1];pi(1+))"), rho()), ValidationError);
}

TEST_CASE("Z[0,1]-derivative") {
    // supercuspidal-like: already reduced
    DerivativeResult r0 = derivative_z01(sp("pi(1+)"), rho());
    CHECK(r0.k == 0);

    DerivativeResult r1 = derivative_z01(sp("pi(1-,1-,3+)"), rho());
    CHECK(r1.k == 1);
    CHECK(str(r1.value) == "pi(1+)");

    DerivativeResult r2 = derivative_z01(sp("pi(1-,1-,1-,1-,3+)"), rho());
    CHECK(r2.k == 1);
    CHECK(str(r2.value) == "pi(1+,1+,1+)");

    DerivativeResult r3 = derivative_z01(sp("L(D[0,-2];pi(1-,1-,3+))"), rho());
    CHECK(r3.k == 1);
    CHECK(str(r3.value) == "L(D[0,-2];pi(1+))");
}

TEST_CASE("Z[0,1]-socles: worked chains") {
    CHECK(str(socle_z01(sp("pi(1+)"), rho(), 1)) == "pi(1-,1-,3+)");
    CHECK(str(socle_z01(sp("pi(1+,1+,1+)"), rho(), 1)) == "pi(1-,1-,1-,1-,3+)");
    CHECK(str(socle_z01(sp("L(D[-1,-2];pi(1+))"), rho(), 2)) ==
          "L(D[0,-2],D[0,-1];pi(3+))");
    CHECK(str(socle_z01(sp("L(D[0,-2];pi(1+))"), rho(), 1)) ==
          "L(D[0,-2];pi(1-,1-,3+))");
}

TEST_CASE("irreducibility criterion") {
    // tempered: irreducible iff m_psi(rho x S_{2x-1}) = 0
    CHECK(irreducible_at(sp("pi(3+)"), at(4)) == false); // S_3 companion present
    CHECK(irreducible_at(sp("pi(3+)"), at(6)));          // m_psi(S_5) = 0
    CHECK(irreducible_at(sp("pi(1+)"), at(2)) == false); // S_1 present, l=1 branch
    CHECK(irreducible_at(sp("pi(1-,1-,3+)"), at(2)) == false);
    // the l = 0 branch eats the companion: m_psi(S_1) = 1 at x = 1
    CHECK(irreducible_at(sp("pi(1-,1-,3+)"), at(4)) == false); // m_psi(S_3) = 1
    CHECK(irreducible_at(sp("pi(1-,1-,3+)"), at(6)));
    // non-tempered examples: [0,-2] absorbs |.|^3 but not |.|^4
    CHECK(irreducible_at(sp("L(D[0,-2],D[0,-1];pi(3+))"), at(6)) == false);
    CHECK(irreducible_at(sp("L(D[0,-2],D[0,-1];pi(3+))"), at(8)));
}

TEST_CASE("rank bookkeeping on every operation") {
    LanglandsDatum d = sp("pi(1+,1+,3+,5-,5-)");
    int n = rank(d);
    DerivativeResult r = derivative_at(d, at(4));
    CHECK(rank(r.value) == n - r.k);
    LanglandsDatum s = socle_at(d, at(-2), 2);
    CHECK(rank(s) == n + 2);
}
