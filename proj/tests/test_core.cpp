#include "doctest.h"

#include "helpers.hpp"
#include "zadual/jantzen.hpp"
#include "zadual/parse.hpp"

using namespace zadual;
using namespace zadual::testing;

TEST_CASE("line classification") {
    GroupKind sp = GroupKind::SpEven, so = GroupKind::SOodd;
    CHECK(classify_line(rho(), ExpClass::Integral, sp) == LineClass::Good);
    CHECK(classify_line(rho(), ExpClass::HalfIntegral, sp) == LineClass::Bad);
    CHECK(classify_line(rho(), ExpClass::Integral, so) == LineClass::Bad);
    CHECK(classify_line(rho(), ExpClass::HalfIntegral, so) == LineClass::Good);
    CHECK(classify_line(rho_b(), ExpClass::Integral, sp) == LineClass::Bad);
    CHECK(classify_line(rho_b(), ExpClass::HalfIntegral, sp) == LineClass::Good);
    CHECK(classify_line(rho_u(), ExpClass::Ugly, so) == LineClass::Ugly);
    CHECK(classify_line(rho_u(), ExpClass::Ugly, sp) == LineClass::Ugly);
}

TEST_CASE("parse and format round-trip on canonical forms") {
    for (const char* text : {
             "pi(3+)",
             "pi(1+)",
             "L(D[0,-2],D[0,-1];pi(3+))",
             "L(D[1,-2];pi(1+,1+,3+))",
             "L(D[-2,-2],D[-1,-2],D[-1,-1];pi(1-,1-,1-,1-,3+))",
             "pi(1+,1+,3+,5-,5-)",
             "pi()*sig",
             "L(D[1,0]@u,D[2,1]@u;pi()*sig)",
         }) {
        LanglandsDatum d = sp(text);
        CHECK(str(d) == text);
        CHECK(parse_rep(str(d), table(), GroupKind::SpEven) == d);
        CHECK(parse_rep_json(format_rep_json(d), table()) == d);
    }
}

TEST_CASE("parse canonicalizes order and drops empty segments") {
    CHECK(str(sp("L(D[0,-1],D[0,-2];pi(3+))")) == "L(D[0,-2],D[0,-1];pi(3+))");
    CHECK(str(sp("L(D[-3,-2],D[0,-1];pi(3+))")) == "L(D[0,-1];pi(3+))");
    // multiplicity syntax on blocks expands in the canonical printing
    CHECK(str(sp("pi(1+^2,3+)")) == "pi(1+,1+,3+)");
    CHECK(sp("pi(1+^2,3+)") == sp("pi(1+,3+,1+)"));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(sp("L(D[0,-2];pi(3+)"), ValidationError);     // missing paren
    CHECK_THROWS_AS(sp("L(D[-2,0];pi(3+))"), ValidationError);    // x < y
    CHECK_THROWS_AS(sp("L(D[1/2,-1];pi(3+))"), ValidationError);  // mixed classes
    CHECK_THROWS_AS(sp("pi(3+@nope)"), ValidationError);          // undeclared rho
    CHECK_THROWS_AS(sp("pi(3-)"), ValidationError);               // sign product
    CHECK_THROWS_AS(sp("pi()"), ValidationError);                 // Sp parity
    CHECK_THROWS_AS(sp("L(D[0,-1]@u;pi(3+))"), ValidationError);  // ugly without sigma
    CHECK_THROWS_AS(sp("L(D[0,0];pi(3+))"), ValidationError);     // x+y = 0 on good line
}

TEST_CASE("validation accepts ugly segments with any center") {
    LanglandsDatum d = sp("L(D[2,1]@u,D[0,-1]@u;pi()*sig)");
    CHECK(rank(d) == 4);
}

TEST_CASE("re_base flips the contragredient side") {
    Segment s{rho_v(), HalfInt::whole(2), HalfInt::whole(1)};
    auto based = re_base({s}, rho_u());
    REQUIRE(based.size() == 1);
    CHECK(based[0] == Segment{rho_u(), HalfInt::whole(-1), HalfInt::whole(-2)});
    // already-based input is unchanged
    auto same = re_base(based, rho_u());
    CHECK(same == based);
    // round trip through the other side
    auto there = re_base(based, rho_v());
    auto back = re_base(there, rho_u());
    CHECK(back == based);
    // mixed list
    auto mixed = re_base({Segment{rho_u(), HalfInt::whole(0), HalfInt::whole(-1)},
                          Segment{rho_v(), HalfInt::whole(0), HalfInt::whole(0)}},
                         rho_u());
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0] == Segment{rho_u(), HalfInt::whole(0), HalfInt::whole(-1)});
    CHECK(mixed[1] == Segment{rho_u(), HalfInt::whole(0), HalfInt::whole(0)});
}

TEST_CASE("parse normalizes ugly segments onto the pair representative") {
    LanglandsDatum d = sp("L(D[2,1]@v;pi()*sig)");
    REQUIRE(d.segments.size() == 1);
    CHECK(d.segments[0] == Segment{rho_u(), HalfInt::whole(-1), HalfInt::whole(-2)});
}

TEST_CASE("rank via the dim phi formula") {
    CHECK(rank(sp("pi(1+,1+,3+,5-,5-)")) == 7);  // dim 15 = 2*7+1
    CHECK(rank(sp("pi(1+)")) == 0);
    CHECK(rank(sp("pi()*sig")) == 0);
    CHECK(rank(sp("L(D[0,-2],D[0,-1];pi(3+))")) == 6);
    CHECK(rank(so("pi()")) == 0);
    CHECK(rank(so("pi(2+)")) == 1);
    CHECK(rank(sp("pi()*sig2")) == 2);
}

TEST_CASE("jantzen split and merge invert each other") {
    RhoTable t;
    t.declare_rho(Rho{"rho", 1, SelfDualType::Orthogonal, "rho"});
    t.declare_rho(Rho{"b", 1, SelfDualType::Symplectic, "b"});
    t.declare_rho(Rho{"u", 1, SelfDualType::None, "v"});
    t.declare_sigma(SigmaInfo{"sig", 0});

    LanglandsDatum d = parse_rep(
        "L(D[0,-1]@rho,D[-1,-1]@b,D[1,0]@u;pi(1+@rho,3+@rho,1.@b^2)*sig)", t,
        GroupKind::SpEven);
    auto factors = jantzen_split(d);
    REQUIRE(factors.size() == 3);
    CHECK(factors[0].cls == LineClass::Good);
    CHECK(factors[0].datum ==
          parse_rep("L(D[0,-1]@rho;pi(1+@rho,3+@rho)*sig)", t, GroupKind::SpEven));
    CHECK(factors[1].cls == LineClass::Bad);
    CHECK(factors[1].datum ==
          parse_rep("L(D[-1,-1]@b;pi(1.@b^2)*sig)", t, GroupKind::SpEven));
    CHECK(factors[2].cls == LineClass::Ugly);
    CHECK(factors[2].datum == parse_rep("L(D[1,0]@u;pi()*sig)", t, GroupKind::SpEven));
    CHECK(jantzen_merge(factors) == d);
}

TEST_CASE("jantzen split on pure good data is the identity") {
    LanglandsDatum d = sp("L(D[0,-2],D[0,-1];pi(3+))");
    auto factors = jantzen_split(d);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].cls == LineClass::Good);
    CHECK(factors[0].datum == d);
    CHECK(jantzen_merge(factors) == d);
}

TEST_CASE("bad factor requires even multiplicity and no sign") {
    CHECK_THROWS_AS(sp_b("pi(1.@b)*sig"), ValidationError);   // odd multiplicity
    CHECK_THROWS_AS(sp_b("pi(1+@b^2)*sig"), ValidationError); // signed bad block
    CHECK(rank(sp_b("pi(1.@b^2)*sig")) == 1);
}

TEST_CASE("good factor parse on the good half-integral line") {
    // For Sp the symplectic line "b" is good on half-integral exponents.
    LanglandsDatum d = sp_b("L(D[-1/2,-1/2]@b;pi(2-@b^2)*sig)");
    CHECK(rank(d) == 3);
    CHECK(str_b(d) == "L(D[-1/2,-1/2];pi(2-,2-)*sig)");
    // a lone signed even-dim parameter needs the anchor to balance Sp parity
    CHECK_THROWS_AS(sp_b("pi(2-@b^2)"), ValidationError);
}

TEST_CASE("canonicalization is idempotent") {
    for (const char* text :
         {"L(D[0,-1],D[0,-2];pi(3+,1+^2))", "L(D[2,1]@v,D[0,-1]@u;pi()*sig)"}) {
        LanglandsDatum d = sp(text);
        LanglandsDatum twice = canonicalized(canonicalized(d));
        CHECK(twice == d);
        CHECK(str(parse_rep(str(d), table(), GroupKind::SpEven)) == str(d));
    }
}
