#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggl/euler.hpp"
#include "ggl/law.hpp"
#include "ggl/poly_parse.hpp"

#include <random>

using namespace ggl;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();
const Ring F2 = Ring::prime_field(2);
const Ring F5 = Ring::prime_field(5);

LaurentPoly P(const std::string& s, const GlobalLaw& law, const GroupSpec& g) {
    ValueRing vr = law.value(g);
    return parse_poly(s, vr.coeff(), vr.vars());
}

GroupHom torus_hom(int src, int tgt, std::vector<std::vector<long long>> m) {
    return GroupHom{GroupSpec::torus(src), GroupSpec::torus(tgt), std::move(m)};
}

}  // namespace

TEST_CASE("multiplicative law Euler classes") {
    auto law = multiplicative_law(Z);
    CHECK(law->family() == Family::Tori);
    // coordinate is t - 1 and restricts to 0 at the trivial group
    LawElement e = law->coordinate();
    CHECK(e.payload == P("t - 1", *law, GroupSpec::torus(1)));
    CHECK(law->is_zero(law->restrict_to_trivial(e)));

    CHECK(euler_class(*law, Character{3}).payload == P("t^3 - 1", *law, GroupSpec::torus(1)));
    CHECK(euler_class(*law, Character{0}).payload.is_zero());
    CHECK(euler_class(*law, Character{1, -1}).payload ==
          P("t1*t2^-1 - 1", *law, GroupSpec::torus(2)));
}

TEST_CASE("additive law Euler classes") {
    auto law = additive_law(Z);
    CHECK(euler_class(*law, Character{2, -3}).payload ==
          P("2*e1 - 3*e2", *law, GroupSpec::torus(2)));
    CHECK(euler_class(*law, Character{0, 0}).payload.is_zero());
    auto law5 = additive_law(F5);
    CHECK(euler_class(*law5, Character{5}).payload.is_zero());
    CHECK(law5->is_zero(law5->restrict_to_trivial(law5->coordinate())));
}

TEST_CASE("two-torsion additive law") {
    auto law = two_torsion_additive_law();
    CHECK(law->family() == Family::Elem2);
    CHECK(law->ground() == F2);
    GroupSpec c22 = GroupSpec::elem2(2);
    CHECK(euler_class(*law, Character{1, 1}).payload == P("e1 + e2", *law, c22));
    CHECK(euler_class(*law, Character{0, 0, 0}).payload.is_zero());
    // swap of C2 x C2 sends e1 to e2
    GroupHom swap{c22, c22, {{0, 1}, {1, 0}}};
    LawElement e1(c22, P("e1", *law, c22));
    CHECK(law->restrict_along(swap, e1).payload == P("e2", *law, c22));
    CHECK(euler_class(*law, Character{1, 0, 1}).payload ==
          P("e1 + e3", *law, GroupSpec::elem2(3)));
    CHECK(law->is_zero(law->restrict_to_trivial(law->coordinate())));
}

TEST_CASE("from_fgl laws") {
    // multiplicative F: value at C_n carries the relation (1+x)^n - 1
    auto fm = TruncatedFGL::multiplicative(Z, 6);
    auto law = from_fgl(fm, 6);
    GroupSpec c3 = GroupSpec::quotient(1, {Character{3}});
    ValueRing v3 = law->value(c3);
    REQUIRE(v3.relations().size() == 1);
    // (1+x)^3 - 1 = 3x + 3x^2 + x^3
    CHECK(v3.relations()[0] == parse_poly("3*x + 3*x^2 + x^3", Z, {"x"}));
    // and the reduction uses it: x^3 = -3x - 3x^2 ... normal forms are canonical
    CHECK(v3.is_zero(v3.relations()[0]));

    // additive F over Q: restriction along (n) multiplies the coordinate by n
    auto fa = TruncatedFGL::additive(Q, 6);
    auto adl = from_fgl(fa, 6);
    LawElement en = euler_class(*adl, Character{5});
    CHECK(en.payload == parse_poly("5*x", Q, {"x"}));

    // F with a_11 = a: m^* of the coordinate is x + y + a x y through degree 2
    TruncatedFGL f(Q, 5);
    f.set(1, 1, Rat(7));
    auto fl = from_fgl(f, 5);
    GroupHom m = torus_hom(2, 1, {{1, 1}});
    LawElement img = fl->restrict_along(m, fl->coordinate());
    LaurentPoly expect = parse_poly("x1 + x2 + 7*x1*x2", Q, {"x1", "x2"});
    CHECK(img.payload.truncated(3) == expect);

    CHECK(fl->is_zero(fl->restrict_to_trivial(fl->coordinate())));

    // invalid coefficient tables are rejected
    TruncatedFGL bad(Q, 5);
    bad.set(1, 2, Rat(1));  // missing the symmetric partner
    CHECK_THROWS(from_fgl(bad, 5));
}

TEST_CASE("base change") {
    auto mz = multiplicative_law(Z);
    auto m2 = base_change(*mz, F2);
    CHECK(m2->coordinate().payload == parse_poly("t + 1", F2, {"t"}));
    CHECK_NOTHROW(base_change(*additive_law(Z), Q));
    CHECK_THROWS(base_change(*additive_law(Q), F5));

    // freshman's dream: over F_p, e_p = t^p - 1 = (t - 1)^p
    auto m5 = base_change(*mz, F5);
    LawElement e5 = euler_class(*m5, Character{5});
    LaurentPoly tm1 = parse_poly("t - 1", F5, {"t"});
    CHECK(e5.payload == pow(tm1, 5));
}

TEST_CASE("kan values") {
    auto law = multiplicative_law(Z);
    for (long long n = 2; n <= 6; ++n) {
        GroupSpec cn = GroupSpec::quotient(1, {Character{n}});
        ValueRing vr = kan_value(*law, cn);
        REQUIRE(vr.relations().size() == 1);
        LaurentPoly rel(Z, 1);
        rel.add_term({(int)n}, 1);
        rel.add_term({0}, -1);
        CHECK(vr.relations()[0] == rel);
        // normal forms: t^{n+1} = t, t^{-1} = t^{n-1}
        CHECK(vr.reduce(LaurentPoly::monomial(Z, 1, {(int)n + 1})) ==
              LaurentPoly::monomial(Z, 1, {1}));
        CHECK(vr.reduce(LaurentPoly::monomial(Z, 1, {-1})) ==
              LaurentPoly::monomial(Z, 1, {(int)n - 1}));
    }

    // empty kernel list gives back the torus value
    CHECK(GroupSpec::quotient(2, {}) == GroupSpec::torus(2));

    // additive law at C_2 is Z[e]/(2e)
    auto add = additive_law(Z);
    GroupSpec c2 = GroupSpec::quotient(1, {Character{2}});
    ValueRing vr = kan_value(*add, c2);
    CHECK(vr.is_zero(parse_poly("2*e", Z, {"e"})));
    CHECK(vr.reduce(parse_poly("3*e", Z, {"e"})) == parse_poly("e", Z, {"e"}));
    CHECK(vr.reduce(parse_poly("4*e^2 + 5", Z, {"e"})) == parse_poly("5", Z, {"e"}));
    CHECK(!vr.is_zero(parse_poly("e", Z, {"e"})));
}

TEST_CASE("kan restriction through two lifts agrees") {
    auto law = multiplicative_law(Z);
    for (long long n = 2; n <= 12; ++n) {
        GroupSpec cn = GroupSpec::quotient(1, {Character{n}});
        // identity of C_n lifted as t -> t and as t -> t^{n+1}
        GroupHom lift1{cn, cn, {{1}}};
        GroupHom lift2{cn, cn, {{n + 1}}};
        LawElement x(cn, LaurentPoly::monomial(Z, 1, {1}, Rat(3)) +
                             LaurentPoly::monomial(Z, 1, {(int)n - 1}));
        LawElement r1 = kan_restrict(*law, lift1, x);
        LawElement r2 = kan_restrict(*law, lift2, x);
        CHECK(law->equal(r1, r2));
    }
}

TEST_CASE("restriction is functorial on random elements") {
    std::mt19937_64 rng(160914);
    std::uniform_int_distribution<long long> d(-3, 3);
    std::uniform_int_distribution<int> expd(-2, 2);
    auto mult = multiplicative_law(Z);
    auto add = additive_law(Q);
    for (int round = 0; round < 25; ++round) {
        GroupHom alpha = torus_hom(3, 2, {{d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng)}});
        GroupHom beta = torus_hom(2, 3, {{d(rng), d(rng)}, {d(rng), d(rng)}, {d(rng), d(rng)}});
        // element at alpha.target = T^2
        LaurentPoly p(Z, 2);
        for (int t = 0; t < 4; ++t) p.add_term({expd(rng), expd(rng)}, Rat(d(rng)));
        LawElement x(GroupSpec::torus(2), p);
        LawElement two_step = mult->restrict_along(beta, mult->restrict_along(alpha, x));
        LawElement once = mult->restrict_along(compose(alpha, beta), x);
        CHECK(mult->equal(two_step, once));

        // additive: polynomial payloads
        LaurentPoly q(Q, 2);
        for (int t = 0; t < 4; ++t) q.add_term({std::abs(expd(rng)), std::abs(expd(rng))}, Rat(d(rng)));
        LawElement y(GroupSpec::torus(2), q);
        CHECK(add->equal(add->restrict_along(beta, add->restrict_along(alpha, y)),
                         add->restrict_along(compose(alpha, beta), y)));
    }

    // quotient sources: restrict from C_12 to C_4 through compatible maps
    GroupSpec c12 = GroupSpec::quotient(1, {Character{12}});
    GroupSpec c4 = GroupSpec::quotient(1, {Character{4}});
    GroupHom incl{c4, c12, {{3}}};   // t -> t^3
    GroupHom id12{c12, c12, {{13}}};  // identity through another lift
    for (int k = 0; k < 8; ++k) {
        LawElement x(c12, LaurentPoly::monomial(Z, 1, {k}));
        LawElement a = mult->restrict_along(incl, mult->restrict_along(id12, x));
        LawElement b = mult->restrict_along(compose(id12, incl), x);
        CHECK(mult->equal(a, b));
    }
}

TEST_CASE("two torus maps agreeing on a subgroup differ by the Euler ideal") {
    // Lemma-style check for the multiplicative law: if f = g on B = ker of the
    // lattice spanned by W's, then f^* - g^* lands in (e_V : V|_B = 0)
    std::mt19937_64 rng(52634);
    std::uniform_int_distribution<long long> d(-2, 2);
    auto mult = multiplicative_law(Z);
    for (int round = 0; round < 20; ++round) {
        // B = ker(W) in T^2 for one lattice character W
        Character w{d(rng), d(rng)};
        if (w.is_zero()) continue;
        GroupSpec b = GroupSpec::quotient(2, {w});
        // f, g: T^2 -> T^2 with rows differing by multiples of W
        std::vector<std::vector<long long>> mf = {{d(rng), d(rng)}, {d(rng), d(rng)}};
        long long c1 = d(rng), c2 = d(rng);
        std::vector<std::vector<long long>> mg = {{mf[0][0] + c1 * w.e[0], mf[0][1] + c1 * w.e[1]},
                                                  {mf[1][0] + c2 * w.e[0], mf[1][1] + c2 * w.e[1]}};
        GroupHom f = torus_hom(2, 2, mf), g = torus_hom(2, 2, mg);
        LaurentPoly p(Z, 2);
        std::uniform_int_distribution<int> expd(-2, 2);
        for (int t = 0; t < 3; ++t) p.add_term({expd(rng), expd(rng)}, Rat(d(rng)));
        LawElement x(GroupSpec::torus(2), p);
        LaurentPoly diff =
            mult->restrict_along(f, x).payload - mult->restrict_along(g, x).payload;
        // membership in the ideal = vanishing in the value ring at B
        CHECK(mult->value(b).is_zero(diff));
    }
}

TEST_CASE("coordinate change by a unit") {
    auto mult = multiplicative_law(Z);
    LaurentPoly tinv = LaurentPoly::monomial(Z, 1, {-1});
    auto changed = change_coordinate(*mult, tinv);
    // e' = t^{-1}(t - 1) = 1 - t^{-1}
    LaurentPoly expect(Z, 1);
    expect.add_term({0}, 1);
    expect.add_term({-1}, -1);
    CHECK(changed->coordinate().payload == expect);
    // still restricts to 0 at the trivial group
    CHECK(changed->is_zero(changed->restrict_to_trivial(changed->coordinate())));
    // Euler classes differ from the old ones by units: e'_2 / e_2 = t^{-2}
    LawElement e2new = euler_class(*changed, Character{2});
    LawElement e2old = euler_class(*mult, Character{2});
    CHECK(e2new.payload == e2old.payload.shifted({-2}));

    // lambda = 1 is the identity change
    auto same = change_coordinate(*mult, LaurentPoly::constant(Z, 1, 1));
    CHECK(same->coordinate().payload == mult->coordinate().payload);

    // -t restricts to -1, not 1
    CHECK_THROWS(change_coordinate(*mult, LaurentPoly::monomial(Z, 1, {1}, Rat(-1))));
    // t - 1 is not a unit
    CHECK_THROWS(change_coordinate(*mult, mult->coordinate().payload));
}

TEST_CASE("value ring unit tests in finite quotients") {
    auto mult = multiplicative_law(Z);
    GroupSpec c6 = GroupSpec::quotient(1, {Character{6}});
    ValueRing vr = mult->value(c6);
    LaurentPoly t = LaurentPoly::monomial(Z, 1, {1});
    CHECK(vr.try_is_unit(t) == true);
    CHECK(vr.invert_unit(t) == LaurentPoly::monomial(Z, 1, {5}));
    LaurentPoly onept = LaurentPoly::constant(Z, 1, 1) + t;
    // 1 + t vanishes at t = -1, a 6th root of unity; not a unit
    CHECK(vr.try_is_unit(onept) == false);
}
