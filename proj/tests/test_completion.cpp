#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggl/flag.hpp"
#include "ggl/lazard.hpp"
#include "ggl/poly_parse.hpp"

#include <random>

using namespace ggl;

namespace {
const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

TruncatedFGL random_log_fgl(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rat> tail;
    for (int k = 2; k <= degree; ++k) tail.push_back(Rat(num(rng), den(rng)));
    return TruncatedFGL::from_log(tail, degree);
}

}  // namespace

TEST_CASE("flag expansion at the trivial group") {
    auto mult = multiplicative_law(Z);
    GroupSpec one = GroupSpec::trivial();
    Flag flag = default_flag(one, 3);  // (eps, eps, eps)
    GroupSpec t1 = times_circle(one);

    LawElement t(t1, parse_poly("t", Z, {"t"}));
    auto e = flag_expand(*mult, one, flag, t);
    CHECK(e.coeffs[0].payload == LaurentPoly::constant(Z, 0, 1));
    CHECK(e.coeffs[1].payload == LaurentPoly::constant(Z, 0, 1));
    CHECK(e.coeffs[2].payload.is_zero());
    CHECK(e.remainder.payload.is_zero());

    LawElement tinv(t1, parse_poly("t^-1", Z, {"t"}));
    auto e2 = flag_expand(*mult, one, flag, tinv);
    CHECK(e2.coeffs[0].payload == LaurentPoly::constant(Z, 0, 1));
    CHECK(e2.coeffs[1].payload == LaurentPoly::constant(Z, 0, -1));
    CHECK(e2.coeffs[2].payload == LaurentPoly::constant(Z, 0, 1));

    // round trip: reassemble and re-expand
    auto back = reassemble(*mult, e2);
    CHECK(mult->equal(back, tinv));
    auto e3 = flag_expand(*mult, one, flag, back);
    for (int i = 0; i < 3; ++i) CHECK(mult->equal(e3.coeffs[i], e2.coeffs[i]));
    CHECK(mult->equal(e3.remainder, e2.remainder));
}

TEST_CASE("flag expansion over a base torus") {
    auto mult = multiplicative_law(Z);
    GroupSpec a = GroupSpec::torus(1);
    Flag flag{a, {Character{0}, Character{1}}};
    GroupSpec at = times_circle(a);
    // x = t1 * t2 expands as (t1, t1) along (eps, W)
    LawElement x(at, parse_poly("t1*t2", Z, {"t1", "t2"}));
    auto e = flag_expand(*mult, a, flag, x);
    CHECK(e.coeffs[0].payload == parse_poly("t", Z, {"t"}));
    CHECK(e.coeffs[1].payload == parse_poly("t", Z, {"t"}));
    CHECK(e.remainder.payload.is_zero());

    // theta(W) evaluates the expansion like the direct restriction does
    LawElement direct = mult->restrict_along(augmentation_hom(a, Character{1}), x);
    LawElement viatheta = theta_eval(*mult, e, Character{1});
    CHECK(mult->equal(direct, viatheta));

    // all-zero expansion evaluates to 0
    FlagExpansion zero{flag, {mult->zero(a), mult->zero(a)}, mult->zero(at)};
    CHECK(mult->is_zero(theta_eval(*mult, zero, Character{1})));
}

TEST_CASE("theta_eval matches restriction modulo the flag ideal") {
    auto mult = multiplicative_law(Z);
    std::mt19937_64 rng(90210);
    std::uniform_int_distribution<int> expd(-2, 2), coefd(-3, 3);
    for (const auto& a : {GroupSpec::trivial(), GroupSpec::torus(1)}) {
        Flag flag = default_flag(a, 5);
        GroupSpec at = times_circle(a);
        for (int round = 0; round < 25; ++round) {
            LaurentPoly p(Z, at.rank());
            for (int t = 0; t < 4; ++t) {
                Exponents e(at.rank());
                for (int i = 0; i < at.rank(); ++i) e[i] = expd(rng);
                p.add_term(e, Rat(coefd(rng)));
            }
            LawElement x(at, p);
            auto exp = flag_expand(*mult, a, flag, x);
            // the comparison character
            Character v(std::vector<long long>(a.rank(), 0));
            if (a.rank() > 0) v.e[0] = expd(rng);
            LawElement direct = mult->restrict_along(augmentation_hom(a, v), x);
            LawElement t_eval = theta_eval(*mult, exp, v);
            // difference lies in the ideal generated by e_{V V_1} ... e_{V V_n}
            LawElement ideal_gen = mult->one(a);
            for (const auto& w : exp.flag.chars)
                ideal_gen = mult->mul(ideal_gen, euler_class_at(*mult, a, v + w));
            LawElement diff = mult->sub(direct, t_eval);
            if (mult->is_zero(ideal_gen)) {
                CHECK(mult->is_zero(diff));
            } else {
                auto q = exact_divide(diff.payload, ideal_gen.payload);
                CHECK(q.has_value());
            }
        }
    }
}

TEST_CASE("completed fgl of the multiplicative law at the trivial group") {
    auto mult = multiplicative_law(Z);
    auto c = completed_fgl(*mult, GroupSpec::trivial(), 5);
    // F(x, y) = x + y + xy
    CHECK(c.delta[0][0].payload.is_zero());
    CHECK(c.delta[1][0].payload == LaurentPoly::constant(Z, 0, 1));
    CHECK(c.delta[0][1].payload == LaurentPoly::constant(Z, 0, 1));
    CHECK(c.delta[1][1].payload == LaurentPoly::constant(Z, 0, 1));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if ((i + j <= 1) || (i == 1 && j == 1)) continue;
            CHECK(c.delta[i][j].payload.is_zero());
        }
    // y(eps) expands as (0, 1, 0, ...) for an eps-leading flag
    CHECK(c.coordinate.coeffs[0].payload.is_zero());
    CHECK(c.coordinate.coeffs[1].payload == LaurentPoly::constant(Z, 0, 1));
    CHECK(c.coordinate.coeffs[2].payload.is_zero());

    // additive over Q: F(x, y) = x + y
    auto add = additive_law(Q);
    auto ca = completed_fgl(*add, GroupSpec::trivial(), 4);
    for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) CHECK(ca.delta[i][j].payload.is_zero());

    // classify agrees
    TruncatedFGL f = classify(*mult, 8);
    CHECK(f.a(1, 1) == 1);
    CHECK((int)f.coeffs.size() == 1);
    CHECK(validate_fgl(f).empty());
}

TEST_CASE("gamma normal form at cyclic groups") {
    // expansion of y(eps) along the flag (sigma, sigma, sigma) at C_2:
    // leading coefficient e_{sigma^{-1}}, then [sigma], then 0
    auto mult = multiplicative_law(Z);
    GroupSpec c2 = GroupSpec::quotient(1, {Character{2}});
    auto g = gamma_expansion(*mult, c2, Character{1}, 3);
    CHECK(g.coeffs[0].payload == parse_poly("t - 1", Z, {"t"}));
    CHECK(g.coeffs[1].payload == parse_poly("t", Z, {"t"}));
    CHECK(g.coeffs[2].payload.is_zero());
    CHECK(g.remainder.payload.is_zero());
}

TEST_CASE("n-series") {
    auto fm = TruncatedFGL::multiplicative(Z, 6);
    // [3](x) = (1+x)^3 - 1 = 3x + 3x^2 + x^3
    CHECK(fm.n_series(3, 7).poly() == parse_poly("3*x + 3*x^2 + x^3", Z, {"x"}));
    CHECK(fm.n_series(1, 7).poly() == parse_poly("x", Z, {"x"}));
    CHECK(fm.n_series(0, 7).is_zero());
    // [-1](x) = (1+x)^{-1} - 1 = -x + x^2 - x^3 + ...
    CHECK(fm.n_series(-1, 5).poly() == parse_poly("-x + x^2 - x^3 + x^4", Z, {"x"}));
    // F(x, [-1](x)) = 0
    auto iota = fm.formal_inverse(7);
    CHECK(fm.f_add(fm.n_series(1, 7), iota).is_zero());
}

TEST_CASE("completion round trip for from_fgl laws") {
    std::mt19937_64 rng(20240810);
    for (int round = 0; round < 3; ++round) {
        TruncatedFGL f = random_log_fgl(rng, 5);
        REQUIRE(!f.validity_error().has_value());
        auto law = from_fgl(f, 5);
        TruncatedFGL back = classify(*law, 5);
        CHECK(back == f);
        // coassociativity and cocommutativity of the extracted coefficients
        CHECK(validate_fgl(back).empty());
    }
}

TEST_CASE("e_n completes to the n-series") {
    std::mt19937_64 rng(5150);
    TruncatedFGL f = random_log_fgl(rng, 5);
    auto law = from_fgl(f, 5);
    for (int n = 1; n <= 6; ++n) {
        LawElement en = euler_class(*law, Character{n});
        TruncatedSeries s = series_of_circle_element(*law, en.payload, 6);
        CHECK(s == f.n_series(n, 6));
    }
}

TEST_CASE("strict isomorphisms") {
    // lambda = t^{-1} on the multiplicative law: phi(x) = x - x^2 + x^3 - ...
    auto mult = multiplicative_law(Z);
    LaurentPoly tinv = LaurentPoly::monomial(Z, 1, {-1});
    TruncatedSeries lam = series_of_circle_element(*mult, tinv, 9);
    TruncatedFGL f = classify(*mult, 8);
    TruncatedSeries phi = strict_iso(f, lam);
    LaurentPoly expect(Z, 1);
    for (int k = 1; k <= 8; ++k) expect.add_term({k}, Rat(k % 2 ? 1 : -1));
    CHECK(phi.poly() == expect);

    // phi conjugates F to the law completed from the new coordinate
    auto changed = change_coordinate(*mult, tinv);
    TruncatedFGL fprime = classify(*changed, 8);
    CHECK(conjugate_fgl(f, phi) == fprime);
    // F'(x,y) = x + y - xy
    CHECK(fprime.a(1, 1) == -1);

    // the inverse unit expands in the new coordinate; composing the two strict
    // isomorphisms gives the identity
    LaurentPoly t = LaurentPoly::monomial(Z, 1, {1});
    TruncatedSeries lam_inv = series_of_circle_element(*changed, t, 9);
    TruncatedSeries phi_inv = strict_iso(fprime, lam_inv);
    CHECK(phi.compose({phi_inv}).poly() == LaurentPoly::variable(Z, 1, 0));
    CHECK(phi_inv.compose({phi}).poly() == LaurentPoly::variable(Z, 1, 0));
    CHECK(phi_inv == reversion(phi));

    // additive with lambda-series 1 + x: phi = x + x^2
    TruncatedFGL fa = TruncatedFGL::additive(Q, 8);
    LaurentPoly onepx(Q, 1);
    onepx.add_term({0}, 1);
    onepx.add_term({1}, 1);
    TruncatedSeries phi_add = strict_iso(fa, TruncatedSeries(onepx, 9));
    CHECK(phi_add.poly() == parse_poly("x + x^2", Q, {"x"}));

    // strictness is enforced
    LaurentPoly two(Q, 1);
    two.add_term({0}, 2);
    CHECK_THROWS(strict_iso(fa, TruncatedSeries(two, 9)));

    // identity change
    TruncatedSeries one_series = TruncatedSeries::constant(Z, 1, 9, Rat(1));
    CHECK(strict_iso(f, one_series).poly() == LaurentPoly::variable(Z, 1, 0));
}

TEST_CASE("coassociativity and cocommutativity of extracted laws") {
    for (auto ring : {Z, Q}) {
        auto mult = multiplicative_law(ring);
        TruncatedFGL f = classify(*mult, 6);
        CHECK(validate_fgl(f).empty());
    }
    auto add = additive_law(Z);
    CHECK(validate_fgl(classify(*add, 6)).empty());
}
