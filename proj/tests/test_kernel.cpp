#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ggl/intmat.hpp"
#include "ggl/laurent.hpp"
#include "ggl/series.hpp"

#include <random>

using namespace ggl;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();
const Ring F2 = Ring::prime_field(2);

LaurentPoly parse_uni(Ring r, std::initializer_list<std::pair<int, int>> terms) {
    // list of (exponent, coefficient) for a one-variable poly
    LaurentPoly p(r, 1);
    for (auto [e, c] : terms) p.add_term({e}, Rat(c));
    return p;
}

LaurentPoly random_poly(std::mt19937_64& rng, Ring ring, int nvars, int max_terms, int max_exp,
                        bool laurent) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(laurent ? -max_exp : 0, max_exp);
    std::uniform_int_distribution<int> coefd(-9, 9);
    LaurentPoly p(ring, nvars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = expd(rng);
        p.add_term(e, Rat(coefd(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("ring basics") {
    CHECK(Ring::parse("F7").characteristic() == 7);
    CHECK_THROWS(Ring::prime_field(6));
    CHECK(F2.normalize(Rat(3)) == 1);
    CHECK(F2.normalize(Rat(1, 3)) == 1);  // 1/3 = 1 mod 2
    CHECK(Z.divide(Rat(4), Rat(2)) == Rat(2));
    CHECK(!Z.divide(Rat(1), Rat(2)).has_value());
    CHECK(Q.divide(Rat(1), Rat(2)) == Rat(1, 2));
    CHECK(Z.is_unit(Rat(-1)));
    CHECK(!Z.is_unit(Rat(2)));
    CHECK(ring_map_exists(Z, F2));
    CHECK(!ring_map_exists(Q, F2));
    CHECK(!ring_map_exists(Ring::prime_field(3), Ring::prime_field(5)));
}

TEST_CASE("laurent arithmetic examples") {
    // (t-1)*(t+1) = t^2 - 1
    auto tm1 = parse_uni(Z, {{1, 1}, {0, -1}});
    auto tp1 = parse_uni(Z, {{1, 1}, {0, 1}});
    CHECK(tm1 * tp1 == parse_uni(Z, {{2, 1}, {0, -1}}));

    // x + 0 = x
    auto x = LaurentPoly::variable(Z, 1, 0);
    CHECK(arith(x, LaurentPoly::zero(Z, 1), "add") == x);

    // over F_2: e + e = 0
    auto e = LaurentPoly::variable(F2, 1, 0);
    CHECK((e + e).is_zero());

    CHECK_THROWS(arith(x, LaurentPoly::zero(Q, 1), "add"));
    CHECK_THROWS(arith(x, LaurentPoly::zero(Z, 2), "add"));
}

TEST_CASE("laurent printing is canonical") {
    auto p = parse_uni(Z, {{2, 1}, {1, -1}, {0, 1}});
    CHECK(p.str({"t"}) == "t^2 - t + 1");
    LaurentPoly q(Z, 2);
    q.add_term({1, 0}, 2);
    q.add_term({0, 1}, -3);
    CHECK(q.str({"e1", "e2"}) == "2*e1 - 3*e2");
    LaurentPoly m(Z, 2);
    m.add_term({1, -1}, 1);
    m.add_term({0, 0}, -1);
    CHECK(m.str({"t1", "t2"}) == "t1*t2^-1 - 1");
}

TEST_CASE("substitute along monomial maps") {
    // p = t1*t2^-1, t1 -> u^2, t2 -> u^3  gives u^-1
    LaurentPoly p(Z, 2);
    p.add_term({1, -1}, 1);
    auto img = p.substitute_monomials({{2}, {3}}, 1);
    CHECK(img == LaurentPoly::monomial(Z, 1, {-1}));

    // identity image
    auto tm1 = parse_uni(Z, {{1, 1}, {0, -1}});
    CHECK(tm1.substitute_monomials({{1}}, 1) == tm1);

    // t - 1 along t -> t1 t2
    auto d = tm1.substitute_monomials({{1, 1}}, 2);
    LaurentPoly expect(Z, 2);
    expect.add_term({1, 1}, 1);
    expect.add_term({0, 0}, -1);
    CHECK(d == expect);

    CHECK_THROWS(tm1.substitute_monomials({{1}, {2}}, 1));
}

TEST_CASE("substitute is functorial on random inputs") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> expd(-2, 2);
    for (int round = 0; round < 40; ++round) {
        auto p = random_poly(rng, Z, 2, 5, 3, true);
        // M: 2 vars -> 2 vars, M2: 2 vars -> 1 var
        std::vector<Exponents> m1 = {{expd(rng), expd(rng)}, {expd(rng), expd(rng)}};
        std::vector<Exponents> m2 = {{expd(rng)}, {expd(rng)}};
        auto two_step = p.substitute_monomials(m1, 2).substitute_monomials(m2, 1);
        // composite: variable i -> m1[i] interpreted through m2
        std::vector<Exponents> comp(2, Exponents{0});
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) comp[i][0] += m1[i][j] * m2[j][0];
        CHECK(two_step == p.substitute_monomials(comp, 1));
        // homomorphism: substitute(a*b) = substitute(a)*substitute(b)
        auto q = random_poly(rng, Z, 2, 5, 3, true);
        CHECK((p * q).substitute_monomials(m1, 2) ==
              p.substitute_monomials(m1, 2) * q.substitute_monomials(m1, 2));
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(987654321);
    for (auto ring : {Z, Q, F2}) {
        for (int round = 0; round < 25; ++round) {
            auto a = random_poly(rng, ring, 2, 4, 2, true);
            auto b = random_poly(rng, ring, 2, 4, 2, true);
            auto c = random_poly(rng, ring, 2, 4, 2, true);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - b) + b == a);
        }
    }
}

TEST_CASE("exact division examples") {
    auto t6m1 = parse_uni(Z, {{6, 1}, {0, -1}});
    auto tm1 = parse_uni(Z, {{1, 1}, {0, -1}});
    auto q = exact_divide(t6m1, tm1);
    REQUIRE(q.has_value());
    CHECK(*q == parse_uni(Z, {{5, 1}, {4, 1}, {3, 1}, {2, 1}, {1, 1}, {0, 1}}));

    auto x = LaurentPoly::variable(Z, 1, 0);
    auto two_x = x * Rat(2);
    CHECK(exact_divide(two_x, x) == LaurentPoly::constant(Z, 1, 2));
    CHECK(!exact_divide(x, two_x).has_value());  // content obstruction over Z

    // Laurent shifting: (t^2 - 1)/t = t - t^-1 divides back
    auto lhs = parse_uni(Z, {{2, 1}, {0, -1}});
    auto t = LaurentPoly::variable(Z, 1, 0);
    auto r = exact_divide(lhs, t);
    REQUIRE(r.has_value());
    CHECK(*r * t == lhs);

    CHECK_THROWS(exact_divide(x, LaurentPoly::zero(Z, 1)));
}

TEST_CASE("exact_divide(a*b, b) recovers a") {
    std::mt19937_64 rng(5550123);
    for (auto ring : {Q, F2, Ring::prime_field(5)}) {
        for (int round = 0; round < 30; ++round) {
            auto a = random_poly(rng, ring, 2, 4, 2, true);
            auto b = random_poly(rng, ring, 2, 4, 2, true);
            if (b.is_zero()) continue;
            auto q = exact_divide(a * b, b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
    // over Z with monic divisors
    for (int round = 0; round < 30; ++round) {
        auto a = random_poly(rng, Z, 2, 4, 2, true);
        auto b = random_poly(rng, Z, 2, 4, 2, true);
        Exponents top(2);
        top[0] = 3;
        top[1] = 3;
        b.add_term(top, 1);  // force a monic leading term
        if (b.is_zero()) continue;
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("series multiplication and composition") {
    // compose(x+y+xy; x->a, y->a) = 2a + a^2
    LaurentPoly f(Z, 2);
    f.add_term({1, 0}, 1);
    f.add_term({0, 1}, 1);
    f.add_term({1, 1}, 1);
    TruncatedSeries F(f, 6);
    TruncatedSeries a = TruncatedSeries::variable(Z, 1, 6, 0);
    auto diag = F.compose({a, a});
    LaurentPoly expect(Z, 1);
    expect.add_term({1}, 2);
    expect.add_term({2}, 1);
    CHECK(diag.poly() == expect);

    // counit: compose(f; x->x, y->0) = f(x, 0)
    TruncatedSeries x2 = TruncatedSeries::variable(Z, 2, 6, 0);
    TruncatedSeries zero2(Z, 2, 6);
    CHECK(F.compose({x2, zero2}).poly() == LaurentPoly::variable(Z, 2, 0));

    // (1+x)*(1-x+x^2-x^3) = 1 truncated at 4
    LaurentPoly onepx(Z, 1);
    onepx.add_term({0}, 1);
    onepx.add_term({1}, 1);
    TruncatedSeries g(onepx, 4);
    auto inv = g.inverse();
    LaurentPoly alt(Z, 1);
    alt.add_term({0}, 1);
    alt.add_term({1}, -1);
    alt.add_term({2}, 1);
    alt.add_term({3}, -1);
    CHECK(inv.poly() == alt);
    CHECK((g * inv).poly() == LaurentPoly::constant(Z, 1, 1));

    // composition rejects nonzero constant terms
    CHECK_THROWS(F.compose({g.retruncated(6), zero2.retruncated(6)}));
}

TEST_CASE("series ops commute with re-truncation") {
    std::mt19937_64 rng(424242);
    for (int round = 0; round < 20; ++round) {
        auto p = random_poly(rng, Q, 2, 6, 3, false);
        auto q = random_poly(rng, Q, 2, 6, 3, false);
        TruncatedSeries lo_a(p, 4), lo_b(q, 4);
        TruncatedSeries hi_a(p, 9), hi_b(q, 9);
        CHECK((hi_a * hi_b).retruncated(4) == lo_a * lo_b);
        CHECK((hi_a + hi_b).retruncated(4) == lo_a + lo_b);
    }
}

TEST_CASE("series reversion") {
    // f = x + x^2: inverse g with f(g(x)) = x
    LaurentPoly f(Q, 1);
    f.add_term({1}, 1);
    f.add_term({2}, 1);
    TruncatedSeries F(f, 8);
    auto g = reversion(F);
    auto comp = F.compose({g});
    CHECK(comp.poly() == LaurentPoly::variable(Q, 1, 0));
    auto comp2 = g.compose({F});
    CHECK(comp2.poly() == LaurentPoly::variable(Q, 1, 0));
}

TEST_CASE("integer matrix: hnf, kernel, snf, split") {
    // lattice membership
    IntMat a = IntMat::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}});
    auto h = row_hnf(a);
    CHECK(h.rank == 2);
    CHECK(in_row_lattice(h, {Int(4), Int(3)}));
    CHECK(!in_row_lattice(h, {Int(1), Int(0)}));
    auto red = reduce_mod_row_lattice(h, {Int(5), Int(-4)});
    CHECK(red == std::vector<Int>{Int(1), Int(2)});

    // kernel: x * a = 0 with dependent rows
    IntMat b = IntMat::from_rows({{Int(1), Int(2)}, {Int(2), Int(4)}});
    auto k = left_kernel(b);
    REQUIRE(k.rows() == 1);
    CHECK(k.at(0, 0) * 1 + k.at(0, 1) * 2 == 0);

    // SNF of [[2,0],[0,3]] has diagonal 1,6
    auto s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<Int>{Int(1), Int(6)});
    CHECK(s.u * a * s.v == s.d);
    CHECK(abs(det_bareiss(s.u)) == 1);
    CHECK(abs(det_bareiss(s.v)) == 1);

    // split_row on (1,2): v*u = (1,0), u*uinv = id
    auto sp = split_row({Int(1), Int(2)});
    CHECK(sp.g == 1);
    IntMat v(1, 2);
    v.at(0, 0) = 1;
    v.at(0, 1) = 2;
    IntMat prod = v * sp.u;
    CHECK(prod.at(0, 0) == 1);
    CHECK(prod.at(0, 1) == 0);
    CHECK(sp.u * sp.uinv == IntMat::identity(2));
    CHECK(abs(det_bareiss(sp.u)) == 1);

    auto sp2 = split_row({Int(2), Int(-4)});
    CHECK(sp2.g == 2);
}

TEST_CASE("f2 helpers") {
    using namespace ggl::f2;
    Mat a = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
    CHECK(rank(a) == 2);
    auto basis = complete_to_basis({1, 1, 0});
    // first column is a section, remaining span the kernel
    CHECK((basis[0][0] + basis[1][0]) % 2 == 1);
    auto inv = inverse(basis);
    auto prod = multiply(basis, inv);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(prod[i][j] == (i == j ? 1 : 0));
}
