#include "ggl/fixed_points.hpp"

#include <sstream>

namespace ggl {

bool loc_eq(const GlobalLaw& law, const LocalizedElement& a, const LocalizedElement& b) {
    if (!(a.num.group == b.num.group))
        throw std::invalid_argument("fixed-points: elements live at different groups");
    const GroupSpec& g = a.num.group;
    for (const auto& d : a.denom)
        if (d.is_zero()) throw std::invalid_argument("fixed-points: zero character in denominator");
    for (const auto& d : b.denom)
        if (d.is_zero()) throw std::invalid_argument("fixed-points: zero character in denominator");
    ValueRing vr = law.value(g);
    if (!vr.certified_domain())
        throw UnsupportedError("fixed-points: " + vr.describe() +
                               " is not a certified domain; localization equality undecided");
    auto denom_product = [&](const std::vector<Character>& ds) {
        LawElement p = law.one(g);
        for (const auto& d : ds) p = law.mul(p, euler_class_at(law, g, d));
        return p;
    };
    LawElement lhs = law.mul(a.num, denom_product(b.denom));
    LawElement rhs = law.mul(b.num, denom_product(a.denom));
    return law.equal(lhs, rhs);
}

LaurentPoly poly_mod_monic(const LaurentPoly& x, const LaurentPoly& m) {
    if (m.is_zero()) throw std::invalid_argument("fixed-points: zero modulus");
    auto [le, lc] = m.leading_term();
    if (lc != 1) throw std::invalid_argument("fixed-points: modulus must be monic");
    LaurentPoly r = x;
    while (!r.is_zero()) {
        auto [re, rc] = r.leading_term();
        if (re[0] < le[0]) break;
        Exponents d = {re[0] - le[0]};
        r -= m.shifted(d) * rc;
    }
    return r;
}

bool CyclicFixedPoints::is_zero_image(const LaurentPoly& x) const {
    return image(x).is_zero();
}

LaurentPoly CyclicFixedPoints::image(const LaurentPoly& x) const {
    if (x.is_zero()) return x;
    // t is a unit mod psi_n (psi_n(0) = 1 for n >= 2), so clearing the
    // t-powers does not change the image up to a unit
    Exponents mn = x.min_exponents();
    LaurentPoly shifted = x;
    if (mn[0] < 0) shifted = x.shifted({-mn[0]});
    return poly_mod_monic(shifted, modulus);
}

std::string CyclicFixedPoints::describe() const {
    std::ostringstream out;
    out << "Z[t]/(" << modulus.str({"t"}) << ")";
    out << " with inverted: ";
    for (size_t k = 0; k < inverted.size(); ++k) {
        if (k) out << ", ";
        out << "t^" << (k + 1) << " - 1 -> " << inverted[k].str({"t"});
    }
    return out.str();
}

CyclicFixedPoints cyclic_fixed_points_mult(unsigned n) {
    if (n < 2) throw std::invalid_argument("fixed-points: n must be at least 2");
    auto law = multiplicative_law(Ring::integers());
    CyclicFixedPoints out;
    out.n = n;
    out.ring = Ring::integers();
    out.modulus = psi(*law, n).payload;
    for (unsigned k = 1; k < n; ++k) {
        LaurentPoly ek(Ring::integers(), 1);
        ek.add_term({(int)k}, 1);
        ek.add_term({0}, -1);
        out.inverted.push_back(poly_mod_monic(ek, out.modulus));
    }
    return out;
}

bool psi_kernel_check(const GlobalLaw& law, unsigned n, int bound) {
    if (law.family() != Family::Tori)
        throw std::invalid_argument("fixed-points: psi kernel check applies to laws on tori");
    GroupSpec t = GroupSpec::torus(1);
    ValueRing vr = law.value(t);
    if (!vr.certified_domain())
        throw UnsupportedError("fixed-points: psi kernel check needs a domain at the circle");
    auto table = psi_table(law, n);
    const LaurentPoly& psin = table[n - 1].payload;

    // image of x in the composite X(T) -> X(C_n) -> Phi^{C_n} vanishes iff
    // some product of the lower Euler classes pushes x into (e_n)
    LaurentPoly en = euler_class(law, Character{(long long)n}).payload;
    LaurentPoly lower = LaurentPoly::constant(law.ground(), 1, 1);
    for (unsigned k = 1; k < n; ++k)
        lower = lower * euler_class(law, Character{(long long)k}).payload;
    auto composite_zero = [&](const LaurentPoly& x) {
        LaurentPoly z = x;
        for (int m = 0; m <= 2; ++m) {
            if (exact_divide(z, en).has_value()) return true;
            z = z * lower;
        }
        return false;
    };
    auto psi_divides = [&](const LaurentPoly& x) { return exact_divide(x, psin).has_value(); };

    // sample: monomials within the bound, psi_n multiples, the other psi's, 1
    std::vector<LaurentPoly> samples;
    for (int k = -bound; k <= bound; ++k) {
        LaurentPoly m(law.ground(), 1);
        m.add_term({k}, 1);
        samples.push_back(m);
        samples.push_back(psin * m);
    }
    samples.push_back(LaurentPoly::constant(law.ground(), 1, 1));
    for (unsigned m = 1; m <= n; ++m) samples.push_back(table[m - 1].payload);
    samples.push_back(psin * psin);

    for (const auto& x : samples) {
        bool zero = composite_zero(x);
        bool div = psi_divides(x);
        if (zero != div) return false;
    }
    return true;
}

}  // namespace ggl
