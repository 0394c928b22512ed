#pragma once

#include "ggl/euler.hpp"

namespace ggl {

/// Formal fraction num / prod e_V over X(A); denominators are nonzero
/// characters of A.
struct LocalizedElement {
    LawElement num;
    std::vector<Character> denom;
};

/// Equality in X(A)[e_V^{-1}] via cross-multiplication; requires X(A) to be a
/// certified domain (throws UnsupportedError otherwise, never guesses).
bool loc_eq(const GlobalLaw& law, const LocalizedElement& a, const LocalizedElement& b);

/// Phi^{C_n} of the multiplicative law over Z: the component Z[t]/(psi_n)
/// surviving the localization, with the finitely many inverted images listed.
struct CyclicFixedPoints {
    unsigned n = 0;
    Ring ring = Ring::integers();
    LaurentPoly modulus;                // psi_n(t)
    std::vector<LaurentPoly> inverted;  // images of t^k - 1, 0 < k < n
    CyclicFixedPoints() : modulus(Ring::integers(), 1) {}

    /// Image of x in the localization is zero (t-powers cleared, then
    /// divisibility by the modulus).
    bool is_zero_image(const LaurentPoly& x) const;
    LaurentPoly image(const LaurentPoly& x) const;  // reduced mod the modulus
    std::string describe() const;
};

CyclicFixedPoints cyclic_fixed_points_mult(unsigned n);

/// Remainder of a univariate polynomial modulo a monic one.
LaurentPoly poly_mod_monic(const LaurentPoly& x, const LaurentPoly& m);

/// On monomial-supported elements within the bound, vanishing in the
/// Phi^{C_n}-composite (Euler-torsion detected through small powers of
/// e_1..e_{n-1}) must coincide with divisibility by psi_n.
bool psi_kernel_check(const GlobalLaw& law, unsigned n, int bound);

}  // namespace ggl
