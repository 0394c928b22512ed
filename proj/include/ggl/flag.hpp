#pragma once

#include "ggl/euler.hpp"

namespace ggl {

/// An ordered list of characters of A; finite prefixes of complete flags.
/// y(V) is realized as the Euler class of (V, tau) on A x T.
struct Flag {
    GroupSpec group;
    std::vector<Character> chars;

    bool eps_leading() const { return !chars.empty() && chars.front().is_zero(); }
};

/// Cyclic enumeration 0, W_1, -W_1, ..., W_r, -W_r repeated to the requested
/// depth (0, W_1, ..., W_r over F_2); eps-leading by construction.
Flag default_flag(const GroupSpec& a, int depth);

/// The group A x T (resp. A x C_2) in the same presentation family.
GroupSpec times_circle(const GroupSpec& a);
/// The character (v, 1) of A x T.
Character y_char(const Character& v);
/// pr_A : A x T -> A.
GroupHom circle_projection(const GroupSpec& a);
/// (id_A, V) : A -> A x T, inducing the augmentation theta(V).
GroupHom augmentation_hom(const GroupSpec& a, const Character& v);

/// x = sum_i a_i y(V_i)...y(V_1) + remainder * y(V_n)...y(V_1), coefficients
/// in X(A), remainder in X(A x T).
struct FlagExpansion {
    Flag flag;
    std::vector<LawElement> coeffs;
    LawElement remainder;
};

FlagExpansion flag_expand(const GlobalLaw& law, const GroupSpec& a, const Flag& flag,
                          const LawElement& x);
LawElement reassemble(const GlobalLaw& law, const FlagExpansion& e);
/// theta(V)(x) = sum_i a_i e_{V V_i} ... e_{V V_1} in X(A).
LawElement theta_eval(const GlobalLaw& law, const FlagExpansion& e, const Character& v);

/// The A-equivariant formal group law data extracted from a global law:
/// ground ring X(A), the coordinate's flag expansion, the coproduct of the
/// coordinate in the double flag basis, the theta table on the flag basis,
/// and the Euler classes of the flag characters.
struct CompletedFgl {
    GroupSpec base;
    Flag flag;
    int depth = 0;
    std::string ground;                           // description of X(A)
    FlagExpansion coordinate;                     // y(eps) = expansion of e_{(0,tau)}
    std::vector<std::vector<LawElement>> delta;   // coordinate image of (id_A x m)^*
    std::vector<std::vector<LawElement>> theta;   // theta[v][i] on the basis
    std::vector<LawElement> euler;                // e_{V} for V in the flag
};

CompletedFgl completed_fgl(const GlobalLaw& law, const GroupSpec& a, int depth,
                           const std::optional<Flag>& flag = std::nullopt);

/// Coefficients a_ij of the formal group law extracted at the trivial group;
/// uses the all-eps flag of depth n+1.
TruncatedFGL classify_at_trivial(const GlobalLaw& law, int n);

/// Flag expansion of an element of X(T) at the trivial group as a univariate
/// series (all-eps flag).
TruncatedSeries series_of_circle_element(const GlobalLaw& law, const LaurentPoly& payload,
                                         int trunc);

/// phi(x) = lambda_hat(x) * x for a strict unit series (lambda_hat(0) = 1).
TruncatedSeries strict_iso(const TruncatedFGL& f, const TruncatedSeries& lambda_hat);
/// phi-conjugate law phi(F(phi^{-1} x, phi^{-1} y)).
TruncatedFGL conjugate_fgl(const TruncatedFGL& f, const TruncatedSeries& phi);

/// gamma normal form: expansion of y(eps) along the constant flag (v, v, ...);
/// the leading coefficient is e_{v^{-1}}.
FlagExpansion gamma_expansion(const GlobalLaw& law, const GroupSpec& a, const Character& v,
                              int depth);

}  // namespace ggl
