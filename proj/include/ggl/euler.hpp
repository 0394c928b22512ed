#pragma once

#include "ggl/law.hpp"

namespace ggl {

/// Euler class e_v = restriction of the coordinate along v, at the torus
/// (resp. C_2^r) of matching rank.
LawElement euler_class(const GlobalLaw& law, const Character& v);
/// Euler class of a character of an arbitrary group in the law's family.
LawElement euler_class_at(const GlobalLaw& law, const GroupSpec& g, const Character& v);

struct RegularityReport {
    std::string law;
    GroupSpec group;
    std::vector<Character> chars;
    bool pass = false;
    /// Exact verdict (structural or domain certificate) vs. up-to-bound search.
    bool certified = false;
    int bound = 0;
    std::optional<LawElement> witness;  // failures always carry one
    std::string detail;
};

/// Exactness of 0 -> X(A) -> X(A) -> X(ker V) -> 0: e_V regular, the kernel of
/// the restriction generated by e_V, surjectivity. bound = 0 picks the default
/// monomial-support bound for the non-certified parts.
RegularityReport check_exact_sequence(const GlobalLaw& law, const GroupSpec& a, const Character& v,
                                      int bound = 0);

/// Regularity of the Euler-class sequence of the given linearly independent
/// characters, each step taken modulo the previously quotiented classes.
RegularityReport check_k_regular(const GlobalLaw& law, const std::vector<Character>& chars,
                                 int bound = 0);

struct SplitDecomposition {
    std::vector<LawElement> coeffs;  // in the kernel-subgroup value ring
    LawElement remainder;            // at A
};

/// x = sum s^*(x_i) e_V^i + remainder * e_V^n for split V.
SplitDecomposition split_decompose(const GlobalLaw& law, const GroupSpec& a, const Character& v,
                                   const LawElement& x, int n);
LawElement reassemble(const GlobalLaw& law, const GroupSpec& a, const Character& v,
                      const SplitDecomposition& d);

/// psi_1 = e_1 and e_n = prod_{m|n} psi_m; defined for laws whose value at the
/// circle is a certified domain.
LawElement psi(const GlobalLaw& law, unsigned n);
std::vector<LawElement> psi_table(const GlobalLaw& law, unsigned n);  // psi_1..psi_n
bool check_euler_product(const GlobalLaw& law, unsigned n);

struct LeadingTermReport {
    bool pass = false;
    std::string detail;
};

/// For a p-locality witness: the n_i-series of both primitive multiplicities
/// must have unit leading coefficient n_i.
LeadingTermReport p2_leading_term_check(const TruncatedFGL& f, const Character& v1,
                                        const Character& v2);

}  // namespace ggl
