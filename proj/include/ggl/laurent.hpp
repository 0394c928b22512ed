#pragma once

#include "ggl/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ggl {

/// Exponent vector of a Laurent monomial; entries may be negative.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

/// Graded lexicographic order with the fixed variable order t1 > t2 > ...
/// On signed exponent vectors this is a translation-invariant total order;
/// restricted to nonnegative exponents it is a monomial well-order, which is
/// what division relies on.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;  // lexicographic tie-break
    }
};

/// Sparse multivariate Laurent polynomial with exact coefficients.
///
/// Invariants: no stored zero coefficients, every exponent vector has length
/// nvars(), every coefficient is the canonical representative of its ring.
/// Values are immutable in spirit: all operations return new polynomials.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, Rat, GrlexLess>;

    LaurentPoly(Ring ring, int nvars) : ring_(ring), nvars_(nvars) {}

    static LaurentPoly zero(Ring r, int nvars) { return LaurentPoly(r, nvars); }
    static LaurentPoly constant(Ring r, int nvars, const Rat& c);
    static LaurentPoly monomial(Ring r, int nvars, const Exponents& e, const Rat& c = Rat(1));
    static LaurentPoly variable(Ring r, int nvars, int index, int power = 1);

    const Ring& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_polynomial() const;  // no negative exponents
    Rat constant_term() const;
    Rat coeff(const Exponents& e) const;
    /// Max total degree over the terms; throws on the zero polynomial.
    int degree() const;

    /// Leading term in the graded-lexicographic order.
    std::pair<Exponents, Rat> leading_term() const;

    /// Componentwise minimum of the exponent vectors (zero poly: throws).
    Exponents min_exponents() const;

    void add_term(const Exponents& e, const Rat& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator*(const Rat& c) const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Multiply by the monomial t^shift.
    LaurentPoly shifted(const Exponents& shift) const;

    /// Substitute variable i by the monomial t^{images[i]} in a ring on
    /// target_nvars variables. Coefficient-1 monomial images only, so this is
    /// Laurent-safe and a ring homomorphism.
    LaurentPoly substitute_monomials(const std::vector<Exponents>& images, int target_nvars) const;

    /// General substitution: variable i goes to images[i]. Negative exponents
    /// are only allowed when the corresponding image is an invertible monomial.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    /// Drop all terms of total degree >= bound (used by the series layer).
    LaurentPoly truncated(int bound) const;

    /// Mapped coefficientwise into another ring (the unique map determined
    /// on 1); throws when no such ring map exists.
    LaurentPoly mapped_into(const Ring& target) const;

    std::string str(const std::vector<std::string>& var_names) const;

private:
    void check_compatible(const LaurentPoly& o, const char* op) const;

    Ring ring_;
    int nvars_;
    TermMap terms_;
};

/// Arithmetic entry point used by the CLI; op is "add" | "sub" | "mul".
LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, const std::string& op);

/// Exact quotient num/den, or nullopt when none exists over the coefficient
/// ring. Deterministic: graded-lexicographic leading-term division after
/// shifting both operands into the polynomial range.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den);

LaurentPoly pow(const LaurentPoly& p, unsigned n);

}  // namespace ggl
