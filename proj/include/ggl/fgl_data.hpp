#pragma once

#include "ggl/series.hpp"

#include <map>

namespace ggl {

/// A one-dimensional commutative formal group law truncated at total degree
/// `degree`: F(x,y) = x + y + sum a_ij x^i y^j over 1 <= i,j, i+j <= degree.
/// Validity (commutativity/associativity through the truncation) is checked
/// by the lazard module; invalid coefficient tables are representable on
/// purpose. Grading convention: |a_ij| = 2(i+j-1).
struct TruncatedFGL {
    Ring ring = Ring::integers();
    int degree = 2;
    std::map<std::pair<int, int>, Rat> coeffs;  // nonzero entries only, i,j >= 1

    TruncatedFGL() = default;
    TruncatedFGL(Ring r, int n) : ring(r), degree(n) {
        if (n < 2) throw std::invalid_argument("fgl: degree bound must be >= 2");
    }

    static TruncatedFGL multiplicative(Ring r, int n);
    static TruncatedFGL additive(Ring r, int n);
    /// F = l^{-1}(l(x) + l(y)) for the strict log l(x) = x + sum tail[k] x^{k+2}
    /// over Q; always a valid formal group law.
    static TruncatedFGL from_log(const std::vector<Rat>& log_tail, int n);

    Rat a(int i, int j) const;
    void set(int i, int j, const Rat& c);
    static int coeff_grading(int i, int j) { return 2 * (i + j - 1); }

    /// F(x,y) as a 2-variable truncated series.
    TruncatedSeries series2(int trunc) const;
    /// Formal inverse iota with F(x, iota(x)) = 0, univariate.
    TruncatedSeries formal_inverse(int trunc) const;
    /// [n]_F(x); negative n via the formal inverse.
    TruncatedSeries n_series(long long n, int trunc) const;
    /// u +_F v for series with zero constant term.
    TruncatedSeries f_add(const TruncatedSeries& u, const TruncatedSeries& v) const;
    /// Image of the coordinate under the character row c: [c_1](x_1) +_F ... +_F [c_k](x_k).
    TruncatedSeries f_combination(const std::vector<long long>& c, int nvars, int trunc) const;

    TruncatedFGL mapped_into(const Ring& target) const;
    bool operator==(const TruncatedFGL& o) const {
        return ring == o.ring && degree == o.degree && coeffs == o.coeffs;
    }

    /// First violated axiom (commutativity/associativity through the degree
    /// bound), or nullopt for a valid law.
    std::optional<std::string> validity_error() const;
};

}  // namespace ggl
