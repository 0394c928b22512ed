#pragma once

#include "ggl/laurent.hpp"

namespace ggl {

/// Truncated multivariate power series: all stored exponents are nonnegative
/// and of total degree < trunc(). Arithmetic agrees with the untruncated
/// operation modulo total degree trunc().
class TruncatedSeries {
public:
    TruncatedSeries(Ring r, int nvars, int trunc)
        : trunc_(trunc), poly_(LaurentPoly::zero(r, nvars)) {
        if (trunc < 1) throw std::invalid_argument("series: truncation bound must be >= 1");
    }
    TruncatedSeries(const LaurentPoly& p, int trunc);

    static TruncatedSeries constant(Ring r, int nvars, int trunc, const Rat& c);
    static TruncatedSeries variable(Ring r, int nvars, int trunc, int index);

    const Ring& ring() const { return poly_.ring(); }
    int nvars() const { return poly_.nvars(); }
    int trunc() const { return trunc_; }
    const LaurentPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    Rat constant_term() const { return poly_.constant_term(); }
    Rat coeff(const Exponents& e) const { return poly_.coeff(e); }

    TruncatedSeries operator-() const { return TruncatedSeries(-poly_, trunc_); }
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rat& c) const { return TruncatedSeries(poly_ * c, trunc_); }
    bool operator==(const TruncatedSeries& o) const {
        return trunc_ == o.trunc_ && poly_ == o.poly_;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    /// Composition f(args[0], ..., args[nvars-1]). Every argument must have
    /// zero constant term.
    TruncatedSeries compose(const std::vector<TruncatedSeries>& args) const;

    /// Multiplicative inverse; the constant term must be a unit.
    TruncatedSeries inverse() const;

    TruncatedSeries retruncated(int bound) const { return TruncatedSeries(poly_, bound); }

    std::string str(const std::vector<std::string>& var_names) const {
        return poly_.str(var_names);
    }

private:
    int trunc_;
    LaurentPoly poly_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_compose(const TruncatedSeries& f, const std::vector<TruncatedSeries>& args);
TruncatedSeries pow(const TruncatedSeries& f, unsigned n);

/// Compositional inverse of a univariate series f = a1*x + ... with a1 a
/// unit: reversion(f)(f(x)) = x modulo the truncation.
TruncatedSeries reversion(const TruncatedSeries& f);

}  // namespace ggl
