#include "ggl/series.hpp"

namespace ggl {

TruncatedSeries::TruncatedSeries(const LaurentPoly& p, int trunc) : trunc_(trunc), poly_(p.ring(), p.nvars()) {
    if (trunc < 1) throw std::invalid_argument("series: truncation bound must be >= 1");
    if (!p.is_polynomial())
        throw std::invalid_argument("series: negative exponents are not allowed");
    poly_ = p.truncated(trunc);
}

TruncatedSeries TruncatedSeries::constant(Ring r, int nvars, int trunc, const Rat& c) {
    return TruncatedSeries(LaurentPoly::constant(r, nvars, c), trunc);
}

TruncatedSeries TruncatedSeries::variable(Ring r, int nvars, int trunc, int index) {
    return TruncatedSeries(LaurentPoly::variable(r, nvars, index), trunc);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (trunc_ != o.trunc_) throw std::invalid_argument("series: truncation mismatch");
    return TruncatedSeries(poly_ + o.poly_, trunc_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    if (trunc_ != o.trunc_) throw std::invalid_argument("series: truncation mismatch");
    return TruncatedSeries(poly_ - o.poly_, trunc_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (trunc_ != o.trunc_) throw std::invalid_argument("series: truncation mismatch");
    return TruncatedSeries((poly_ * o.poly_).truncated(trunc_), trunc_);
}

TruncatedSeries TruncatedSeries::compose(const std::vector<TruncatedSeries>& args) const {
    if ((int)args.size() != nvars())
        throw std::invalid_argument("series: compose needs one argument per variable");
    int target_nvars = args.empty() ? 0 : args[0].nvars();
    for (const auto& a : args) {
        if (a.ring() != ring()) throw std::invalid_argument("series: compose ring mismatch");
        if (a.nvars() != target_nvars) throw std::invalid_argument("series: argument arity mismatch");
        if (a.trunc() != trunc_) throw std::invalid_argument("series: truncation mismatch");
        if (a.constant_term() != 0)
            throw std::invalid_argument("series: composition argument has nonzero constant term");
    }
    // cached truncated powers of each argument
    std::vector<std::vector<LaurentPoly>> powers(args.size());
    auto arg_power = [&](int i, int k) -> const LaurentPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(LaurentPoly::constant(ring(), target_nvars, 1));
        while ((int)cache.size() <= k)
            cache.push_back((cache.back() * args[i].poly()).truncated(trunc_));
        return cache[k];
    };
    LaurentPoly out(ring(), target_nvars);
    for (const auto& [e, c] : poly_.terms()) {
        if (total_degree(e) >= trunc_) continue;
        LaurentPoly term = LaurentPoly::constant(ring(), target_nvars, c);
        for (int i = 0; i < nvars(); ++i)
            if (e[i] != 0) term = (term * arg_power(i, e[i])).truncated(trunc_);
        out += term;
    }
    return TruncatedSeries(out, trunc_);
}

TruncatedSeries TruncatedSeries::inverse() const {
    Rat c = constant_term();
    if (!ring().is_unit(c))
        throw std::invalid_argument("series: constant term is not a unit");
    // Newton iteration g <- g*(2 - f*g), doubling correct degrees each step
    LaurentPoly g = LaurentPoly::constant(ring(), nvars(), ring().invert(c));
    LaurentPoly two = LaurentPoly::constant(ring(), nvars(), 2);
    for (int prec = 1; prec < trunc_; prec *= 2)
        g = (g * (two - (poly_ * g).truncated(trunc_))).truncated(trunc_);
    return TruncatedSeries(g, trunc_);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_compose(const TruncatedSeries& f, const std::vector<TruncatedSeries>& args) {
    return f.compose(args);
}

TruncatedSeries pow(const TruncatedSeries& f, unsigned n) {
    TruncatedSeries r = TruncatedSeries::constant(f.ring(), f.nvars(), f.trunc(), Rat(1));
    TruncatedSeries base = f;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

TruncatedSeries reversion(const TruncatedSeries& f) {
    if (f.nvars() != 1) throw std::invalid_argument("series: reversion is univariate");
    if (f.constant_term() != 0)
        throw std::invalid_argument("series: reversion needs zero constant term");
    Rat a1 = f.coeff({1});
    if (!f.ring().is_unit(a1))
        throw std::invalid_argument("series: reversion needs a unit linear coefficient");
    Rat inv = f.ring().invert(a1);
    int trunc = f.trunc();
    TruncatedSeries x = TruncatedSeries::variable(f.ring(), 1, trunc, 0);
    TruncatedSeries tail = f - x * a1;  // degree >= 2 part
    // fixed point h = inv*(x - tail(h)); each pass gains one correct degree
    TruncatedSeries h = x * inv;
    for (int it = 0; it < trunc; ++it) h = (x - tail.compose({h})) * inv;
    return h;
}

}  // namespace ggl
