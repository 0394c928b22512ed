#include "ggl/fgl_data.hpp"

namespace ggl {

TruncatedFGL TruncatedFGL::multiplicative(Ring r, int n) {
    TruncatedFGL f(r, n);
    f.set(1, 1, Rat(1));
    return f;
}

TruncatedFGL TruncatedFGL::additive(Ring r, int n) { return TruncatedFGL(r, n); }

TruncatedFGL TruncatedFGL::from_log(const std::vector<Rat>& log_tail, int n) {
    Ring q = Ring::rationals();
    int trunc = n + 1;
    LaurentPoly lp(q, 1);
    lp.add_term({1}, 1);
    for (size_t k = 0; k < log_tail.size(); ++k)
        if ((int)k + 2 <= n) lp.add_term({(int)k + 2}, log_tail[k]);
    TruncatedSeries log1(lp, trunc);
    TruncatedSeries exp1 = reversion(log1);
    // l(x) + l(y) in two variables, then exp of it
    auto lift = [&](int var) {
        LaurentPoly p(q, 2);
        for (const auto& [e, c] : log1.poly().terms()) {
            Exponents f(2, 0);
            f[var] = e[0];
            p.add_term(f, c);
        }
        return TruncatedSeries(p, trunc);
    };
    TruncatedSeries sum2 = lift(0) + lift(1);
    TruncatedSeries f2 = exp1.compose({sum2});
    TruncatedFGL out(q, n);
    for (const auto& [e, c] : f2.poly().terms()) {
        if (e[0] >= 1 && e[1] >= 1) out.set(e[0], e[1], c);
    }
    return out;
}

Rat TruncatedFGL::a(int i, int j) const {
    auto it = coeffs.find({i, j});
    return it == coeffs.end() ? Rat(0) : it->second;
}

void TruncatedFGL::set(int i, int j, const Rat& c) {
    if (i < 1 || j < 1 || i + j > degree)
        throw std::invalid_argument("fgl: coefficient index out of range");
    Rat v = ring.normalize(c);
    if (v == 0)
        coeffs.erase({i, j});
    else
        coeffs[{i, j}] = v;
}

TruncatedSeries TruncatedFGL::series2(int trunc) const {
    LaurentPoly p(ring, 2);
    p.add_term({1, 0}, 1);
    p.add_term({0, 1}, 1);
    for (const auto& [ij, c] : coeffs) p.add_term({ij.first, ij.second}, c);
    return TruncatedSeries(p, trunc);
}

TruncatedSeries TruncatedFGL::formal_inverse(int trunc) const {
    TruncatedSeries x = TruncatedSeries::variable(ring, 1, trunc, 0);
    // tail(x,y) = F(x,y) - x - y
    TruncatedSeries iota = -x;
    for (int it = 0; it < trunc; ++it) {
        // iota <- -x - tail(x, iota)
        LaurentPoly tail(ring, 2);
        for (const auto& [ij, c] : coeffs) tail.add_term({ij.first, ij.second}, c);
        TruncatedSeries t = TruncatedSeries(tail, trunc).compose({x, iota});
        iota = -x - t;
    }
    return iota;
}

TruncatedSeries TruncatedFGL::n_series(long long n, int trunc) const {
    TruncatedSeries x = TruncatedSeries::variable(ring, 1, trunc, 0);
    if (n == 0) return TruncatedSeries(ring, 1, trunc);
    if (n < 0) return n_series(-n, trunc).compose({formal_inverse(trunc)});
    TruncatedSeries acc(ring, 1, trunc);
    for (long long k = 0; k < n; ++k) acc = f_add(acc, x);
    return acc;
}

TruncatedSeries TruncatedFGL::f_add(const TruncatedSeries& u, const TruncatedSeries& v) const {
    return series2(u.trunc()).compose({u, v});
}

TruncatedSeries TruncatedFGL::f_combination(const std::vector<long long>& c, int nvars,
                                            int trunc) const {
    TruncatedSeries acc(ring, nvars, trunc);
    for (int i = 0; i < (int)c.size(); ++i) {
        if (c[i] == 0) continue;
        TruncatedSeries ni = n_series(c[i], trunc);
        // substitute the single variable x -> x_i
        std::vector<TruncatedSeries> img = {TruncatedSeries::variable(ring, nvars, trunc, i)};
        acc = f_add(acc, ni.compose(img));
    }
    return acc;
}

std::optional<std::string> TruncatedFGL::validity_error() const {
    for (const auto& [ij, c] : coeffs)
        if (ring.normalize(c - a(ij.second, ij.first)) != 0)
            return "commutativity violated at (" + std::to_string(ij.first) + "," +
                   std::to_string(ij.second) + ")";
    int trunc = degree + 1;
    TruncatedSeries f = series2(trunc);
    TruncatedSeries x = TruncatedSeries::variable(ring, 3, trunc, 0);
    TruncatedSeries y = TruncatedSeries::variable(ring, 3, trunc, 1);
    TruncatedSeries z = TruncatedSeries::variable(ring, 3, trunc, 2);
    TruncatedSeries lhs = f.compose({f.compose({x, y}), z});
    TruncatedSeries rhs = f.compose({x, f.compose({y, z})});
    TruncatedSeries diff = lhs - rhs;
    if (!diff.is_zero()) {
        auto [e, c] = diff.poly().leading_term();
        (void)c;
        return "associativity residual at x^" + std::to_string(e[0]) + " y^" +
               std::to_string(e[1]) + " z^" + std::to_string(e[2]);
    }
    return std::nullopt;
}

TruncatedFGL TruncatedFGL::mapped_into(const Ring& target) const {
    if (!ring_map_exists(ring, target))
        throw std::invalid_argument("fgl: no ring map " + ring.name() + " -> " + target.name());
    TruncatedFGL out(target, degree);
    for (const auto& [ij, c] : coeffs) out.set(ij.first, ij.second, c);
    return out;
}

}  // namespace ggl
