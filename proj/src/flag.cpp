#include "ggl/flag.hpp"

namespace ggl {

Flag default_flag(const GroupSpec& a, int depth) {
    Flag f;
    f.group = a;
    int r = a.rank();
    std::vector<Character> cycle;
    cycle.push_back(Character(std::vector<long long>(r, 0)));
    bool elem2 = a.kind() == GroupSpec::Kind::Elem2;
    for (int i = 0; i < r; ++i) {
        std::vector<long long> v(r, 0);
        v[i] = 1;
        cycle.push_back(Character(v));
        if (!elem2) {
            std::vector<long long> w(r, 0);
            w[i] = -1;
            cycle.push_back(Character(w));
        }
    }
    for (int i = 0; i < depth; ++i) f.chars.push_back(cycle[i % cycle.size()]);
    return f;
}

GroupSpec times_circle(const GroupSpec& a) {
    switch (a.kind()) {
        case GroupSpec::Kind::Torus: return GroupSpec::torus(a.rank() + 1);
        case GroupSpec::Kind::Elem2: return GroupSpec::elem2(a.rank() + 1);
        case GroupSpec::Kind::Quotient: {
            std::vector<Character> kernel;
            for (const auto& v : a.kernel_chars()) {
                std::vector<long long> w(v.e);
                w.push_back(0);
                kernel.push_back(Character(w));
            }
            return GroupSpec::quotient(a.rank() + 1, kernel);
        }
    }
    throw std::logic_error("flag: unreachable");
}

Character y_char(const Character& v) {
    std::vector<long long> w(v.e);
    w.push_back(1);
    return Character(w);
}

GroupHom circle_projection(const GroupSpec& a) {
    GroupSpec at = times_circle(a);
    int r = a.rank();
    GroupHom h{at, a, std::vector<std::vector<long long>>(r, std::vector<long long>(r + 1, 0))};
    for (int i = 0; i < r; ++i) h.m[i][i] = 1;
    return h;
}

GroupHom augmentation_hom(const GroupSpec& a, const Character& v) {
    if (v.size() != a.rank()) throw std::invalid_argument("flag: character length mismatch");
    GroupSpec at = times_circle(a);
    int r = a.rank();
    GroupHom h{a, at, std::vector<std::vector<long long>>(r + 1, std::vector<long long>(r, 0))};
    for (int i = 0; i < r; ++i) h.m[i][i] = 1;
    for (int j = 0; j < r; ++j) h.m[r][j] = v.e[j];
    return h;
}

FlagExpansion flag_expand(const GlobalLaw& law, const GroupSpec& a, const Flag& flag,
                          const LawElement& x) {
    law.check_family(a);
    GroupSpec at = times_circle(a);
    if (!(x.group == at))
        throw std::invalid_argument("flag: element must live at " + at.str());
    if (flag.chars.empty()) throw std::invalid_argument("flag: empty flag");
    FlagExpansion out;
    out.flag = flag;
    LawElement cur = x;
    for (const auto& v : flag.chars) {
        // a_i = theta(V^{-1})(x), then divide the difference by y(V)
        LawElement ai = law.restrict_along(augmentation_hom(a, -v), cur);
        LawElement lifted = law.restrict_along(circle_projection(a), ai);
        LawElement diff = law.sub(cur, lifted);
        auto q = law.divide_euler(diff, y_char(v));
        if (!q)
            throw std::invalid_argument(
                "flag: expansion division failed; the law is not a global group law at (" +
                a.str() + ", " + v.str() + ")");
        out.coeffs.push_back(ai);
        cur = *q;
    }
    out.remainder = cur;
    return out;
}

LawElement reassemble(const GlobalLaw& law, const FlagExpansion& e) {
    const GroupSpec& a = e.flag.group;
    GroupSpec at = times_circle(a);
    GroupHom pr = circle_projection(a);
    LawElement acc = law.zero(at);
    LawElement prod = law.one(at);
    for (size_t i = 0; i < e.coeffs.size(); ++i) {
        acc = law.add(acc, law.mul(law.restrict_along(pr, e.coeffs[i]), prod));
        prod = law.mul(prod, euler_class_at(law, at, y_char(e.flag.chars[i])));
    }
    acc = law.add(acc, law.mul(e.remainder, prod));
    return acc;
}

LawElement theta_eval(const GlobalLaw& law, const FlagExpansion& e, const Character& v) {
    const GroupSpec& a = e.flag.group;
    LawElement acc = law.zero(a);
    LawElement prod = law.one(a);
    for (size_t i = 0; i < e.coeffs.size(); ++i) {
        acc = law.add(acc, law.mul(e.coeffs[i], prod));
        prod = law.mul(prod, euler_class_at(law, a, v + e.flag.chars[i]));
    }
    return acc;
}

CompletedFgl completed_fgl(const GlobalLaw& law, const GroupSpec& a, int depth,
                           const std::optional<Flag>& flag_opt) {
    law.check_family(a);
    if (depth < 1) throw std::invalid_argument("flag: depth must be positive");
    Flag flag = flag_opt.value_or(default_flag(a, depth));
    if ((int)flag.chars.size() < depth)
        throw std::invalid_argument("flag: flag shorter than the requested depth");
    flag.chars.resize(depth);
    CompletedFgl out;
    out.base = a;
    out.flag = flag;
    out.depth = depth;
    out.ground = law.value(a).describe();

    int r = a.rank();
    GroupSpec at = times_circle(a);
    GroupSpec att = times_circle(at);

    // y(eps) = expansion of e_{(0, tau)}
    std::vector<long long> eps(r, 0);
    LawElement coordinate_euler = euler_class_at(law, at, y_char(Character(eps)));
    out.coordinate = flag_expand(law, a, flag, coordinate_euler);

    // Delta: restrict along id_A x m and expand doubly
    GroupHom mhom{att, at,
                  std::vector<std::vector<long long>>(r + 1, std::vector<long long>(r + 2, 0))};
    for (int i = 0; i < r; ++i) mhom.m[i][i] = 1;
    mhom.m[r][r] = 1;
    mhom.m[r][r + 1] = 1;
    LawElement me = law.restrict_along(mhom, coordinate_euler);

    // outer expansion along the second circle: flag characters (V_j, 0) of A x T
    Flag outer;
    outer.group = at;
    for (const auto& v : flag.chars) {
        std::vector<long long> w(v.e);
        w.push_back(0);
        outer.chars.push_back(Character(w));
    }
    FlagExpansion second = flag_expand(law, at, outer, me);
    out.delta.assign(depth, std::vector<LawElement>(depth));
    for (int j = 0; j < depth; ++j) {
        FlagExpansion inner = flag_expand(law, a, flag, second.coeffs[j]);
        for (int i = 0; i < depth; ++i) out.delta[i][j] = inner.coeffs[i];
    }

    out.euler.clear();
    for (const auto& v : flag.chars) out.euler.push_back(euler_class_at(law, a, v));
    out.theta.assign(depth, std::vector<LawElement>(depth));
    for (int vi = 0; vi < depth; ++vi) {
        LawElement prod = law.one(a);
        for (int i = 0; i < depth; ++i) {
            prod = law.mul(prod, euler_class_at(law, a, flag.chars[vi] + flag.chars[i]));
            out.theta[vi][i] = prod;
        }
    }
    return out;
}

TruncatedFGL classify_at_trivial(const GlobalLaw& law, int n) {
    GroupSpec one = law.trivial_group();
    CompletedFgl c = completed_fgl(law, one, n + 1);
    Ring k = law.ground();
    auto constant_of = [&](const LawElement& e) {
        if (!e.payload.is_constant())
            throw std::logic_error("flag: non-constant coefficient at the trivial group");
        return e.payload.constant_term();
    };
    if (constant_of(c.delta[0][0]) != 0 || constant_of(c.delta[1][0]) != 1 ||
        constant_of(c.delta[0][1]) != 1)
        throw std::logic_error("flag: coordinate coproduct is not counital");
    TruncatedFGL f(k, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j > n || i >= (int)c.delta.size() || j >= (int)c.delta.size()) continue;
            f.set(i, j, constant_of(c.delta[i][j]));
        }
    return f;
}

TruncatedSeries series_of_circle_element(const GlobalLaw& law, const LaurentPoly& payload,
                                         int trunc) {
    GroupSpec one = law.trivial_group();
    Flag flag = default_flag(one, trunc);
    FlagExpansion e =
        flag_expand(law, one, flag, LawElement(times_circle(one), payload));
    LaurentPoly p(law.ground(), 1);
    for (int i = 0; i < (int)e.coeffs.size(); ++i) {
        if (!e.coeffs[i].payload.is_constant())
            throw std::logic_error("flag: non-constant expansion coefficient at the trivial group");
        p.add_term({i}, e.coeffs[i].payload.constant_term());
    }
    return TruncatedSeries(p, trunc);
}

TruncatedSeries strict_iso(const TruncatedFGL& f, const TruncatedSeries& lambda_hat) {
    if (lambda_hat.nvars() != 1)
        throw std::invalid_argument("flag: lambda series must be univariate");
    if (f.ring.normalize(lambda_hat.constant_term() - 1) != 0)
        throw std::invalid_argument("flag: strictness requires the unit to restrict to 1");
    TruncatedSeries x = TruncatedSeries::variable(f.ring, 1, lambda_hat.trunc(), 0);
    return lambda_hat * x;
}

TruncatedFGL conjugate_fgl(const TruncatedFGL& f, const TruncatedSeries& phi) {
    int trunc = phi.trunc();
    TruncatedSeries inv = reversion(phi);
    TruncatedSeries fxy = f.series2(trunc);
    // phi(F(phi^{-1} x, phi^{-1} y))
    auto lift = [&](const TruncatedSeries& s, int var) {
        LaurentPoly p(f.ring, 2);
        for (const auto& [e, c] : s.poly().terms()) {
            Exponents w(2, 0);
            w[var] = e[0];
            p.add_term(w, c);
        }
        return TruncatedSeries(p, trunc);
    };
    TruncatedSeries inner = fxy.compose({lift(inv, 0), lift(inv, 1)});
    TruncatedSeries result = phi.compose({inner});
    TruncatedFGL out(f.ring, std::min(f.degree, trunc - 1));
    for (const auto& [e, c] : result.poly().terms()) {
        if (e[0] >= 1 && e[1] >= 1 && e[0] + e[1] <= out.degree) out.set(e[0], e[1], c);
    }
    return out;
}

FlagExpansion gamma_expansion(const GlobalLaw& law, const GroupSpec& a, const Character& v,
                              int depth) {
    Flag flag;
    flag.group = a;
    for (int i = 0; i < depth; ++i) flag.chars.push_back(v);
    std::vector<long long> eps(a.rank(), 0);
    LawElement ye = euler_class_at(law, times_circle(a), y_char(Character(eps)));
    return flag_expand(law, a, flag, ye);
}

}  // namespace ggl
