#include "ggl/law.hpp"

#include <algorithm>
#include <climits>

namespace ggl {

namespace {

std::vector<std::string> var_names(const std::string& prefix, int r) {
    if (r == 1) return {prefix};
    std::vector<std::string> out;
    for (int i = 1; i <= r; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

std::vector<Exponents> monomial_rows(const GroupHom& alpha) {
    std::vector<Exponents> images;
    for (int i = 0; i < alpha.target.rank(); ++i) {
        Exponents row(alpha.source.rank());
        for (int j = 0; j < alpha.source.rank(); ++j) row[j] = (int)alpha.m[i][j];
        images.push_back(row);
    }
    return images;
}

LawElement euler_payload(const GlobalLaw& law, const GroupSpec& g, const Character& v) {
    GroupHom hom = GroupHom::from_character(g, v);
    return law.restrict_along(hom, law.coordinate());
}

// ---------------------------------------------------------------------------
// multiplicative law: X(T^r) = k[t_1^{+-1},...], coordinate t - 1

class MultiplicativeLaw final : public GlobalLaw {
public:
    explicit MultiplicativeLaw(Ring k) : k_(k) {}

    Family family() const override { return Family::Tori; }
    Ring ground() const override { return k_; }
    std::string name() const override { return "mult/" + k_.name(); }

    ValueRing value(const GroupSpec& g) const override {
        check_family(g);
        auto vars = var_names("t", g.rank());
        if (g.kind() == GroupSpec::Kind::Quotient)
            return ValueRing::lattice_quotient(k_, g.rank(), vars, g.kernel_chars());
        return ValueRing::free_ring(k_, g.rank(), true, 0, vars);
    }

    LawElement restrict_along(const GroupHom& alpha, const LawElement& x) const override {
        if (!(alpha.target == x.group))
            throw std::invalid_argument("law: element does not live at the hom target");
        alpha.validate();
        LaurentPoly moved = x.payload.substitute_monomials(monomial_rows(alpha), alpha.source.rank());
        return element(alpha.source, moved);
    }

    LawElement coordinate() const override {
        LaurentPoly p(k_, 1);
        p.add_term({1}, 1);
        p.add_term({0}, -1);
        return LawElement(GroupSpec::torus(1), p);
    }

    std::optional<LawElement> divide_euler(const LawElement& x, const Character& v) const override {
        const GroupSpec& g = x.group;
        if (v.size() != g.rank()) throw std::invalid_argument("law: character length mismatch");
        ValueRing vr = value(g);
        LaurentPoly ev = vr.reduce(euler_payload(*this, g, v).payload);
        LaurentPoly xr = vr.reduce(x.payload);
        if (ev.is_zero()) {
            if (xr.is_zero()) return zero(g);
            throw std::invalid_argument("law: division by a vanishing Euler class");
        }
        if (xr.is_zero()) return zero(g);
        if (g.kind() == GroupSpec::Kind::Torus) {
            auto q = exact_divide(xr, ev);
            if (!q) return std::nullopt;
            return LawElement(g, *q);
        }
        // quotient: rewrite exponents so that e_v becomes u_j - 1 for a unit
        // direction j untouched by the kernel lattice
        int r = g.rank();
        int j = -1;
        for (int i = r - 1; i >= 0; --i) {
            if (v.e[i] != 1 && v.e[i] != -1) continue;
            bool clean = true;
            for (const auto& kc : g.kernel_chars())
                if (kc.e[i] != 0) clean = false;
            if (clean) {
                j = i;
                break;
            }
        }
        if (j < 0) {
            auto q = exact_divide(xr, ev);
            if (q && vr.equal(*q * ev, xr)) return LawElement(g, vr.reduce(*q));
            throw UnsupportedError("law: no unit direction for Euler division at " + g.str());
        }
        int sj = (int)v.e[j];
        auto forward = [&](const Exponents& e) {
            Exponents f(e);
            f[j] = sj * e[j];
            for (int i = 0; i < r; ++i)
                if (i != j) f[i] = e[i] - (int)v.e[i] * sj * e[j];
            return f;
        };
        auto backward = [&](const Exponents& e) {
            Exponents f(e);
            f[j] = sj * e[j];
            for (int i = 0; i < r; ++i)
                if (i != j) f[i] = e[i] + (int)v.e[i] * e[j];
            return f;
        };
        // coefficients of the transformed element by u_j-exponent
        std::map<int, LaurentPoly> coefs;
        for (const auto& [e, c] : xr.terms()) {
            Exponents f = forward(e);
            int d = f[j];
            f[j] = 0;
            auto it = coefs.find(d);
            if (it == coefs.end()) it = coefs.emplace(d, LaurentPoly(k_, r)).first;
            it->second.add_term(f, c);
        }
        int dmin = coefs.begin()->first, dmax = coefs.rbegin()->first;
        int m = dmax - dmin;
        auto coef_at = [&](int d) {
            auto it = coefs.find(d + dmin);
            return it == coefs.end() ? LaurentPoly(k_, r) : it->second;
        };
        // synthetic division of sum a_d u^d by (u - 1)
        std::vector<LaurentPoly> b(std::max(m, 1), LaurentPoly(k_, r));
        LaurentPoly rem = coef_at(0);
        if (m > 0) {
            b[m - 1] = coef_at(m);
            for (int d = m - 1; d >= 1; --d) b[d - 1] = coef_at(d) + b[d];
            rem += b[0];
        }
        if (!vr.is_zero(rem)) return std::nullopt;
        LaurentPoly quot(k_, r);
        for (int d = 0; d < m; ++d) {
            for (const auto& [e, c] : b[d].terms()) {
                Exponents f(e);
                f[j] = d + dmin;
                quot.add_term(backward(f), c);
            }
        }
        LawElement out(g, vr.reduce(quot));
        if (!vr.equal(out.payload * ev, xr))
            throw std::logic_error("law: Euler division verification failed");
        return out;
    }

    std::unique_ptr<GlobalLaw> base_changed(const Ring& target) const override {
        if (!ring_map_exists(k_, target))
            throw std::invalid_argument("law: no ring map " + k_.name() + " -> " + target.name());
        return std::make_unique<MultiplicativeLaw>(target);
    }

    std::optional<std::pair<bool, std::optional<LawElement>>> certify_euler_regular(
        const GroupSpec& g, const Character& v) const override {
        // t^v - 1 is regular in k[Z^r/L] iff v has infinite order mod L;
        // otherwise 1 + t^v + ... + t^((n-1)v) is an annihilator
        if (g.kind() == GroupSpec::Kind::Torus)
            return std::make_pair(!v.is_zero(), std::optional<LawElement>{});
        ValueRing vr = value(g);
        std::vector<Int> w(g.rank());
        for (int i = 0; i < g.rank(); ++i) w[i] = v.e[i];
        long long order = -1;  // -1 = infinite
        // order of v mod the lattice: smallest n >= 1 with n*v in L; any such n
        // divides the index of the lattice in its saturation, which divides the
        // product of the HNF pivots
        {
            const RowHnf& lat = vr.lattice();
            // n*v reduced must be 0; n divides det-ish bounds, search up to the
            // product of the pivots
            Int bound = 1;
            for (int i = 0; i < lat.rank; ++i) bound *= lat.h.at(i, lat.pivot_cols[i]);
            for (Int n = 1; n <= bound; ++n) {
                std::vector<Int> nv(w);
                for (auto& x : nv) x *= n;
                if (in_row_lattice(lat, nv)) {
                    order = n.convert_to<long long>();
                    break;
                }
            }
        }
        if (order < 0) return std::make_pair(true, std::optional<LawElement>{});
        if (order == 1) return std::nullopt;  // e_v = 0 there; handled upstream
        LaurentPoly ann(k_, g.rank());
        for (long long i = 0; i < order; ++i) {
            Exponents e(g.rank());
            for (int j = 0; j < g.rank(); ++j) e[j] = (int)(i * v.e[j]);
            ann += LaurentPoly::monomial(k_, g.rank(), e);
        }
        return std::make_pair(false, std::optional<LawElement>(LawElement(g, vr.reduce(ann))));
    }

    std::optional<bool> certify_exactness(const GroupSpec& g, const Character& v) const override {
        if (g.kind() == GroupSpec::Kind::Torus && !v.is_zero() && primitive_and_split(v).split)
            return true;
        return std::nullopt;
    }

private:
    Ring k_;
};

// ---------------------------------------------------------------------------
// additive law: X(T^r) = k[e_1..e_r], Euler classes are linear forms

class AdditiveLaw final : public GlobalLaw {
public:
    explicit AdditiveLaw(Ring k) : k_(k) {}

    Family family() const override { return Family::Tori; }
    Ring ground() const override { return k_; }
    std::string name() const override { return "add/" + k_.name(); }

    ValueRing value(const GroupSpec& g) const override {
        check_family(g);
        auto vars = var_names("e", g.rank());
        if (g.kind() == GroupSpec::Kind::Quotient)
            return ValueRing::linear_torsion(k_, g.rank(), vars, g.kernel_chars());
        return ValueRing::free_ring(k_, g.rank(), false, 0, vars);
    }

    LawElement restrict_along(const GroupHom& alpha, const LawElement& x) const override {
        if (!(alpha.target == x.group))
            throw std::invalid_argument("law: element does not live at the hom target");
        alpha.validate();
        std::vector<LaurentPoly> images;
        for (int i = 0; i < alpha.target.rank(); ++i) {
            LaurentPoly p(k_, alpha.source.rank());
            for (int j = 0; j < alpha.source.rank(); ++j) {
                if (alpha.m[i][j] == 0) continue;
                Exponents e(alpha.source.rank(), 0);
                e[j] = 1;
                p.add_term(e, Rat(alpha.m[i][j]));
            }
            images.push_back(p);
        }
        return element(alpha.source, x.payload.substitute(images));
    }

    LawElement coordinate() const override {
        return LawElement(GroupSpec::torus(1), LaurentPoly::variable(k_, 1, 0));
    }

    std::optional<LawElement> divide_euler(const LawElement& x, const Character& v) const override {
        const GroupSpec& g = x.group;
        if (v.size() != g.rank()) throw std::invalid_argument("law: character length mismatch");
        ValueRing vr = value(g);
        LaurentPoly ev = vr.reduce(euler_payload(*this, g, v).payload);
        LaurentPoly xr = vr.reduce(x.payload);
        if (ev.is_zero()) {
            if (xr.is_zero()) return zero(g);
            throw std::invalid_argument("law: division by a vanishing Euler class");
        }
        if (g.kind() == GroupSpec::Kind::Torus) {
            auto q = exact_divide(xr, ev);
            if (!q) return std::nullopt;
            return LawElement(g, *q);
        }
        int r = g.rank();
        int j = -1;
        for (int i = r - 1; i >= 0; --i) {
            if (v.e[i] != 1 && v.e[i] != -1) continue;
            bool clean = true;
            for (const auto& kc : g.kernel_chars())
                if (kc.e[i] != 0) clean = false;
            if (clean) {
                j = i;
                break;
            }
        }
        if (j < 0) {
            auto q = exact_divide(xr, ev);
            if (q && vr.equal(*q * ev, xr)) return LawElement(g, vr.reduce(*q));
            throw UnsupportedError("law: no unit direction for Euler division at " + g.str());
        }
        // substitute e_j = s*(w - sum_{i != j} v_i e_i) so that e_v becomes w
        // (slot j holds w); the kernel relations do not involve e_j
        Rat s = k_.invert(Rat(v.e[j]));
        std::vector<LaurentPoly> to_w;
        for (int i = 0; i < r; ++i) {
            if (i != j) {
                to_w.push_back(LaurentPoly::variable(k_, r, i));
                continue;
            }
            LaurentPoly p(k_, r);
            Exponents w(r, 0);
            w[j] = 1;
            p.add_term(w, s);
            for (int i2 = 0; i2 < r; ++i2) {
                if (i2 == j || v.e[i2] == 0) continue;
                Exponents e(r, 0);
                e[i2] = 1;
                p.add_term(e, -s * Rat(v.e[i2]));
            }
            to_w.push_back(p);
        }
        LaurentPoly z = xr.substitute(to_w);
        LaurentPoly part0(k_, r), rest(k_, r);
        for (const auto& [e, c] : z.terms()) {
            if (e[j] == 0)
                part0.add_term(e, c);
            else {
                Exponents f(e);
                f[j] -= 1;
                rest.add_term(f, c);
            }
        }
        if (!vr.is_zero(part0)) return std::nullopt;
        // substitute w back: slot j -> e_v
        std::vector<LaurentPoly> from_w;
        for (int i = 0; i < r; ++i)
            from_w.push_back(i == j ? ev : LaurentPoly::variable(k_, r, i));
        LawElement out(g, vr.reduce(rest.substitute(from_w)));
        if (!vr.equal(out.payload * ev, xr))
            throw std::logic_error("law: Euler division verification failed");
        return out;
    }

    std::unique_ptr<GlobalLaw> base_changed(const Ring& target) const override {
        if (!ring_map_exists(k_, target))
            throw std::invalid_argument("law: no ring map " + k_.name() + " -> " + target.name());
        return std::make_unique<AdditiveLaw>(target);
    }

    std::optional<std::pair<bool, std::optional<LawElement>>> certify_euler_regular(
        const GroupSpec& g, const Character& v) const override {
        ValueRing vr = value(g);
        if (vr.certified_domain()) {
            bool nz = !vr.is_zero(euler_payload(*this, g, v).payload);
            return std::make_pair(nz, std::optional<LawElement>{});
        }
        return std::nullopt;
    }

    std::optional<bool> certify_exactness(const GroupSpec& g, const Character& v) const override {
        if (g.kind() == GroupSpec::Kind::Torus && !v.is_zero() && primitive_and_split(v).split)
            return true;
        return std::nullopt;
    }

private:
    Ring k_;
};

// ---------------------------------------------------------------------------
// additive 2-torsion law over F_2 on elementary abelian 2-groups

class TwoTorsionAdditiveLaw final : public GlobalLaw {
public:
    TwoTorsionAdditiveLaw() : k_(Ring::prime_field(2)) {}

    Family family() const override { return Family::Elem2; }
    Ring ground() const override { return k_; }
    std::string name() const override { return "2tor-add"; }

    ValueRing value(const GroupSpec& g) const override {
        check_family(g);
        return ValueRing::free_ring(k_, g.rank(), false, 0, var_names("e", g.rank()));
    }

    LawElement restrict_along(const GroupHom& alpha, const LawElement& x) const override {
        if (!(alpha.target == x.group))
            throw std::invalid_argument("law: element does not live at the hom target");
        alpha.validate();
        std::vector<LaurentPoly> images;
        for (int i = 0; i < alpha.target.rank(); ++i) {
            LaurentPoly p(k_, alpha.source.rank());
            for (int j = 0; j < alpha.source.rank(); ++j) {
                if (alpha.m[i][j] % 2 == 0) continue;
                Exponents e(alpha.source.rank(), 0);
                e[j] = 1;
                p.add_term(e, 1);
            }
            images.push_back(p);
        }
        return element(alpha.source, x.payload.substitute(images));
    }

    LawElement coordinate() const override {
        return LawElement(GroupSpec::elem2(1), LaurentPoly::variable(k_, 1, 0));
    }

    std::optional<LawElement> divide_euler(const LawElement& x, const Character& v) const override {
        ValueRing vr = value(x.group);
        LaurentPoly ev = vr.reduce(euler_payload(*this, x.group, v).payload);
        LaurentPoly xr = vr.reduce(x.payload);
        if (ev.is_zero()) {
            if (xr.is_zero()) return zero(x.group);
            throw std::invalid_argument("law: division by a vanishing Euler class");
        }
        auto q = exact_divide(xr, ev);
        if (!q) return std::nullopt;
        return LawElement(x.group, *q);
    }

    std::unique_ptr<GlobalLaw> base_changed(const Ring& target) const override {
        if (target != k_)
            throw std::invalid_argument("law: 2-torsion law only exists over F2");
        return std::make_unique<TwoTorsionAdditiveLaw>();
    }

    std::optional<std::pair<bool, std::optional<LawElement>>> certify_euler_regular(
        const GroupSpec& g, const Character& v) const override {
        bool nz = !value(g).is_zero(euler_payload(*this, g, v).payload);
        return std::make_pair(nz, std::optional<LawElement>{});
    }

    std::optional<bool> certify_exactness(const GroupSpec& g, const Character& v) const override {
        (void)g;
        Character red = v;
        for (auto& x : red.e) x = ((x % 2) + 2) % 2;
        return !red.is_zero();
    }

private:
    Ring k_;
};

// ---------------------------------------------------------------------------
// complete law of a truncated formal group law

class FglLaw final : public GlobalLaw {
public:
    FglLaw(TruncatedFGL f, int series_degree)
        : f_(std::move(f)), trunc_(std::max(series_degree, f_.degree) + 1) {}

    Family family() const override { return Family::Tori; }
    Ring ground() const override { return f_.ring; }
    std::string name() const override { return "fgl/" + f_.ring.name(); }
    const TruncatedFGL& fgl() const { return f_; }
    int trunc() const { return trunc_; }

    ValueRing value(const GroupSpec& g) const override {
        check_family(g);
        auto vars = var_names("x", g.rank());
        if (g.kind() != GroupSpec::Kind::Quotient)
            return ValueRing::free_ring(f_.ring, g.rank(), false, trunc_, vars);
        // relations [V]_F for the kernel characters; a complete normal form is
        // available when every kernel character is supported on one variable
        std::vector<LaurentPoly> relations;
        std::vector<std::pair<int, LaurentPoly>> var_relations;
        bool supported = true;
        for (const auto& kc : g.kernel_chars()) {
            TruncatedSeries rel = f_.f_combination(kc.e, g.rank(), trunc_);
            relations.push_back(rel.poly());
            int support = -1;
            bool single = true;
            for (int i = 0; i < g.rank(); ++i) {
                if (kc.e[i] == 0) continue;
                if (support >= 0) single = false;
                support = i;
            }
            if (single && support >= 0 && !rel.is_zero())
                var_relations.push_back({support, rel.poly()});
            else if (!single)
                supported = false;
        }
        return ValueRing::series_per_var(f_.ring, g.rank(), trunc_, vars, relations, var_relations,
                                         supported);
    }

    LawElement restrict_along(const GroupHom& alpha, const LawElement& x) const override {
        if (!(alpha.target == x.group))
            throw std::invalid_argument("law: element does not live at the hom target");
        alpha.validate();
        int src = alpha.source.rank();
        std::vector<TruncatedSeries> images;
        for (int i = 0; i < alpha.target.rank(); ++i)
            images.push_back(f_.f_combination(alpha.m[i], src, trunc_));
        TruncatedSeries moved = TruncatedSeries(x.payload, trunc_).compose(images);
        return element(alpha.source, moved.poly());
    }

    LawElement coordinate() const override {
        return LawElement(GroupSpec::torus(1), LaurentPoly::variable(f_.ring, 1, 0));
    }

    std::optional<LawElement> divide_euler(const LawElement& x, const Character& v) const override {
        const GroupSpec& g = x.group;
        if (g.kind() != GroupSpec::Kind::Torus)
            throw UnsupportedError("law: series Euler division is implemented at tori");
        int r = g.rank();
        ValueRing vr = value(g);
        TruncatedSeries ev = f_.f_combination(v.e, r, trunc_);
        LaurentPoly xr = vr.reduce(x.payload);
        if (ev.is_zero()) {
            if (xr.is_zero()) return zero(g);
            throw std::invalid_argument("law: division by a vanishing Euler class");
        }
        int j = -1;
        for (int i = r - 1; i >= 0; --i)
            if (v.e[i] != 0 && f_.ring.is_unit(Rat(v.e[i]))) {
                j = i;
                break;
            }
        if (j < 0) throw UnsupportedError("law: no unit linear direction for series division");
        Rat s = f_.ring.invert(Rat(v.e[j]));
        // invert w = ev(x) for x_j: psi(x_{-j}, w) with slot j carrying w
        TruncatedSeries w = TruncatedSeries::variable(f_.ring, r, trunc_, j);
        TruncatedSeries linear(f_.ring, r, trunc_);
        {
            LaurentPoly lp(f_.ring, r);
            for (int i = 0; i < r; ++i) {
                if (i == j || v.e[i] == 0) continue;
                Exponents e(r, 0);
                e[i] = 1;
                lp.add_term(e, Rat(v.e[i]));
            }
            linear = TruncatedSeries(lp, trunc_);
        }
        // tail = ev - full linear part
        TruncatedSeries tail = ev;
        {
            LaurentPoly lp(f_.ring, r);
            for (int i = 0; i < r; ++i) {
                if (v.e[i] == 0) continue;
                Exponents e(r, 0);
                e[i] = 1;
                lp.add_term(e, Rat(v.e[i]));
            }
            tail = ev - TruncatedSeries(lp, trunc_);
        }
        TruncatedSeries psi = (w - linear) * s;
        for (int it = 0; it < trunc_; ++it) {
            std::vector<TruncatedSeries> args;
            for (int i = 0; i < r; ++i)
                args.push_back(i == j ? psi : TruncatedSeries::variable(f_.ring, r, trunc_, i));
            psi = (w - linear - tail.compose(args)) * s;
        }
        std::vector<TruncatedSeries> subst;
        for (int i = 0; i < r; ++i)
            subst.push_back(i == j ? psi : TruncatedSeries::variable(f_.ring, r, trunc_, i));
        TruncatedSeries xt = TruncatedSeries(xr, trunc_).compose(subst);
        LaurentPoly part0(f_.ring, r), rest(f_.ring, r);
        for (const auto& [e, c] : xt.poly().terms()) {
            if (e[j] == 0)
                part0.add_term(e, c);
            else {
                Exponents f(e);
                f[j] -= 1;
                rest.add_term(f, c);
            }
        }
        if (!part0.is_zero()) return std::nullopt;
        std::vector<TruncatedSeries> back;
        for (int i = 0; i < r; ++i)
            back.push_back(i == j ? ev : TruncatedSeries::variable(f_.ring, r, trunc_, i));
        TruncatedSeries result = TruncatedSeries(rest, trunc_).compose(back);
        LawElement out(g, vr.reduce(result.poly()));
        if (!vr.equal(out.payload * ev.poly(), xr))
            throw std::logic_error("law: series Euler division verification failed");
        return out;
    }

    std::unique_ptr<GlobalLaw> base_changed(const Ring& target) const override {
        return std::make_unique<FglLaw>(f_.mapped_into(target), trunc_ - 1);
    }

    std::optional<std::pair<bool, std::optional<LawElement>>> certify_euler_regular(
        const GroupSpec& g, const Character& v) const override {
        // value rings present completions k[[x_1..x_r]]; a nonzero series is
        // regular there, judged through the truncation
        if (g.kind() != GroupSpec::Kind::Torus) return std::nullopt;
        bool nz = !f_.f_combination(v.e, g.rank(), trunc_).is_zero();
        return std::make_pair(nz, std::optional<LawElement>{});
    }

    std::optional<bool> certify_exactness(const GroupSpec& g, const Character& v) const override {
        if (g.kind() == GroupSpec::Kind::Torus && !v.is_zero() && primitive_and_split(v).split)
            return true;
        return std::nullopt;
    }

private:
    TruncatedFGL f_;
    int trunc_;
};

// ---------------------------------------------------------------------------
// coordinate change e' = lambda * e

class CoordinateChangedLaw final : public GlobalLaw {
public:
    CoordinateChangedLaw(std::unique_ptr<GlobalLaw> inner, LaurentPoly lambda)
        : inner_(std::move(inner)), lambda_(std::move(lambda)) {}

    Family family() const override { return inner_->family(); }
    Ring ground() const override { return inner_->ground(); }
    std::string name() const override { return inner_->name() + "[coord-changed]"; }
    const GlobalLaw& inner() const { return *inner_; }
    const LaurentPoly& lambda() const { return lambda_; }

    ValueRing value(const GroupSpec& g) const override { return inner_->value(g); }

    LawElement restrict_along(const GroupHom& alpha, const LawElement& x) const override {
        return inner_->restrict_along(alpha, x);
    }

    LawElement coordinate() const override {
        LawElement e = inner_->coordinate();
        return LawElement(e.group, value(e.group).mul(lambda_, e.payload));
    }

    std::optional<LawElement> divide_euler(const LawElement& x, const Character& v) const override {
        // e'_v = V^*(lambda) * e_v with V^*(lambda) a unit
        GroupHom hom = GroupHom::from_character(x.group, v);
        LawElement lam_at = inner_->restrict_along(hom, LawElement(coordinate_group(), lambda_));
        ValueRing vr = value(x.group);
        LaurentPoly inv = vr.invert_unit(lam_at.payload);
        LawElement scaled(x.group, vr.mul(x.payload, inv));
        return inner_->divide_euler(scaled, v);
    }

    std::unique_ptr<GlobalLaw> base_changed(const Ring& target) const override {
        auto in = inner_->base_changed(target);
        return std::make_unique<CoordinateChangedLaw>(std::move(in), lambda_.mapped_into(target));
    }

    // the new Euler classes differ from the old ones by units
    std::optional<std::pair<bool, std::optional<LawElement>>> certify_euler_regular(
        const GroupSpec& g, const Character& v) const override {
        return inner_->certify_euler_regular(g, v);
    }
    std::optional<bool> certify_exactness(const GroupSpec& g, const Character& v) const override {
        return inner_->certify_exactness(g, v);
    }

private:
    std::unique_ptr<GlobalLaw> inner_;
    LaurentPoly lambda_;
};

}  // namespace

std::unique_ptr<GlobalLaw> multiplicative_law(const Ring& k) {
    return std::make_unique<MultiplicativeLaw>(k);
}

std::unique_ptr<GlobalLaw> additive_law(const Ring& k) { return std::make_unique<AdditiveLaw>(k); }

std::unique_ptr<GlobalLaw> two_torsion_additive_law() {
    return std::make_unique<TwoTorsionAdditiveLaw>();
}

std::unique_ptr<GlobalLaw> from_fgl(const TruncatedFGL& f, int series_degree) {
    if (auto err = f.validity_error())
        throw std::invalid_argument("law: invalid formal group law: " + *err);
    return std::make_unique<FglLaw>(f, series_degree);
}

std::unique_ptr<GlobalLaw> base_change(const GlobalLaw& x, const Ring& target) {
    return x.base_changed(target);
}

std::unique_ptr<GlobalLaw> change_coordinate(const GlobalLaw& x, const LaurentPoly& lambda) {
    GroupSpec t = x.family() == Family::Tori ? GroupSpec::torus(1) : GroupSpec::elem2(1);
    ValueRing vr = x.value(t);
    LaurentPoly lam = vr.reduce(lambda);
    auto unit = vr.try_is_unit(lam);
    if (!unit.has_value())
        throw UnsupportedError("law: cannot decide whether the coordinate-change unit is invertible");
    if (!*unit) throw std::invalid_argument("law: coordinate change requires a unit");
    LawElement at_one = x.restrict_along(GroupHom::from_trivial(t), LawElement(t, lam));
    if (!x.value(x.trivial_group()).equal(at_one.payload,
                                          LaurentPoly::constant(x.ground(), 0, 1)))
        throw std::invalid_argument("law: coordinate-change unit must restrict to 1");
    // clone the inner law by base-changing to its own ground ring
    auto inner = x.base_changed(x.ground());
    return std::make_unique<CoordinateChangedLaw>(std::move(inner), lam);
}

}  // namespace ggl
