#include "ggl/law.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ggl {

namespace {

IntMat chars_to_mat(const std::vector<Character>& rows, int cols) {
    IntMat m((int)rows.size(), cols);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i].e[j];
    return m;
}

}  // namespace

ValueRing ValueRing::free_ring(Ring k, int nvars, bool laurent, int trunc,
                               std::vector<std::string> vars) {
    ValueRing r(k, nvars);
    r.laurent_ = laurent;
    r.trunc_ = trunc;
    r.vars_ = std::move(vars);
    r.strategy_ = Strategy::Free;
    r.domain_ = trunc == 0;  // truncated rings have nilpotents
    return r;
}

ValueRing ValueRing::lattice_quotient(Ring k, int nvars, std::vector<std::string> vars,
                                      const std::vector<Character>& kernel_chars) {
    ValueRing r(k, nvars);
    r.laurent_ = true;
    r.vars_ = std::move(vars);
    r.strategy_ = Strategy::LatticeQuotient;
    IntMat lat = chars_to_mat(kernel_chars, nvars);
    r.lattice_ = row_hnf(lat);
    r.finite_ = r.lattice_.rank == nvars;
    // torsion-free quotient lattice <=> group ring is again a Laurent ring
    auto snf = smith_normal_form(lat);
    bool torsion = false;
    for (const Int& d : snf.diagonal())
        if (d != 0 && d != 1) torsion = true;
    r.domain_ = !torsion;
    for (const auto& v : kernel_chars) {
        Exponents e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = (int)v.e[i];
        LaurentPoly rel = LaurentPoly::monomial(k, nvars, e) - LaurentPoly::constant(k, nvars, 1);
        r.relations_.push_back(rel);
    }
    return r;
}

ValueRing ValueRing::linear_torsion(Ring k, int nvars, std::vector<std::string> vars,
                                    const std::vector<Character>& kernel_chars) {
    ValueRing r(k, nvars);
    r.vars_ = std::move(vars);
    r.strategy_ = Strategy::LinearTorsion;
    for (const auto& v : kernel_chars) {
        LaurentPoly rel(k, nvars);
        for (int i = 0; i < nvars; ++i) {
            if (v.e[i] == 0) continue;
            Exponents e(nvars, 0);
            e[i] = 1;
            rel.add_term(e, Rat(v.e[i]));
        }
        r.relations_.push_back(rel);
    }
    // diagonalize: U L W = D, substitute e = W f so the relation lattice
    // becomes d_m f_m
    IntMat lat = chars_to_mat(kernel_chars, nvars);
    auto snf = smith_normal_form(lat);
    IntMat w = snf.v;
    // W is unimodular; its inverse gives the f -> e direction
    auto winv_hnf = row_hnf(w);
    // invert exactly: w * winv = I, solve by unimodularity via adjugate-free route:
    // row_hnf(w).h == I and u * w = I, so u is the inverse.
    if (winv_hnf.rank != nvars) throw std::logic_error("law: SNF transform not unimodular");
    IntMat winv = winv_hnf.u;  // u * w = h = I (h has unit diagonal since w is unimodular)
    for (int i = 0; i < nvars; ++i)
        if (winv_hnf.h.at(i, i) != 1) throw std::logic_error("law: SNF transform not unimodular");
    auto linear_images = [&](const IntMat& m) {
        // images[i] = sum_j m(i,j) * var_j
        std::vector<LaurentPoly> out;
        for (int i = 0; i < nvars; ++i) {
            LaurentPoly p(k, nvars);
            for (int j = 0; j < nvars; ++j) {
                if (m.at(i, j) == 0) continue;
                Exponents e(nvars, 0);
                e[j] = 1;
                p.add_term(e, Rat(m.at(i, j)));
            }
            out.push_back(p);
        }
        return out;
    };
    r.to_internal_ = linear_images(w);        // e_i = sum_m W[i][m] f_m
    r.from_internal_ = linear_images(winv);   // f_m = sum_i Winv[m][i] e_i
    r.torsion_.assign(nvars, Int(0));
    auto diag = snf.diagonal();
    for (int m = 0; m < (int)diag.size(); ++m) r.torsion_[m] = diag[m];
    // domain iff every nonzero torsion entry is a unit of k
    r.domain_ = true;
    for (const Int& d : r.torsion_) {
        if (d == 0) continue;
        Rat dn = k.normalize(Rat(d));
        if (dn != 0 && !k.is_unit(dn)) r.domain_ = false;
    }
    return r;
}

ValueRing ValueRing::series_per_var(Ring k, int nvars, int trunc, std::vector<std::string> vars,
                                    std::vector<LaurentPoly> relations,
                                    std::vector<std::pair<int, LaurentPoly>> var_relations,
                                    bool nf_supported) {
    ValueRing r(k, nvars);
    r.trunc_ = trunc;
    r.vars_ = std::move(vars);
    r.strategy_ = Strategy::SeriesPerVar;
    r.relations_ = std::move(relations);
    r.var_relations_ = std::move(var_relations);
    r.nf_supported_ = nf_supported;
    r.domain_ = false;
    return r;
}

LaurentPoly ValueRing::reduce(const LaurentPoly& p) const {
    if (p.ring() != coeff_ || p.nvars() != nvars_)
        throw std::invalid_argument("law: element does not belong to this value ring");
    if (!laurent_ && !p.is_polynomial())
        throw std::invalid_argument("law: negative exponents in a polynomial value ring");
    LaurentPoly q = trunc_ > 0 ? p.truncated(trunc_) : p;
    switch (strategy_) {
        case Strategy::Free: return q;
        case Strategy::LatticeQuotient: return reduce_lattice(q);
        case Strategy::LinearTorsion: return reduce_linear_torsion(q);
        case Strategy::SeriesPerVar: return reduce_series(q);
    }
    return q;
}

LaurentPoly ValueRing::reduce_lattice(const LaurentPoly& p) const {
    LaurentPoly out(coeff_, nvars_);
    for (const auto& [e, c] : p.terms()) {
        std::vector<Int> v(nvars_);
        for (int i = 0; i < nvars_; ++i) v[i] = e[i];
        auto red = reduce_mod_row_lattice(lattice_, v);
        Exponents f(nvars_);
        for (int i = 0; i < nvars_; ++i) f[i] = red[i].convert_to<int>();
        out.add_term(f, c);
    }
    return out;
}

LaurentPoly ValueRing::reduce_linear_torsion(const LaurentPoly& p) const {
    // express p in the internal f-variables via e = W f
    LaurentPoly internal = p.substitute(to_internal_);
    LaurentPoly reduced(coeff_, nvars_);
    for (const auto& [e, c] : internal.terms()) {
        // torsion gcd over the internal variables appearing in this monomial
        Int g = 0;
        for (int m = 0; m < nvars_; ++m) {
            if (e[m] <= 0) continue;
            const Int& d = torsion_[m];
            if (d == 0) continue;
            Rat dn = coeff_.normalize(Rat(d));
            if (dn == 0) continue;  // relation vanishes in this ring
            if (coeff_.is_field()) {
                g = 1;  // unit torsion kills the coefficient
                break;
            }
            g = boost::multiprecision::gcd(g, d);
        }
        if (g == 0) {
            reduced.add_term(e, c);
            continue;
        }
        if (coeff_.is_field() || g == 1) continue;
        auto [q, rem] = coeff_.divmod(c, Rat(g));
        (void)q;
        if (rem != 0) reduced.add_term(e, rem);
    }
    return reduced.substitute(from_internal_);
}

LaurentPoly ValueRing::reduce_series(const LaurentPoly& p) const {
    LaurentPoly cur = p.truncated(trunc_);
    for (const auto& [var, rel] : var_relations_) {
        if (rel.is_zero()) continue;
        // lowest term of the univariate relation in this variable
        int d0 = -1;
        Rat c0;
        for (const auto& [e, c] : rel.terms()) {
            if (d0 < 0 || e[var] < d0) {
                d0 = e[var];
                c0 = c;
            }
        }
        if (d0 <= 0) throw std::logic_error("law: series relation without positive lowest degree");
        // process var-degrees upward, reducing each coefficient mod c0
        for (int d = d0; d < trunc_; ++d) {
            std::vector<std::pair<Exponents, Rat>> at_degree;
            for (const auto& [e, c] : cur.terms())
                if (e[var] == d) at_degree.push_back({e, c});
            for (const auto& [e, c] : at_degree) {
                auto [q, rem] = coeff_.divmod(c, c0);
                if (q == 0) continue;
                // subtract q * t^(e - d0*var) * rel, which replaces c by rem
                Exponents shift = e;
                shift[var] -= d0;
                LaurentPoly corr = rel.shifted(shift) * q;
                cur = (cur - corr).truncated(trunc_);
            }
        }
    }
    return cur;
}

bool ValueRing::equal(const LaurentPoly& a, const LaurentPoly& b) const {
    LaurentPoly d = reduce(a - b);
    if (d.is_zero()) return true;
    if (!nf_supported_)
        throw UnsupportedError("law: presentation has no complete normal form; cannot certify inequality");
    return false;
}

LaurentPoly ValueRing::mul(const LaurentPoly& a, const LaurentPoly& b) const {
    return reduce(a * b);
}

std::optional<bool> ValueRing::try_is_unit(const LaurentPoly& p) const {
    LaurentPoly r = reduce(p);
    if (r.is_zero()) return false;
    switch (strategy_) {
        case Strategy::Free:
            if (trunc_ > 0) return coeff_.is_unit(r.constant_term());
            if (laurent_) return r.is_monomial() && coeff_.is_unit(r.leading_term().second);
            return r.is_constant() && coeff_.is_unit(r.constant_term());
        case Strategy::LatticeQuotient: {
            if (r.is_monomial() && coeff_.is_unit(r.leading_term().second)) return true;
            if (finite_) return invert_in_finite_quotient(r).has_value();
            return std::nullopt;
        }
        case Strategy::LinearTorsion: {
            if (domain_) return r.is_constant() && coeff_.is_unit(r.constant_term());
            return std::nullopt;
        }
        case Strategy::SeriesPerVar:
            if (!nf_supported_) return std::nullopt;
            return coeff_.is_unit(r.constant_term());
    }
    return std::nullopt;
}

LaurentPoly ValueRing::invert_unit(const LaurentPoly& p) const {
    LaurentPoly r = reduce(p);
    auto known = try_is_unit(r);
    if (known.has_value() && !*known)
        throw std::invalid_argument("law: element is not a unit: " + poly_str(r));
    switch (strategy_) {
        case Strategy::Free:
            if (trunc_ > 0) return TruncatedSeries(r, trunc_).inverse().poly();
            if (laurent_ && r.is_monomial()) {
                auto [e, c] = r.leading_term();
                Exponents inv(nvars_);
                for (int i = 0; i < nvars_; ++i) inv[i] = -e[i];
                return LaurentPoly::monomial(coeff_, nvars_, inv, coeff_.invert(c));
            }
            if (r.is_constant()) return LaurentPoly::constant(coeff_, nvars_, coeff_.invert(r.constant_term()));
            break;
        case Strategy::LatticeQuotient: {
            if (r.is_monomial() && coeff_.is_unit(r.leading_term().second)) {
                auto [e, c] = r.leading_term();
                Exponents inv(nvars_);
                for (int i = 0; i < nvars_; ++i) inv[i] = -e[i];
                return reduce(LaurentPoly::monomial(coeff_, nvars_, inv, coeff_.invert(c)));
            }
            if (finite_) {
                auto q = invert_in_finite_quotient(r);
                if (!q) throw std::invalid_argument("law: element is not a unit: " + poly_str(r));
                return *q;
            }
            break;
        }
        case Strategy::LinearTorsion:
            if (r.is_constant()) return LaurentPoly::constant(coeff_, nvars_, coeff_.invert(r.constant_term()));
            break;
        case Strategy::SeriesPerVar:
            if (nf_supported_) {
                // Newton iteration inside the quotient presentation
                Rat c = r.constant_term();
                LaurentPoly g = LaurentPoly::constant(coeff_, nvars_, coeff_.invert(c));
                LaurentPoly two = LaurentPoly::constant(coeff_, nvars_, 2);
                for (int prec = 1; prec < trunc_; prec *= 2) g = reduce(g * (two - mul(r, g)));
                if (is_zero(mul(r, g) - LaurentPoly::constant(coeff_, nvars_, 1))) return g;
                throw std::invalid_argument("law: element is not a unit: " + poly_str(r));
            }
            break;
    }
    throw UnsupportedError("law: cannot invert in this presentation: " + poly_str(r));
}

std::optional<LaurentPoly> ValueRing::invert_in_finite_quotient(const LaurentPoly& p) const {
    // enumerate the canonical monomial representatives (finite fundamental domain)
    std::vector<Exponents> basis = monomial_basis(-1);
    std::map<Exponents, int, GrlexLess> index;
    for (int i = 0; i < (int)basis.size(); ++i) index.emplace(basis[i], i);
    int n = (int)basis.size();
    // multiplication matrix of p over Q (coefficients are exact rationals)
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int j = 0; j < n; ++j) {
        LaurentPoly col = reduce(p * LaurentPoly::monomial(coeff_, nvars_, basis[j]));
        for (const auto& [e, c] : col.terms()) m[index.at(e)][j] = c;
    }
    // solve m * y = e_unit (the representative of 1)
    LaurentPoly one_red = reduce(LaurentPoly::constant(coeff_, nvars_, 1));
    std::vector<Rat> rhs(n, Rat(0));
    for (const auto& [e, c] : one_red.terms()) rhs[index.at(e)] = c;
    // Gaussian elimination over Q
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        Rat lead = m[row][col];
        for (int j = 0; j < n; ++j) m[row][j] /= lead;
        rhs[row] /= lead;
        for (int i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[row][j];
            rhs[i] -= f * rhs[row];
        }
        ++row;
    }
    LaurentPoly out(coeff_, nvars_);
    for (int i = 0; i < n; ++i) {
        if (!coeff_.contains(rhs[i])) return std::nullopt;
        out.add_term(basis[i], rhs[i]);
    }
    if (!is_zero(mul(p, out) - LaurentPoly::constant(coeff_, nvars_, 1))) return std::nullopt;
    return out;
}

std::vector<Exponents> ValueRing::monomial_basis(int bound) const {
    std::vector<Exponents> out;
    if (strategy_ == Strategy::LatticeQuotient && finite_ && bound < 0) {
        // the full fundamental domain of the lattice
        std::vector<int> limits(nvars_);
        for (int i = 0; i < nvars_; ++i)
            limits[i] = lattice_.h.at(i, lattice_.pivot_cols[i]).convert_to<int>();
        std::map<Exponents, bool, GrlexLess> seen;
        // iterate the box and reduce; dedupe canonical representatives
        std::vector<int> idx(nvars_, 0);
        while (true) {
            std::vector<Int> v(nvars_);
            for (int i = 0; i < nvars_; ++i) v[i] = idx[i];
            auto red = reduce_mod_row_lattice(lattice_, v);
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = red[i].convert_to<int>();
            if (!seen.count(e)) {
                seen.emplace(e, true);
                out.push_back(e);
            }
            int k = nvars_ - 1;
            while (k >= 0 && ++idx[k] >= limits[k]) idx[k--] = 0;
            if (k < 0) break;
        }
        return out;
    }
    if (bound < 0) throw std::invalid_argument("law: monomial basis needs a bound");
    // enumerate exponents: Laurent rings use the box [-bound, bound]^n,
    // polynomial rings total degree <= bound
    std::map<Exponents, bool, GrlexLess> seen;
    Exponents cur(nvars_, laurent_ ? -bound : 0);
    if (nvars_ == 0) return {Exponents{}};
    while (true) {
        int deg = 0;
        for (int x : cur) deg += laurent_ ? std::abs(x) : x;
        if (deg <= bound) {
            LaurentPoly m = reduce(LaurentPoly::monomial(coeff_, nvars_, cur));
            if (!m.is_zero() && m.is_monomial() && m.leading_term().second == 1) {
                Exponents e = m.leading_term().first;
                if (!seen.count(e)) {
                    seen.emplace(e, true);
                    out.push_back(e);
                }
            }
        }
        int k = nvars_ - 1;
        while (k >= 0 && ++cur[k] > bound) cur[k--] = laurent_ ? -bound : 0;
        if (k < 0) break;
    }
    return out;
}

std::string ValueRing::describe() const {
    std::ostringstream out;
    out << coeff_.name() << "[";
    for (int i = 0; i < nvars_; ++i) {
        if (i) out << ", ";
        out << vars_[i];
        if (laurent_) out << "^+-1";
    }
    out << "]";
    if (trunc_ > 0) out << " (total degree < " << trunc_ << ")";
    if (!relations_.empty()) {
        out << " / (";
        for (size_t i = 0; i < relations_.size(); ++i) {
            if (i) out << ", ";
            out << relations_[i].str(vars_);
        }
        out << ")";
    }
    return out.str();
}

GroupSpec GlobalLaw::coordinate_group() const {
    return family() == Family::Tori ? GroupSpec::torus(1) : GroupSpec::elem2(1);
}

GroupSpec GlobalLaw::trivial_group() const {
    return family() == Family::Tori ? GroupSpec::trivial() : GroupSpec::elem2(0);
}

void GlobalLaw::check_family(const GroupSpec& g) const {
    bool e2 = g.kind() == GroupSpec::Kind::Elem2;
    if (e2 != (family() == Family::Elem2))
        throw std::invalid_argument("law: group " + g.str() + " is not in the family of " + name());
}

LawElement GlobalLaw::zero(const GroupSpec& g) const {
    check_family(g);
    return LawElement(g, LaurentPoly::zero(ground(), g.rank()));
}

LawElement GlobalLaw::one(const GroupSpec& g) const {
    check_family(g);
    return LawElement(g, LaurentPoly::constant(ground(), g.rank(), 1));
}

LawElement GlobalLaw::element(const GroupSpec& g, const LaurentPoly& p) const {
    check_family(g);
    return LawElement(g, value(g).reduce(p));
}

LawElement GlobalLaw::add(const LawElement& a, const LawElement& b) const {
    if (a.group != b.group) throw std::invalid_argument("law: elements at different groups");
    return LawElement(a.group, value(a.group).reduce(a.payload + b.payload));
}

LawElement GlobalLaw::sub(const LawElement& a, const LawElement& b) const {
    if (a.group != b.group) throw std::invalid_argument("law: elements at different groups");
    return LawElement(a.group, value(a.group).reduce(a.payload - b.payload));
}

LawElement GlobalLaw::mul(const LawElement& a, const LawElement& b) const {
    if (a.group != b.group) throw std::invalid_argument("law: elements at different groups");
    return LawElement(a.group, value(a.group).mul(a.payload, b.payload));
}

bool GlobalLaw::equal(const LawElement& a, const LawElement& b) const {
    if (a.group != b.group) return false;
    return value(a.group).equal(a.payload, b.payload);
}

bool GlobalLaw::is_zero(const LawElement& a) const { return value(a.group).is_zero(a.payload); }

LawElement GlobalLaw::restrict_to_trivial(const LawElement& x) const {
    return restrict_along(GroupHom::from_trivial(x.group), x);
}

ValueRing kan_value(const GlobalLaw& x, const GroupSpec& g) {
    if (x.family() != Family::Tori)
        throw std::invalid_argument("law: kan_value applies to laws on tori");
    return x.value(g);
}

LawElement kan_restrict(const GlobalLaw& x, const GroupHom& alpha, const LawElement& elem) {
    alpha.validate();
    return x.restrict_along(alpha, elem);
}

}  // namespace ggl
