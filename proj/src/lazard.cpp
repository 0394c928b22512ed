#include "ggl/lazard.hpp"

#include <algorithm>
#include <set>

namespace ggl {

namespace {

// trim every term whose degree in the trailing `tail` variables exceeds n
LaurentPoly trim_tail(const LaurentPoly& p, int tail, int n) {
    LaurentPoly out(p.ring(), p.nvars());
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (int i = p.nvars() - tail; i < p.nvars(); ++i) d += e[i];
        if (d <= n) out.add_term(e, c);
    }
    return out;
}

}  // namespace

int RelationSystem::unknown_index(int i, int j) const {
    for (int k = 0; k < (int)unknowns.size(); ++k)
        if (unknowns[k] == std::make_pair(i, j)) return k;
    throw std::invalid_argument("lazard: unknown a_" + std::to_string(i) + std::to_string(j));
}

std::string RelationSystem::unknown_name(int i, int j) const {
    return "a" + std::to_string(i) + std::to_string(j);
}

std::vector<std::string> RelationSystem::unknown_names() const {
    std::vector<std::string> out;
    for (auto [i, j] : unknowns) out.push_back(unknown_name(i, j));
    return out;
}

std::vector<int> RelationSystem::gradings() const {
    std::set<int> degs;
    for (auto [i, j] : unknowns) degs.insert(TruncatedFGL::coeff_grading(i, j));
    return std::vector<int>(degs.begin(), degs.end());
}

int RelationSystem::indecomposable_rank(int grading) const {
    std::vector<int> cols;
    for (int k = 0; k < (int)unknowns.size(); ++k)
        if (TruncatedFGL::coeff_grading(unknowns[k].first, unknowns[k].second) == grading)
            cols.push_back(k);
    if (cols.empty()) return 0;
    std::vector<std::vector<Int>> rows;
    for (const auto& rel : relations) {
        if (rel.grading != grading) continue;
        std::vector<Int> row(cols.size(), 0);
        bool nz = false;
        for (const auto& [e, c] : rel.poly.terms()) {
            if (total_degree(e) != 1) continue;  // linear part only
            int var = -1;
            for (int i = 0; i < (int)e.size(); ++i)
                if (e[i] == 1) var = i;
            for (int ci = 0; ci < (int)cols.size(); ++ci)
                if (cols[ci] == var) {
                    row[ci] = numerator(c);
                    nz = true;
                }
        }
        if (nz) rows.push_back(std::move(row));
    }
    int rank = 0;
    if (!rows.empty()) {
        if (two_torsion) {
            f2::Mat m;
            for (const auto& r : rows) {
                std::vector<int> rr(r.size());
                for (size_t i = 0; i < r.size(); ++i)
                    rr[i] = (int)(((r[i] % 2) + 2) % 2).convert_to<int>();
                m.push_back(rr);
            }
            rank = f2::rank(m);
        } else {
            IntMat m((int)rows.size(), (int)cols.size());
            for (int i = 0; i < (int)rows.size(); ++i)
                for (int j = 0; j < (int)cols.size(); ++j) m.at(i, j) = rows[i][j];
            rank = rank_over_q(m);
        }
    }
    return (int)cols.size() - rank;
}

std::vector<Int> RelationSystem::linear_part_invariants(int grading) const {
    std::vector<int> cols;
    for (int k = 0; k < (int)unknowns.size(); ++k)
        if (TruncatedFGL::coeff_grading(unknowns[k].first, unknowns[k].second) == grading)
            cols.push_back(k);
    std::vector<std::vector<Int>> rows;
    for (const auto& rel : relations) {
        if (rel.grading != grading) continue;
        std::vector<Int> row(cols.size(), 0);
        bool nz = false;
        for (const auto& [e, c] : rel.poly.terms()) {
            if (total_degree(e) != 1) continue;
            int var = -1;
            for (int i = 0; i < (int)e.size(); ++i)
                if (e[i] == 1) var = i;
            for (int ci = 0; ci < (int)cols.size(); ++ci)
                if (cols[ci] == var) {
                    row[ci] = numerator(c);
                    nz = true;
                }
        }
        if (nz) rows.push_back(std::move(row));
    }
    if (rows.empty() || cols.empty()) return {};
    IntMat m((int)rows.size(), (int)cols.size());
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < (int)cols.size(); ++j) m.at(i, j) = rows[i][j];
    auto d = smith_normal_form(m).diagonal();
    std::vector<Int> out;
    for (const Int& x : d)
        if (x != 0) out.push_back(x);
    return out;
}

RelationSystem universal_relations(int n, bool two_torsion) {
    if (n < 2) throw std::invalid_argument("lazard: degree bound must be >= 2");
    RelationSystem sys;
    sys.degree_bound = n;
    sys.two_torsion = two_torsion;
    for (int s = 2; s <= n; ++s)
        for (int i = 1; i < s; ++i) sys.unknowns.push_back({i, s - i});
    int u = (int)sys.unknowns.size();
    int nv = u + 3;  // a-unknowns then x, y, z
    Ring z = Ring::integers();

    auto unknown_poly = [&](int k) {
        Exponents e(nv, 0);
        e[k] = 1;
        return LaurentPoly::monomial(z, nv, e);
    };
    auto series_var = [&](int which) {
        Exponents e(nv, 0);
        e[u + which] = 1;
        return LaurentPoly::monomial(z, nv, e);
    };
    auto mul_t = [&](const LaurentPoly& a, const LaurentPoly& b) {
        return trim_tail(a * b, 3, n);
    };
    // F(p, q) = p + q + sum a_ij p^i q^j, truncated in the series variables
    auto apply_f = [&](const LaurentPoly& p, const LaurentPoly& q) {
        LaurentPoly out = p + q;
        // cached powers
        std::vector<LaurentPoly> pp = {LaurentPoly::constant(z, nv, 1)};
        std::vector<LaurentPoly> qq = {LaurentPoly::constant(z, nv, 1)};
        for (int d = 1; d < n; ++d) {
            pp.push_back(mul_t(pp.back(), p));
            qq.push_back(mul_t(qq.back(), q));
        }
        for (int k = 0; k < u; ++k) {
            auto [i, j] = sys.unknowns[k];
            out += mul_t(unknown_poly(k), mul_t(pp[i], qq[j]));
        }
        return trim_tail(out, 3, n);
    };

    LaurentPoly x = series_var(0), y = series_var(1), zz = series_var(2);
    LaurentPoly lhs = apply_f(apply_f(x, y), zz);
    LaurentPoly rhs = apply_f(x, apply_f(y, zz));
    LaurentPoly diff = lhs - rhs;

    // collect by (x,y,z)-monomial
    std::map<Exponents, LaurentPoly, GrlexLess> by_mono;
    for (const auto& [e, c] : diff.terms()) {
        Exponents mono(e.begin() + u, e.end());
        Exponents coef_e(e.begin(), e.begin() + u);
        coef_e.resize(u);
        auto it = by_mono.find(mono);
        if (it == by_mono.end()) it = by_mono.emplace(mono, LaurentPoly(z, u)).first;
        it->second.add_term(coef_e, c);
    }
    for (const auto& [mono, poly] : by_mono) {
        if (poly.is_zero()) continue;
        LazardRelation rel;
        rel.poly = poly;
        rel.grading = 2 * (mono[0] + mono[1] + mono[2] - 1);
        rel.source = "assoc x^" + std::to_string(mono[0]) + " y^" + std::to_string(mono[1]) +
                     " z^" + std::to_string(mono[2]);
        sys.relations.push_back(std::move(rel));
    }

    for (int k = 0; k < u; ++k) {
        auto [i, j] = sys.unknowns[k];
        if (i >= j) continue;
        LazardRelation rel;
        Exponents ei(u, 0), ej(u, 0);
        ei[k] = 1;
        ej[sys.unknown_index(j, i)] = 1;
        rel.poly = LaurentPoly::monomial(z, u, ei) - LaurentPoly::monomial(z, u, ej);
        rel.grading = TruncatedFGL::coeff_grading(i, j);
        rel.source = "comm (" + std::to_string(i) + "," + std::to_string(j) + ")";
        sys.relations.push_back(std::move(rel));
    }

    if (two_torsion) {
        // [2](x) = 2x + sum a_ij x^{i+j}: every coefficient must vanish
        LazardRelation two;
        two.poly = LaurentPoly::constant(z, u, 2);
        two.grading = 0;
        two.source = "two-series deg 1";
        sys.relations.push_back(std::move(two));
        for (int d = 2; d <= n; ++d) {
            LaurentPoly rel(z, u);
            for (int k = 0; k < u; ++k) {
                auto [i, j] = sys.unknowns[k];
                if (i + j != d) continue;
                Exponents e(u, 0);
                e[k] = 1;
                rel.add_term(e, 1);
            }
            if (rel.is_zero()) continue;
            LazardRelation lr;
            lr.poly = rel;
            lr.grading = 2 * (d - 1);
            lr.source = "two-series deg " + std::to_string(d);
            sys.relations.push_back(std::move(lr));
        }
    }
    return sys;
}

std::vector<std::string> validate_fgl(const TruncatedFGL& f) {
    std::vector<std::string> out;
    std::set<std::pair<int, int>> seen;
    for (const auto& [ij, c] : f.coeffs) {
        auto [i, j] = ij;
        if (seen.count({j, i}) || seen.count({i, j})) continue;
        seen.insert({i, j});
        if (f.ring.normalize(c - f.a(j, i)) != 0)
            out.push_back("commutativity violated at (" + std::to_string(std::min(i, j)) + "," +
                          std::to_string(std::max(i, j)) + ")");
    }
    int trunc = f.degree + 1;
    TruncatedSeries fs = f.series2(trunc);
    TruncatedSeries x = TruncatedSeries::variable(f.ring, 3, trunc, 0);
    TruncatedSeries y = TruncatedSeries::variable(f.ring, 3, trunc, 1);
    TruncatedSeries z = TruncatedSeries::variable(f.ring, 3, trunc, 2);
    TruncatedSeries diff = fs.compose({fs.compose({x, y}), z}) - fs.compose({x, fs.compose({y, z})});
    for (const auto& [e, c] : diff.poly().terms())
        out.push_back("associativity residual " + c.str() + " at x^" + std::to_string(e[0]) +
                      " y^" + std::to_string(e[1]) + " z^" + std::to_string(e[2]));
    return out;
}

TruncatedFGL classify(const GlobalLaw& law, int n) { return classify_at_trivial(law, n); }

}  // namespace ggl
