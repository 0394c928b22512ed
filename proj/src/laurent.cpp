#include "ggl/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ggl {

LaurentPoly LaurentPoly::constant(Ring r, int nvars, const Rat& c) {
    LaurentPoly p(r, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Ring r, int nvars, const Exponents& e, const Rat& c) {
    if ((int)e.size() != nvars) throw std::invalid_argument("laurent: exponent arity mismatch");
    LaurentPoly p(r, nvars);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(Ring r, int nvars, int index, int power) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("laurent: variable index out of range");
    Exponents e(nvars, 0);
    e[index] = power;
    return monomial(r, nvars, e);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           *std::max_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) == 0;
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

Rat LaurentPoly::constant_term() const { return coeff(Exponents(nvars_, 0)); }

Rat LaurentPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int LaurentPoly::degree() const {
    if (terms_.empty()) throw std::invalid_argument("laurent: degree of zero polynomial");
    return total_degree(terms_.rbegin()->first);
}

std::pair<Exponents, Rat> LaurentPoly::leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("laurent: leading term of zero polynomial");
    return *terms_.rbegin();
}

Exponents LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw std::invalid_argument("laurent: min exponents of zero polynomial");
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

void LaurentPoly::add_term(const Exponents& e, const Rat& c) {
    if ((int)e.size() != nvars_) throw std::invalid_argument("laurent: exponent arity mismatch");
    Rat v = ring_.normalize(c);
    if (v == 0) return;
    auto [it, fresh] = terms_.emplace(e, v);
    if (!fresh) {
        it->second = ring_.add(it->second, v);
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o, const char* op) const {
    if (ring_ != o.ring_) throw std::invalid_argument(std::string("laurent: ring mismatch in ") + op);
    if (nvars_ != o.nvars_) throw std::invalid_argument(std::string("laurent: nvars mismatch in ") + op);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, ring_.neg(c));
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o, "add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o, "sub");
    for (const auto& [e, c] : o.terms_) add_term(e, ring_.neg(c));
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o, "mul");
    LaurentPoly r(ring_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return ring_ == o.ring_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
    if ((int)shift.size() != nvars_) throw std::invalid_argument("laurent: shift arity mismatch");
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f(nvars_);
        for (int i = 0; i < nvars_; ++i) f[i] = e[i] + shift[i];
        r.terms_.emplace(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_monomials(const std::vector<Exponents>& images,
                                              int target_nvars) const {
    if ((int)images.size() != nvars_)
        throw std::invalid_argument("laurent: substitute needs one image per variable");
    for (const auto& im : images)
        if ((int)im.size() != target_nvars)
            throw std::invalid_argument("laurent: image arity mismatch");
    LaurentPoly r(ring_, target_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents f(target_nvars, 0);
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < target_nvars; ++j) f[j] += e[i] * images[i][j];
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if ((int)images.size() != nvars_)
        throw std::invalid_argument("laurent: substitute needs one image per variable");
    int target_nvars = nvars_ == 0 ? 0 : images[0].nvars();
    for (const auto& im : images) {
        if (im.ring() != ring_) throw std::invalid_argument("laurent: substitute ring mismatch");
        if (im.nvars() != target_nvars) throw std::invalid_argument("laurent: image arity mismatch");
    }
    // power caches, including inverse powers for invertible monomial images
    std::vector<std::map<int, LaurentPoly>> powers(nvars_);
    auto image_power = [&](int i, int k) -> const LaurentPoly& {
        auto it = powers[i].find(k);
        if (it != powers[i].end()) return it->second;
        LaurentPoly v = LaurentPoly::constant(ring_, target_nvars, 1);
        if (k > 0) {
            for (int s = 0; s < k; ++s) v = v * images[i];
        } else if (k < 0) {
            if (!images[i].is_monomial())
                throw std::invalid_argument(
                    "laurent: negative exponent needs an invertible monomial image");
            auto [e, c] = images[i].leading_term();
            if (!ring_.is_unit(c))
                throw std::invalid_argument("laurent: monomial image coefficient is not a unit");
            Exponents inv(e.size());
            for (size_t j = 0; j < e.size(); ++j) inv[j] = -e[j];
            LaurentPoly m = LaurentPoly::monomial(ring_, target_nvars, inv, ring_.invert(c));
            for (int s = 0; s < -k; ++s) v = v * m;
        }
        return powers[i].emplace(k, std::move(v)).first->second;
    };
    LaurentPoly r(ring_, target_nvars);
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = LaurentPoly::constant(ring_, target_nvars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term = term * image_power(i, e[i]);
        r += term;
    }
    return r;
}

LaurentPoly LaurentPoly::truncated(int bound) const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) < bound) r.terms_.emplace(e, c);
    return r;
}

LaurentPoly LaurentPoly::mapped_into(const Ring& target) const {
    if (!ring_map_exists(ring_, target))
        throw std::invalid_argument("laurent: no ring map " + ring_.name() + " -> " + target.name());
    LaurentPoly r(target, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

std::string LaurentPoly::str(const std::vector<std::string>& var_names) const {
    if ((int)var_names.size() != nvars_) throw std::invalid_argument("laurent: wrong name count");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = total_degree(e) != 0 ||
                       std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (!any_var) {
            out << a.str();
            continue;
        }
        bool coef_shown = false;
        if (a != 1) {
            out << a.str();
            coef_shown = true;
        }
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (coef_shown || !first_var) out << "*";
            coef_shown = false;
            first_var = false;
            out << var_names[i];
            if (e[i] != 1) out << "^" << e[i];
        }
    }
    return out.str();
}

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, const std::string& op) {
    if (op == "add") return a + b;
    if (op == "sub") return a - b;
    if (op == "mul") return a * b;
    throw std::invalid_argument("laurent: unknown operation '" + op + "'");
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("laurent: division by zero");
    if (num.is_zero()) return LaurentPoly::zero(num.ring(), num.nvars());
    if (num.ring() != den.ring() || num.nvars() != den.nvars())
        throw std::invalid_argument("laurent: ring/nvars mismatch in division");
    const Ring& ring = num.ring();
    int n = num.nvars();

    Exponents sn = num.min_exponents(), sd = den.min_exponents();
    Exponents neg_sn(n), neg_sd(n);
    for (int i = 0; i < n; ++i) {
        neg_sn[i] = -sn[i];
        neg_sd[i] = -sd[i];
    }
    LaurentPoly r = num.shifted(neg_sn);
    LaurentPoly d = den.shifted(neg_sd);
    auto [lde, ldc] = d.leading_term();

    LaurentPoly q(ring, n);
    while (!r.is_zero()) {
        auto [lre, lrc] = r.leading_term();
        Exponents diff(n);
        for (int i = 0; i < n; ++i) {
            diff[i] = lre[i] - lde[i];
            if (diff[i] < 0) return std::nullopt;
        }
        auto c = ring.divide(lrc, ldc);
        if (!c) return std::nullopt;
        LaurentPoly qt = LaurentPoly::monomial(ring, n, diff, *c);
        q += qt;
        r -= qt * d;
    }
    // undo the shifts: quotient picks up sn - sd
    Exponents back(n);
    for (int i = 0; i < n; ++i) back[i] = sn[i] - sd[i];
    return q.shifted(back);
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly r = LaurentPoly::constant(p.ring(), p.nvars(), 1);
    LaurentPoly base = p;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

}  // namespace ggl
