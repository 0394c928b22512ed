#pragma once

#include "ggl/fgl_data.hpp"
#include "ggl/groups.hpp"
#include "ggl/laurent.hpp"

#include <memory>
#include <optional>

namespace ggl {

enum class Family { Tori, Elem2 };

/// Presentation of a value ring X(G): generators, displayed relations, and a
/// deterministic normal form. Every implemented law produces one of four
/// reduction strategies:
///   Free            polynomial / Laurent ring, possibly truncated
///   LatticeQuotient group ring k[Z^n / L] (multiplicative law at quotients)
///   LinearTorsion   k[e_1..e_n]/(linear forms)  (additive laws at quotients)
///   SeriesPerVar    truncated series modulo one univariate series per variable
/// Values are immutable after construction and safe to share across threads.
class ValueRing {
public:
    enum class Strategy { Free, LatticeQuotient, LinearTorsion, SeriesPerVar };

    static ValueRing free_ring(Ring k, int nvars, bool laurent, int trunc,
                               std::vector<std::string> vars);
    static ValueRing lattice_quotient(Ring k, int nvars, std::vector<std::string> vars,
                                      const std::vector<Character>& kernel_chars);
    static ValueRing linear_torsion(Ring k, int nvars, std::vector<std::string> vars,
                                    const std::vector<Character>& kernel_chars);
    static ValueRing series_per_var(Ring k, int nvars, int trunc, std::vector<std::string> vars,
                                    std::vector<LaurentPoly> relations,
                                    std::vector<std::pair<int, LaurentPoly>> var_relations,
                                    bool nf_supported);

    const Ring& coeff() const { return coeff_; }
    int nvars() const { return nvars_; }
    bool laurent() const { return laurent_; }
    int trunc() const { return trunc_; }
    Strategy strategy() const { return strategy_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<LaurentPoly>& relations() const { return relations_; }
    bool nf_supported() const { return nf_supported_; }

    /// Canonical representative modulo the relations (and the truncation).
    LaurentPoly reduce(const LaurentPoly& p) const;
    bool is_zero(const LaurentPoly& p) const { return reduce(p).is_zero(); }
    bool equal(const LaurentPoly& a, const LaurentPoly& b) const;
    LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const;

    /// True when the presented ring is certified to be an integral domain.
    bool certified_domain() const { return domain_; }

    /// Unit test where the presentation decides it; nullopt = undecided here.
    std::optional<bool> try_is_unit(const LaurentPoly& p) const;
    /// Inverse of a unit where computable; throws UnsupportedError otherwise,
    /// std::invalid_argument when p is certifiably not a unit.
    LaurentPoly invert_unit(const LaurentPoly& p) const;

    /// Monomials spanning the ring up to total-degree `bound` (canonical
    /// representatives, deduplicated); Laurent rings use exponents in the box
    /// [-bound, bound]^n.
    std::vector<Exponents> monomial_basis(int bound) const;

    std::string describe() const;
    std::string poly_str(const LaurentPoly& p) const { return p.str(vars_); }

    /// The lattice data of a LatticeQuotient ring.
    const RowHnf& lattice() const { return lattice_; }
    const std::vector<Int>& torsion_diag() const { return torsion_; }

private:
    ValueRing(Ring k, int nvars) : coeff_(k), nvars_(nvars) {}

    Ring coeff_;
    int nvars_;
    bool laurent_ = false;
    int trunc_ = 0;  // 0 = untruncated
    Strategy strategy_ = Strategy::Free;
    std::vector<std::string> vars_;
    std::vector<LaurentPoly> relations_;
    bool nf_supported_ = true;
    bool domain_ = false;

    // LatticeQuotient
    RowHnf lattice_;
    bool finite_ = false;

    // LinearTorsion: e = W f with torsion d_m on internal variable f_m
    std::vector<LaurentPoly> to_internal_;    // images of e_i in f-variables
    std::vector<LaurentPoly> from_internal_;  // images of f_m in e-variables
    std::vector<Int> torsion_;

    // SeriesPerVar
    std::vector<std::pair<int, LaurentPoly>> var_relations_;

    LaurentPoly reduce_lattice(const LaurentPoly& p) const;
    LaurentPoly reduce_linear_torsion(const LaurentPoly& p) const;
    LaurentPoly reduce_series(const LaurentPoly& p) const;
    std::optional<LaurentPoly> invert_in_finite_quotient(const LaurentPoly& p) const;
};

/// An element of X(group): the payload is a polynomial in the generators of
/// the group's value ring, interpreted modulo its relations.
struct LawElement {
    GroupSpec group;
    LaurentPoly payload;

    LawElement() : payload(Ring::integers(), 0) {}
    LawElement(GroupSpec g, LaurentPoly p) : group(std::move(g)), payload(std::move(p)) {}
};

/// A global (equivariant) group law: a contravariant ring-valued functor on
/// the family together with a coordinate. Concrete laws implement values,
/// restriction maps, and exact division by Euler classes.
class GlobalLaw {
public:
    virtual ~GlobalLaw() = default;

    virtual Family family() const = 0;
    virtual Ring ground() const = 0;
    virtual std::string name() const = 0;
    virtual ValueRing value(const GroupSpec& g) const = 0;
    /// alpha: B -> A induces X(A) -> X(B); x must live at alpha.target.
    virtual LawElement restrict_along(const GroupHom& alpha, const LawElement& x) const = 0;
    virtual LawElement coordinate() const = 0;
    /// Exact quotient x / e_v in X(x.group): nullopt when no quotient exists,
    /// UnsupportedError when the presentation cannot decide.
    virtual std::optional<LawElement> divide_euler(const LawElement& x,
                                                   const Character& v) const = 0;
    virtual std::unique_ptr<GlobalLaw> base_changed(const Ring& target) const = 0;

    /// Exact regularity certificate for the Euler class e_v in X(g), where the
    /// law can decide it: (regular?, witness on failure). nullopt = undecided.
    virtual std::optional<std::pair<bool, std::optional<LawElement>>> certify_euler_regular(
        const GroupSpec& g, const Character& v) const {
        (void)g;
        (void)v;
        return std::nullopt;
    }
    /// Exact certificate that the defining sequence at (g, v) is exact.
    virtual std::optional<bool> certify_exactness(const GroupSpec& g, const Character& v) const {
        (void)g;
        (void)v;
        return std::nullopt;
    }

    // shared helpers
    GroupSpec coordinate_group() const;
    GroupSpec trivial_group() const;
    void check_family(const GroupSpec& g) const;
    LawElement zero(const GroupSpec& g) const;
    LawElement one(const GroupSpec& g) const;
    LawElement element(const GroupSpec& g, const LaurentPoly& p) const;
    LawElement add(const LawElement& a, const LawElement& b) const;
    LawElement sub(const LawElement& a, const LawElement& b) const;
    LawElement mul(const LawElement& a, const LawElement& b) const;
    bool equal(const LawElement& a, const LawElement& b) const;
    bool is_zero(const LawElement& a) const;
    LawElement restrict_to_trivial(const LawElement& x) const;
};

/// The concrete laws.
std::unique_ptr<GlobalLaw> multiplicative_law(const Ring& k);
std::unique_ptr<GlobalLaw> additive_law(const Ring& k);
std::unique_ptr<GlobalLaw> two_torsion_additive_law();
/// Global law of a (valid) truncated formal group law; series arithmetic is
/// carried out below total degree series_degree+1.
std::unique_ptr<GlobalLaw> from_fgl(const TruncatedFGL& f, int series_degree = 8);
std::unique_ptr<GlobalLaw> base_change(const GlobalLaw& x, const Ring& target);
/// New coordinate e' = lambda * e; lambda must be a unit of X(T) (resp.
/// X(C_2)) restricting to 1 at the trivial group.
std::unique_ptr<GlobalLaw> change_coordinate(const GlobalLaw& x, const LaurentPoly& lambda);

/// Left Kan extension surface: the value of a Tori-family law at a
/// quotient-presented group, and restriction along a hom of such groups
/// through an explicit lift (the hom matrix).
ValueRing kan_value(const GlobalLaw& x, const GroupSpec& g);
LawElement kan_restrict(const GlobalLaw& x, const GroupHom& alpha, const LawElement& elem);

}  // namespace ggl
