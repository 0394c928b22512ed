#pragma once

#include "ggl/flag.hpp"

namespace ggl {

struct LazardRelation {
    LaurentPoly poly{Ring::integers(), 0};  // polynomial in the unknowns a_ij
    int grading = 0;                        // |a_ij| = 2(i+j-1); relations are homogeneous
    std::string source;
};

/// Relations among the coefficients of the universal formal group law through
/// a total-degree bound: commutativity a_ij - a_ji, the coefficients of the
/// associativity residual F(F(x,y),z) - F(x,F(y,z)), and in two-torsion mode
/// the coefficients of [2]_F(x) (whose degree-1 entry is the constant 2).
/// Relations are kept over Z; two-torsion analyses reduce mod 2.
struct RelationSystem {
    int degree_bound = 0;
    bool two_torsion = false;
    std::vector<std::pair<int, int>> unknowns;  // (i,j), i,j >= 1, i+j <= N
    std::vector<LazardRelation> relations;

    int unknown_index(int i, int j) const;
    std::string unknown_name(int i, int j) const;
    std::vector<std::string> unknown_names() const;
    std::vector<int> gradings() const;  // occurring grading degrees, sorted

    /// Indecomposables in one grading degree: #unknowns minus the rank of the
    /// relations' linear parts, over Q (or F_2 in two-torsion mode).
    int indecomposable_rank(int grading) const;
    /// Invariant factors of the integral linear-part lattice; reported
    /// descriptively, not asserted against anything.
    std::vector<Int> linear_part_invariants(int grading) const;
};

RelationSystem universal_relations(int n, bool two_torsion);

/// Violated axioms of a coefficient table; empty iff the truncated law is
/// counital, commutative and associative through its degree bound.
std::vector<std::string> validate_fgl(const TruncatedFGL& f);

/// The formal group law carried by a global law at the trivial group.
TruncatedFGL classify(const GlobalLaw& law, int n = 8);

}  // namespace ggl
