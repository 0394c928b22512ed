#pragma once

#include "ggl/intmat.hpp"

#include <string>
#include <vector>

namespace ggl {

/// Character of an abelian compact Lie group, written as a row vector on the
/// generators of the character lattice (integer entries for tori and their
/// subgroups, 0/1 entries for elementary abelian 2-groups).
struct Character {
    std::vector<long long> e;

    Character() = default;
    Character(std::initializer_list<long long> v) : e(v) {}
    explicit Character(std::vector<long long> v) : e(std::move(v)) {}

    int size() const { return (int)e.size(); }
    bool is_zero() const;
    Character operator+(const Character& o) const;
    Character operator-() const;
    Character operator*(long long n) const;
    bool operator==(const Character& o) const { return e == o.e; }
    bool operator!=(const Character& o) const { return e != o.e; }
    std::string str() const;  // comma-separated entries
};

/// Presentation of an abelian compact Lie group:
///   Torus(r)                        the torus T^r
///   Elem2(r)                        the elementary abelian 2-group C_2^r
///   Quotient(Torus(r), V_1..V_k)    the closed subgroup of T^r cut out as
///                                   the common kernel of the V_i; its value
///                                   rings are quotients by Euler classes.
class GroupSpec {
public:
    enum class Kind { Torus, Elem2, Quotient };

    GroupSpec() : kind_(Kind::Torus), rank_(0) {}  // the trivial group

    static GroupSpec torus(int rank);
    static GroupSpec elem2(int rank);
    static GroupSpec quotient(int ambient_rank, std::vector<Character> kernel_chars);
    static GroupSpec trivial() { return torus(0); }

    /// "T^r", "C2^r", "T^r/[V1; V2]", "Cn". In the torus family (the default
    /// for laws over tori) "Cn" and "C2^r" are read as quotient presentations
    /// T^1/[n] and T^r/[2W_i]; otherwise "C2^r" is the elementary abelian
    /// 2-group.
    static GroupSpec parse(const std::string& s, bool torus_family = true);

    Kind kind() const { return kind_; }
    /// Number of character-lattice generators (the ambient rank for quotients).
    int rank() const { return rank_; }
    const std::vector<Character>& kernel_chars() const { return kernel_; }
    bool is_torus() const { return kind_ == Kind::Torus; }
    bool is_trivial() const;
    std::string str() const;
    bool operator==(const GroupSpec& o) const;
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

private:
    GroupSpec(Kind k, int r, std::vector<Character> kernel)
        : kind_(k), rank_(r), kernel_(std::move(kernel)) {}
    Kind kind_;
    int rank_;
    std::vector<Character> kernel_;  // Quotient only
};

/// Homomorphism presented on character lattices: the matrix m has one row per
/// target generator and one column per source generator, and the induced map
/// on characters is V -> V*m. For quotient-presented groups the matrix is a
/// lift to the ambient tori; validate() checks that it descends.
struct GroupHom {
    GroupSpec source{}, target{};
    std::vector<std::vector<long long>> m;  // target.rank() x source.rank()

    static GroupHom identity(const GroupSpec& g);
    /// The unique map to the trivial group.
    static GroupHom to_trivial(const GroupSpec& g);
    /// Inclusion of the trivial group (rank-0 source).
    static GroupHom from_trivial(const GroupSpec& g);
    /// A -> T (resp. C_2) given by a character of A.
    static GroupHom from_character(const GroupSpec& source, const Character& v);

    void validate() const;
    std::string str() const;
};

Character char_pullback(const Character& v, const GroupHom& alpha);

/// outer . inner (inner.target must equal outer.source).
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

struct PrimitiveSplit {
    long long d;          // gcd of the entries
    Character primitive;  // v / d
    bool split;           // d == 1
};
/// Write a nonzero torus character as d * (primitive); split iff d = 1.
PrimitiveSplit primitive_and_split(const Character& v);

/// Kernel of a nonzero character V on T^r, presented as Quotient(T^r, [V]).
/// When V is split the kernel is identified with a torus of rank r-1:
/// embedding : T^{r-1} -> T^r onto ker(V), retraction . embedding = id,
/// section : T -> T^r with char_pullback(V, section) = (1).
struct KernelData {
    GroupSpec subgroup;
    bool split = false;
    int kernel_rank = 0;
    GroupHom embedding;
    GroupHom retraction;
    GroupHom section;
};
KernelData kernel_subgroup(const Character& v);

/// Same for a nonzero character of C_2^r over F_2 (always split).
KernelData kernel_subgroup_elem2(const Character& v);

}  // namespace ggl
