#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ggl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an operation is well-posed but the chosen presentation cannot
// decide it exactly. Callers are expected to report this, never to guess.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient ring of the exact arithmetic layer: Z, Q, or F_p (p prime).
///
/// Coefficients are always carried as exact rationals; the ring decides the
/// canonical representative (F_p: integer in [0,p), Z: integral) and which
/// divisions are legal.
class Ring {
public:
    enum class Kind { Integers, Rationals, PrimeField };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    static Ring rationals() { return Ring(Kind::Rationals, 0); }
    static Ring prime_field(long long p);

    // "Z" | "Q" | "F<p>"
    static Ring parse(const std::string& s);

    Kind kind() const { return kind_; }
    long long characteristic() const { return kind_ == Kind::PrimeField ? p_ : 0; }
    bool is_field() const { return kind_ != Kind::Integers; }
    std::string name() const;

    /// Canonical representative of `c` in this ring. Throws if `c` does not
    /// represent an element (non-integer over Z, denominator divisible by p).
    Rat normalize(const Rat& c) const;

    bool contains(const Rat& c) const;
    bool is_zero(const Rat& c) const { return normalize(c) == 0; }
    bool is_unit(const Rat& c) const;
    Rat invert(const Rat& c) const;
    Rat neg(const Rat& c) const { return normalize(-c); }
    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }

    /// Exact quotient a/b when it exists in the ring.
    std::optional<Rat> divide(const Rat& a, const Rat& b) const;

    /// Over Z: a = q*b + r with 0 <= r < |b|; over fields: (a/b, 0).
    std::pair<Rat, Rat> divmod(const Rat& a, const Rat& b) const;

    bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    Ring(Kind k, long long p) : kind_(k), p_(p) {}
    Kind kind_;
    long long p_;
};

/// True when the unique candidate map from -> to (determined on 1) is a ring
/// homomorphism: Z -> anything, Q -> Q, F_p -> F_p.
bool ring_map_exists(const Ring& from, const Ring& to);

}  // namespace ggl
