#include "ggl/ring.hpp"

namespace ggl {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// inverse of a mod p, a not divisible by p
long long mod_inverse(long long a, long long p) {
    long long t = 0, new_t = 1;
    long long r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        long long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("ring: element not invertible mod p");
    return ((t % p) + p) % p;
}

}  // namespace

Ring Ring::prime_field(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("ring: F_p requires a prime p");
    return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(const std::string& s) {
    if (s == "Z") return integers();
    if (s == "Q") return rationals();
    if (s.size() >= 2 && s[0] == 'F') {
        long long p = std::stoll(s.substr(1));
        return prime_field(p);
    }
    throw std::invalid_argument("ring: cannot parse '" + s + "' (expected Z, Q or F<p>)");
}

std::string Ring::name() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "F" + std::to_string(p_);
    }
    return "?";
}

Rat Ring::normalize(const Rat& c) const {
    switch (kind_) {
        case Kind::Rationals:
            return c;
        case Kind::Integers:
            if (denominator(c) != 1)
                throw std::invalid_argument("ring: " + c.str() + " is not an integer");
            return c;
        case Kind::PrimeField: {
            Int num = numerator(c) % p_;
            Int den = denominator(c) % p_;
            if (den == 0)
                throw std::invalid_argument("ring: denominator divisible by " + std::to_string(p_));
            long long n = ((num.convert_to<long long>() % p_) + p_) % p_;
            long long d = ((den.convert_to<long long>() % p_) + p_) % p_;
            long long v = (n * mod_inverse(d, p_)) % p_;
            return Rat(v);
        }
    }
    return c;
}

bool Ring::contains(const Rat& c) const {
    if (kind_ == Kind::Rationals) return true;
    if (kind_ == Kind::Integers) return denominator(c) == 1;
    return denominator(c) % p_ != 0;
}

bool Ring::is_unit(const Rat& c) const {
    Rat n = normalize(c);
    if (n == 0) return false;
    if (kind_ == Kind::Integers) return n == 1 || n == -1;
    return true;
}

Rat Ring::invert(const Rat& c) const {
    if (!is_unit(c)) throw std::invalid_argument("ring: not a unit: " + c.str());
    return normalize(Rat(1) / normalize(c));
}

std::optional<Rat> Ring::divide(const Rat& a, const Rat& b) const {
    Rat bn = normalize(b);
    if (bn == 0) return std::nullopt;
    Rat q = normalize(a) / bn;
    if (!contains(q)) return std::nullopt;
    return normalize(q);
}

std::pair<Rat, Rat> Ring::divmod(const Rat& a, const Rat& b) const {
    Rat an = normalize(a), bn = normalize(b);
    if (bn == 0) throw std::invalid_argument("ring: divmod by zero");
    if (is_field()) return {normalize(an / bn), Rat(0)};
    Int x = numerator(an), y = numerator(bn);
    Int q = x / y;
    Int r = x - q * y;
    if (r < 0) {
        // canonical remainder in [0, |y|)
        q += (y > 0) ? -1 : 1;
        r = x - q * y;
    }
    return {Rat(q), Rat(r)};
}

bool ring_map_exists(const Ring& from, const Ring& to) {
    switch (from.kind()) {
        case Ring::Kind::Integers: return true;
        case Ring::Kind::Rationals: return to.kind() == Ring::Kind::Rationals;
        case Ring::Kind::PrimeField: return to == from;
    }
    return false;
}

}  // namespace ggl
