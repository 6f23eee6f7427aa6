#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "geodetic/classgroup.hpp"
#include "geodetic/numeric.hpp"

namespace geodetic {

// Element (x + y*sqrt(-d))/2 of O_d. Valid coordinates: both even when
// d != 3 (mod 4), otherwise x = y (mod 2).
struct QuadInt {
    Int x, y, d;

    QuadInt(Int x_, Int y_, Int d_);

    bool is_zero() const { return x == 0 && y == 0; }
    Int norm() const;  // (x^2 + d y^2) / 4, always an exact integer
    QuadInt conj() const { return QuadInt(x, -y, d); }
    QuadInt operator*(const QuadInt& o) const;
    QuadInt pow(const Int& e) const;  // e >= 0

    // Coordinates over the integral basis {1, w}: w = sqrt(-d) or (1+sqrt(-d))/2.
    std::pair<Int, Int> omega_coords() const;
    static QuadInt from_omega(const Int& X, const Int& Y, const Int& d);

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.x == b.x && a.y == b.y && a.d == b.d;
    }
    std::string str() const;
};

// Prime ideal above p, stored as (p, u + sqrt(-d)). For odd split p the root
// tag satisfies u^2 = -d (mod p); membership of (x + y sqrt(-d))/2 is the
// congruence x = u*y (mod p). For p = 2, d = 7 (mod 8) the tag is u in {1,3}
// naming the ideal (2, (u + sqrt(-d))/2).
// Kind::inert stands for the principal ideal (p) itself; it appears in
// factorizations only through the prime 2 when d = 3 (mod 8), where a
// primitive element can still be divisible by 2 (e.g. 1 + sqrt(-3) = 2w).
struct PrimeIdeal {
    enum class Kind { split, ramified, inert };
    Int p;
    Int u;
    Kind kind;

    friend bool operator==(const PrimeIdeal& a, const PrimeIdeal& b) {
        return a.p == b.p && a.u == b.u && a.kind == b.kind;
    }
    std::string str() const;
};

struct Inert {};
struct Ramified {
    PrimeIdeal ideal;
};
struct Split {
    PrimeIdeal first, second;  // conjugates, first has the smaller root tag
};
using SplitType = std::variant<Inert, Ramified, Split>;

// Factorization behavior of (p) in O_d.
SplitType split_type(const Int& p, const Int& d);

// Conjugate ideal: split roots map u -> p - u (p = 2: 1 <-> 3); a ramified
// ideal is self-conjugate.
PrimeIdeal conjugate(const PrimeIdeal& P);

// Exact valuation v_P(a) for nonzero a (capped by the norm valuation).
Int ideal_valuation(const QuadInt& a, const PrimeIdeal& P);

// Least s >= 1 with P^s principal, together with a generator of P^s (found
// by Lagrange-Gauss reduction of the ideal lattice). s divides the class
// number.
std::pair<Int, QuadInt> ideal_class_order(const PrimeIdeal& P, const Int& d);

// Canonical witness (x, y) of 4 p^s = x^2 + d y^2 for the conjugate pair of
// split prime ideals above p: x, y > 0, with 4 | y when d = 1 and 2 | y when
// d = 3. Generates P^s for exactly one of the two conjugates.
QuadInt prime_power_generator(const PrimeIdeal& P, const Int& d, const Int& s);

// Prime ideal factorization of the principal ideal generated by a nonzero
// QuadInt. Exponents are recovered from exact valuations; the product of the
// returned prime ideals equals (a). For primitive input (gcd(x, y) <= 2) an
// odd inert prime dividing the norm is impossible and raises InternalError.
std::vector<std::pair<PrimeIdeal, Int>> factor_principal(const QuadInt& a);

}  // namespace geodetic
