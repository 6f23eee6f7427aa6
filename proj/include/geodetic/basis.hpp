#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodetic/ideals.hpp"
#include "geodetic/interval.hpp"

namespace geodetic {

// Index of a canonical basis angle <p>_d; defined only when (p) splits in O_d.
struct BasisKey {
    Int p, d;

    friend bool operator==(const BasisKey& a, const BasisKey& b) {
        return a.p == b.p && a.d == b.d;
    }
    friend bool operator!=(const BasisKey& a, const BasisKey& b) { return !(a == b); }
    // Ordered by (d, p): serialization order of angle combinations.
    friend bool operator<(const BasisKey& a, const BasisKey& b) {
        if (a.d != b.d) return a.d < b.d;
        return a.p < b.p;
    }
    std::string str() const { return "<" + p.get_str() + ">_" + d.get_str(); }
};

// <p>_d = (1/s) * arctan((b/a) sqrt(d)) with 4 p^s = a^2 + d b^2, s minimal.
// The witness pair is positive with 4 | b when d = 1 and 2 | b when d = 3;
// the value lies in (0, pi/2), and in (0, pi/4) when s > 1.
struct BasisAngle {
    BasisKey key;
    Int s;
    Int a, b;

    QuadInt witness() const { return QuadInt(a, b, key.d); }
    // Root tag of the conjugate prime ideal P with P^s = (witness); the sign
    // conventions of decompositions count that ideal positively.
    PrimeIdeal positive_ideal() const;

    // Enclosure of the angle in radians, width at most 2^(1-precision).
    RealInterval evaluate(mpfr_prec_t precision) const;
};

enum class BasisStatus { defined, inert, ramified };

struct BasisResult {
    BasisStatus status;
    std::optional<BasisAngle> angle;  // engaged iff status == defined
};

// Construct <p>_d (memoized); markers for inert and ramified primes.
BasisResult basis_angle(const Int& p, const Int& d);

struct BasisCell {
    Int p, d;
    BasisStatus status;
    std::optional<BasisAngle> angle;
    std::string radians;  // 10 significant digits, empty unless defined
};

// One cell per (prime <= p_max, square-free d <= d_max).
std::vector<BasisCell> basis_table(const Int& p_max, const Int& d_max);

}  // namespace geodetic
