#pragma once

#include <gmpxx.h>

#include <string>

#include "geodetic/errors.hpp"

namespace geodetic {

// Arbitrary-precision signed integer. All arithmetic is exact.
using Int = mpz_class;

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign_int(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

// Floor division and the matching nonnegative remainder.
inline Int div_floor(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact division; throws InternalError if b does not divide a.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InternalError("div_exact: " + a.get_str() + " not divisible by " + b.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Nearest integer to a/b for b > 0; ties round toward +infinity.
inline Int round_div(const Int& a, const Int& b) {
    return div_floor(2 * a + b, 2 * b);
}

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InternalError("mod_inverse: " + a.get_str() + " not invertible mod " + m.get_str());
    return r;
}

// Exact rational, always stored reduced with positive denominator.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(const Int& n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rat(long n) : num_(n), den_(1) {}        // NOLINT
    Rat(int n) : num_(n), den_(1) {}         // NOLINT
    Rat(Int n, Int d);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sign_int(num_); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }
    Rat inverse() const;

    Int floor() const { return div_floor(num_, den_); }
    Int ceil() const { return -div_floor(-num_, den_); }
    // Nearest integer, ties toward +infinity.
    Int round() const { return div_floor(2 * num_ + den_, 2 * den_); }

    // "p/q", or just "p" for integers.
    std::string str() const;
    static Rat from_string(const std::string& s);

    double to_double() const;

private:
    void reduce();
    Int num_, den_;
};

inline Rat rat(long n, long d) { return Rat(Int(n), Int(d)); }

// The rational with the smallest denominator in [lo, hi] (Stern-Brocot walk;
// ties among denominators resolved toward zero).
Rat best_rational_in(const Rat& lo, const Rat& hi);

}  // namespace geodetic
