#pragma once

#include <mpfr.h>

#include <string>

#include "geodetic/numeric.hpp"

namespace geodetic {

// Closed interval [lo, hi] with arbitrary-precision binary endpoints.
// Every operation rounds lo down and hi up, so the exact value of an
// expression always stays inside the computed interval.
class RealInterval {
public:
    explicit RealInterval(mpfr_prec_t prec = 64);
    RealInterval(const RealInterval& o);
    RealInterval(RealInterval&& o) noexcept;
    RealInterval& operator=(RealInterval o) noexcept;
    ~RealInterval();

    static RealInterval from_int(const Int& v, mpfr_prec_t prec);
    static RealInterval from_rat(const Rat& v, mpfr_prec_t prec);
    static RealInterval pi(mpfr_prec_t prec);
    static RealInterval inv_pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }

    RealInterval operator-() const;
    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);

    // Multiplication by an exact rational (directed rounding through mpq).
    RealInterval scaled(const Rat& q) const;
    RealInterval abs() const;

    // Monotone transcendental maps; domains clamped against rounding slop.
    RealInterval sqrt() const;  // requires hi >= 0
    RealInterval atan() const;
    RealInterval asin() const;  // endpoints clamped into [-1, 1]

    // Exact endpoint values (binary endpoints are dyadic rationals).
    Rat lo_rat() const;
    Rat hi_rat() const;
    Rat width() const { return hi_rat() - lo_rat(); }

    bool contains(const Rat& v) const;
    bool contains_zero() const { return contains(Rat(0)); }
    // Certified |interval| < q and |interval| > q.
    bool abs_below(const Rat& q) const;
    bool abs_above(const Rat& q) const;

    double mid_double() const;
    // Midpoint printed to the given number of significant decimal digits.
    std::string decimal(int sig_digits) const;

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

}  // namespace geodetic
