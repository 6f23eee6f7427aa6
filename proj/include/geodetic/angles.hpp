#pragma once

#include <map>
#include <string>

#include "geodetic/basis.hpp"
#include "geodetic/interval.hpp"

namespace geodetic {

// n*(pi/2) + arcsin(sqrt(r)) with rational r in [0, 1].
struct PureAngle {
    Int n{0};
    Rat r{0};

    PureAngle() = default;
    PureAngle(Int n_, Rat r_);

    // Folds r = 1 into a quarter turn, leaving r in [0, 1).
    PureAngle normalized() const;

    RealInterval value(mpfr_prec_t precision) const;
    // "ang(8/9)", "ang(1+2/3)", "ang(2)", "ang(-1+1/2)"
    std::string str() const;

    friend bool operator==(const PureAngle& a, const PureAngle& b) {
        return a.n == b.n && a.r == b.r;
    }
};

// tan(theta) = sign * (b/a) * sqrt(d), reduced, or the poles 0 and infinity.
struct SurdTan {
    Int a{1}, b{0};
    Int d{1};
    bool negated{false};
    bool infinite{false};

    bool is_zero() const { return !infinite && b == 0; }
    std::string str() const;
};

// Coordinates in the basis {pi} + {<p>_d}: value = t*pi + sum coeff * <p>_d.
// Zero coefficients are never stored; keys are ordered by (d, p).
class AngleCombo {
public:
    AngleCombo() = default;
    explicit AngleCombo(Rat t) : t_(std::move(t)) {}

    const Rat& t() const { return t_; }
    const std::map<BasisKey, Rat>& terms() const { return terms_; }

    void set_t(Rat t) { t_ = std::move(t); }
    void add_term(const BasisKey& key, const Rat& coeff);
    void add(const AngleCombo& other, const Rat& scale = Rat(1));
    AngleCombo scaled(const Rat& q) const;

    bool terms_empty() const { return terms_.empty(); }
    bool integral_terms() const;
    bool is_zero() const { return t_.is_zero() && terms_.empty(); }

    RealInterval eval(mpfr_prec_t precision) const;

    // "t=1; <7>_3^-1; <13>_3^-1"
    std::string str() const;

    friend bool operator==(const AngleCombo& a, const AngleCombo& b) {
        return a.t_ == b.t_ && a.terms_ == b.terms_;
    }

private:
    Rat t_{0};
    std::map<BasisKey, Rat> terms_;
};

}  // namespace geodetic
