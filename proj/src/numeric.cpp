#include "geodetic/numeric.hpp"

namespace geodetic {

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    reduce();
}

void Rat::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = gcd_int(abs_int(num_), den_);
    if (g > 1) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

Rat Rat::inverse() const {
    if (num_ == 0) throw DomainError("inverse of zero");
    return Rat(den_, num_);
}

std::string Rat::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s, 10));
        return Rat(Int(s.substr(0, slash), 10), Int(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: '" + s + "'");
    }
}

double Rat::to_double() const {
    mpq_class q(num_, den_);
    q.canonicalize();
    return q.get_d();
}

Rat best_rational_in(const Rat& lo, const Rat& hi) {
    if (hi < lo) throw DomainError("best_rational_in: empty interval");
    if (lo <= Rat(0) && Rat(0) <= hi) return Rat(0);
    if (hi < Rat(0)) return -best_rational_in(-hi, -lo);
    Int i = lo.floor();
    if (lo == Rat(i)) return lo;
    if (hi >= Rat(i + 1)) return Rat(i + 1);
    Rat inner = best_rational_in((hi - Rat(i)).inverse(), (lo - Rat(i)).inverse());
    return Rat(i) + inner.inverse();
}

}  // namespace geodetic
