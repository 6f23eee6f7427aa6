#include "geodetic/angles.hpp"

namespace geodetic {

PureAngle::PureAngle(Int n_, Rat r_) : n(std::move(n_)), r(std::move(r_)) {
    if (r < Rat(0) || r > Rat(1))
        throw DomainError("pure geodetic angle requires 0 <= r <= 1, got " + r.str());
}

PureAngle PureAngle::normalized() const {
    if (r == Rat(1)) return PureAngle(n + 1, Rat(0));
    return *this;
}

RealInterval PureAngle::value(mpfr_prec_t precision) const {
    RealInterval half_pi = RealInterval::pi(precision).scaled(Rat(Int(1), Int(2)));
    RealInterval quarter_turns = half_pi.scaled(Rat(n));
    RealInterval root = RealInterval::from_rat(r, precision).sqrt();
    return quarter_turns + root.asin();
}

std::string PureAngle::str() const {
    if (r.is_zero()) return "ang(" + n.get_str() + ")";
    if (n == 0) return "ang(" + r.str() + ")";
    return "ang(" + n.get_str() + "+" + r.str() + ")";
}

std::string SurdTan::str() const {
    if (infinite) return "inf";
    std::string sign = negated ? "-" : "";
    if (b == 0) return "0";
    std::string coeff = b.get_str() + "/" + a.get_str();
    if (a == 1) coeff = b.get_str();
    if (d == 1) return sign + "(" + coeff + ")";
    return sign + "(" + coeff + ")sqrt(" + d.get_str() + ")";
}

void AngleCombo::add_term(const BasisKey& key, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

void AngleCombo::add(const AngleCombo& other, const Rat& scale) {
    t_ += other.t_ * scale;
    for (const auto& [key, coeff] : other.terms_) add_term(key, coeff * scale);
}

AngleCombo AngleCombo::scaled(const Rat& q) const {
    AngleCombo out;
    out.add(*this, q);
    return out;
}

bool AngleCombo::integral_terms() const {
    for (const auto& [key, coeff] : terms_)
        if (!coeff.is_integer()) return false;
    return true;
}

RealInterval AngleCombo::eval(mpfr_prec_t precision) const {
    RealInterval acc = RealInterval::pi(precision).scaled(t_);
    for (const auto& [key, coeff] : terms_) {
        BasisResult base = basis_angle(key.p, key.d);
        if (base.status != BasisStatus::defined)
            throw InternalError("combination refers to undefined basis angle " + key.str());
        acc = acc + base.angle->evaluate(precision).scaled(coeff);
    }
    return acc;
}

std::string AngleCombo::str() const {
    std::string out = "t=" + t_.str();
    for (const auto& [key, coeff] : terms_) out += "; " + key.str() + "^" + coeff.str();
    return out;
}

}  // namespace geodetic
