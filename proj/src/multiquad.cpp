#include "geodetic/multiquad.hpp"

#include <algorithm>

#include "geodetic/numtheory.hpp"

namespace geodetic {

MultiQuadNumber::MultiQuadNumber(const Rat& rational) { add_term(1, rational); }

MultiQuadNumber MultiQuadNumber::term(const Rat& coeff, const Int& radicand) {
    if (radicand < 1) throw DomainError("radicand must be positive");
    auto [s, d] = squarefree_part(radicand);
    MultiQuadNumber out;
    out.add_term(d, coeff * Rat(s));
    return out;
}

void MultiQuadNumber::add_term(const Int& radicand, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto it = coeffs_.find(radicand);
    if (it == coeffs_.end()) {
        coeffs_.emplace(radicand, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
}

bool MultiQuadNumber::is_rational() const {
    if (coeffs_.empty()) return true;
    return coeffs_.size() == 1 && coeffs_.begin()->first == 1;
}

MultiQuadNumber MultiQuadNumber::operator-() const {
    MultiQuadNumber out;
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
    return out;
}

MultiQuadNumber operator+(const MultiQuadNumber& a, const MultiQuadNumber& b) {
    MultiQuadNumber out = a;
    for (const auto& [k, c] : b.coeffs_) out.add_term(k, c);
    return out;
}

MultiQuadNumber operator-(const MultiQuadNumber& a, const MultiQuadNumber& b) {
    return a + (-b);
}

MultiQuadNumber operator*(const MultiQuadNumber& a, const MultiQuadNumber& b) {
    MultiQuadNumber out;
    for (const auto& [k1, c1] : a.coeffs_)
        for (const auto& [k2, c2] : b.coeffs_) {
            // sqrt(k1) sqrt(k2) = g sqrt(m) with k1 k2 = g^2 m
            auto [g, m] = squarefree_part(k1 * k2);
            out.add_term(m, c1 * c2 * Rat(g));
        }
    return out;
}

MultiQuadNumber operator/(const MultiQuadNumber& a, const MultiQuadNumber& b) {
    if (b.is_zero()) throw DomainError("division by zero multiquadratic number");
    if (b.is_rational()) {
        MultiQuadNumber out;
        Rat inv = b.coeffs_.begin()->second.inverse();
        for (const auto& [k, c] : a.coeffs_) out.add_term(k, c * inv);
        return out;
    }
    // Rationalize against one radicand prime at a time.
    Int p = b.radicand_primes().front();
    MultiQuadNumber conj = b.conj_at(p);
    return (a * conj) / (b * conj);
}

std::vector<Int> MultiQuadNumber::radicand_primes() const {
    std::vector<Int> primes;
    for (const auto& [k, c] : coeffs_)
        for (const auto& [p, e] : factorize(k))
            if (std::find(primes.begin(), primes.end(), p) == primes.end())
                primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    return primes;
}

std::pair<MultiQuadNumber, MultiQuadNumber> MultiQuadNumber::split_by_prime(
    const Int& p) const {
    MultiQuadNumber without, with;
    for (const auto& [k, c] : coeffs_) {
        if (mod_floor(k, p) == 0)
            with.add_term(div_exact(k, p), c);
        else
            without.add_term(k, c);
    }
    return {without, with};
}

MultiQuadNumber MultiQuadNumber::conj_at(const Int& p) const {
    MultiQuadNumber out;
    for (const auto& [k, c] : coeffs_) out.add_term(k, mod_floor(k, p) == 0 ? -c : c);
    return out;
}

RealInterval MultiQuadNumber::eval(mpfr_prec_t precision) const {
    RealInterval acc(precision);
    for (const auto& [k, c] : coeffs_)
        acc = acc + RealInterval::from_int(k, precision).sqrt().scaled(c);
    return acc;
}

std::string MultiQuadNumber::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Rat a = c.abs();
        std::string piece;
        if (k == 1)
            piece = a.str();
        else if (a == Rat(1))
            piece = "sqrt(" + k.get_str() + ")";
        else
            piece = a.str() + "*sqrt(" + k.get_str() + ")";
        if (first)
            out += (c.sign() < 0 ? "-" : "") + piece;
        else
            out += (c.sign() < 0 ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

}  // namespace geodetic
