#pragma once

#include <map>
#include <vector>

#include "geodetic/interval.hpp"
#include "geodetic/numeric.hpp"

namespace geodetic {

// Element of a multiquadratic field: sum of c_k * sqrt(k) over square-free
// k >= 1 (k = 1 is the rational part). Zero coefficients are never stored.
class MultiQuadNumber {
public:
    MultiQuadNumber() = default;
    explicit MultiQuadNumber(const Rat& rational);

    static MultiQuadNumber term(const Rat& coeff, const Int& radicand);

    const std::map<Int, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    // Exactly one stored term (a rational multiple of a single square root).
    bool is_single_term() const { return coeffs_.size() == 1; }

    MultiQuadNumber operator-() const;
    friend MultiQuadNumber operator+(const MultiQuadNumber& a, const MultiQuadNumber& b);
    friend MultiQuadNumber operator-(const MultiQuadNumber& a, const MultiQuadNumber& b);
    friend MultiQuadNumber operator*(const MultiQuadNumber& a, const MultiQuadNumber& b);
    friend MultiQuadNumber operator/(const MultiQuadNumber& a, const MultiQuadNumber& b);

    friend bool operator==(const MultiQuadNumber& a, const MultiQuadNumber& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // Primes dividing some stored radicand.
    std::vector<Int> radicand_primes() const;
    // Splits into u + v*sqrt(p): u collects the terms without p, v the
    // p-divisible ones with the sqrt(p) factored out.
    std::pair<MultiQuadNumber, MultiQuadNumber> split_by_prime(const Int& p) const;
    // Conjugation sqrt(p) -> -sqrt(p).
    MultiQuadNumber conj_at(const Int& p) const;

    RealInterval eval(mpfr_prec_t precision) const;
    std::string str() const;

private:
    void add_term(const Int& radicand, const Rat& coeff);
    std::map<Int, Rat> coeffs_;
};

}  // namespace geodetic
