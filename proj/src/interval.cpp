#include "geodetic/interval.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace geodetic {

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(RealInterval o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::from_int(const Int& v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_rat(const Rat& v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpq_class q(v.num(), v.den());
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::inv_pi(mpfr_prec_t prec) {
    RealInterval p = pi(prec + 4);
    RealInterval r(prec);
    mpfr_ui_div(r.lo_, 1, p.hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, p.lo_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::operator-() const {
    RealInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    RealInterval r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr av[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bv[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : av)
        for (auto y : bv) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RealInterval RealInterval::scaled(const Rat& q) const {
    RealInterval r(prec_);
    mpq_class mq(q.num(), q.den());
    if (q.sign() >= 0) {
        mpfr_mul_q(r.lo_, lo_, mq.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, hi_, mq.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_, hi_, mq.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, lo_, mq.get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

RealInterval RealInterval::abs() const {
    RealInterval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    // straddles zero
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(r.hi_, hi_) < 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sqrt() const {
    if (mpfr_sgn(hi_) < 0) throw DomainError("sqrt of negative interval");
    RealInterval r(prec_);
    if (mpfr_sgn(lo_) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::atan() const {
    RealInterval r(prec_);
    mpfr_atan(r.lo_, lo_, MPFR_RNDD);
    mpfr_atan(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::asin() const {
    RealInterval r(prec_);
    mpfr_t c;
    mpfr_init2(c, prec_);
    mpfr_set(c, lo_, MPFR_RNDD);
    if (mpfr_cmp_si(c, -1) < 0) mpfr_set_si(c, -1, MPFR_RNDD);
    mpfr_asin(r.lo_, c, MPFR_RNDD);
    mpfr_set(c, hi_, MPFR_RNDU);
    if (mpfr_cmp_si(c, 1) > 0) mpfr_set_si(c, 1, MPFR_RNDU);
    mpfr_asin(r.hi_, c, MPFR_RNDU);
    mpfr_clear(c);
    return r;
}

namespace {
Rat mpfr_to_rat(mpfr_srcptr v) {
    if (mpfr_zero_p(v)) return Rat(0);
    if (!mpfr_number_p(v)) throw InternalError("non-finite interval endpoint");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v);
    Rat r(m);
    if (e >= 0) {
        mpz_class p;
        mpz_mul_2exp(p.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return Rat(p);
    }
    mpz_class d(1);
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return Rat(m, d);
}
}  // namespace

Rat RealInterval::lo_rat() const { return mpfr_to_rat(lo_); }
Rat RealInterval::hi_rat() const { return mpfr_to_rat(hi_); }

bool RealInterval::contains(const Rat& v) const {
    mpq_class q(v.num(), v.den());
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool RealInterval::abs_below(const Rat& q) const {
    RealInterval a = abs();
    return a.hi_rat() < q;
}

bool RealInterval::abs_above(const Rat& q) const {
    RealInterval a = abs();
    return a.lo_rat() > q;
}

double RealInterval::mid_double() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

std::string RealInterval::decimal(int sig_digits) const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", sig_digits, m);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(m);
    return out;
}

}  // namespace geodetic
