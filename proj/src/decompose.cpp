#include "geodetic/decompose.hpp"

namespace geodetic {

namespace {

constexpr mpfr_prec_t kStartPrec = 256;
constexpr mpfr_prec_t kMaxPrec = 1 << 16;

// arg(alpha) for alpha = a + eps*b*sqrt(-d), a > 0: principal arctangent.
RealInterval surd_arg(const SurdTan& st, mpfr_prec_t prec) {
    RealInterval root = RealInterval::from_int(st.d, prec).sqrt();
    RealInterval tangent = root.scaled(Rat(st.b, st.a));
    if (st.negated) tangent = -tangent;
    return tangent.atan();
}

}  // namespace

SurdTan tan_surd(const PureAngle& theta) {
    PureAngle t = theta.normalized();
    bool odd = mod_floor(t.n, Int(2)) == 1;
    if (t.r.is_zero()) {
        if (odd) return SurdTan{0, 1, 1, false, true};
        return SurdTan{1, 0, 1, false, false};
    }
    // tan(arcsin sqrt(P/Q)) = sqrt(P(Q-P)) / (Q-P)
    Int P = t.r.num(), Q = t.r.den();
    auto [s, d] = squarefree_part(P * (Q - P));
    Int a = Q - P, b = s;
    bool negated = false;
    if (odd) {  // tan(pi/2 + phi) = -cot(phi)
        Int na = b * d, nb = a;
        a = na;
        b = nb;
        negated = true;
    }
    Int g = gcd_int(a, b);
    return SurdTan{div_exact(a, g), div_exact(b, g), d, negated, false};
}

RealInterval combo_eval(const AngleCombo& combo, mpfr_prec_t precision) {
    return combo.eval(precision);
}

bool combo_verify_exact(const PureAngle& theta, const AngleCombo& combo) {
    if (!combo.integral_terms())
        throw DomainError("combo_verify_exact requires integer term coefficients");
    SurdTan st = tan_surd(theta);
    if (st.infinite || st.is_zero()) {
        PureAngle t = theta.normalized();
        return combo.terms_empty() && combo.t() == Rat(t.n, Int(2));
    }
    const Int& d = st.d;

    // Common multiplier N: every s_q and the denominator of t must divide it.
    Int N = combo.t().den();
    struct Term {
        QuadInt witness;
        Int s;
        Rat coeff;
    };
    std::vector<Term> terms;
    for (const auto& [key, coeff] : combo.terms()) {
        if (key.d != d) return false;  // mixed fields cannot equal one surd angle
        BasisResult base = basis_angle(key.p, key.d);
        if (base.status != BasisStatus::defined) return false;
        terms.push_back({base.angle->witness(), base.angle->s, coeff});
        N = lcm_int(N, base.angle->s);
    }
    if (N > 100000) throw ResourceLimitError("verification multiplier too large");

    QuadInt alpha(2 * st.a, st.negated ? Int(-2 * st.b) : Int(2 * st.b), d);

    // Branch count k with theta = k*pi + arg(alpha).
    Int k;
    for (mpfr_prec_t prec = kStartPrec;; prec *= 2) {
        if (prec > kMaxPrec) throw InternalError("branch count did not settle");
        RealInterval ki =
            (theta.value(prec) - surd_arg(st, prec)) * RealInterval::inv_pi(prec);
        Int lo = ki.lo_rat().ceil(), hi = ki.hi_rat().floor();
        if (lo == hi) {
            k = lo;
            break;
        }
    }
    Rat m_rat = combo.t() * Rat(N) - Rat(N * k);
    if (!m_rat.is_integer()) throw InternalError("pi-multiple is not integral");
    Int big_m = m_rat.num();

    // beta = alpha^N * prod gamma_q^(-e_q); negative exponents via conjugates.
    QuadInt beta = alpha.pow(N);
    for (const auto& term : terms) {
        Rat e_rat = Rat(N) * term.coeff / Rat(term.s);
        if (!e_rat.is_integer()) throw InternalError("scaled coefficient is not integral");
        Int e = e_rat.num();
        if (e == 0) continue;
        QuadInt factor = e > 0 ? term.witness.conj() : term.witness;
        beta = beta * factor.pow(abs_int(e));
    }
    if (beta.y != 0) return false;
    bool even = mod_floor(big_m, Int(2)) == 0;
    if (even != (beta.x > 0)) return false;

    // The algebraic check pins N*residual modulo 2*pi; the interval bound
    // |residual| < pi/N leaves only the zero branch.
    for (mpfr_prec_t prec = kStartPrec;; prec *= 2) {
        if (prec > kMaxPrec) throw InternalError("residual bound did not settle");
        RealInterval res = theta.value(prec) - combo.eval(prec);
        RealInterval bound = RealInterval::pi(prec).scaled(Rat(Int(1), N));
        if (res.abs().hi_rat() < bound.lo_rat()) return true;
        if (res.abs().lo_rat() > bound.hi_rat()) return false;
    }
}

AngleCombo decompose(const PureAngle& theta, mpfr_prec_t start_precision) {
    if (start_precision < 64) throw DomainError("decompose requires precision >= 64");
    SurdTan st = tan_surd(theta);
    AngleCombo combo;
    if (st.infinite || st.is_zero()) {
        PureAngle t = theta.normalized();
        combo.set_t(Rat(t.n, Int(2)));
        return combo;
    }
    const Int& d = st.d;
    QuadInt alpha(2 * st.a, st.negated ? Int(-2 * st.b) : Int(2 * st.b), d);
    for (const auto& [ideal, e] : factor_principal(alpha)) {
        if (ideal.kind != PrimeIdeal::Kind::split) continue;  // argument in pi*Q
        BasisResult base = basis_angle(ideal.p, d);
        if (base.status != BasisStatus::defined)
            throw InternalError("split prime without a basis angle");
        PrimeIdeal plus = base.angle->positive_ideal();
        combo.add_term(BasisKey{ideal.p, d}, ideal == plus ? Rat(e) : Rat(-e));
    }

    auto group = class_group(d);
    Int bound = 12 * group->c;
    Rat separation(Int(1), 2 * bound * bound);
    for (mpfr_prec_t prec = start_precision;; prec *= 2) {
        if (prec > kMaxPrec) throw InternalError("pi-part recognition did not settle");
        RealInterval residual = theta.value(prec) - combo.eval(prec);
        RealInterval t_range = residual * RealInterval::inv_pi(prec);
        if (!(t_range.width() < separation)) continue;
        Rat t = best_rational_in(t_range.lo_rat(), t_range.hi_rat());
        if (t.den() > bound) continue;
        combo.set_t(t);
        if (combo_verify_exact(theta, combo)) return combo;
        combo.set_t(Rat(0));
    }
}

}  // namespace geodetic
