#include "geodetic/ideals.hpp"

#include <algorithm>

namespace geodetic {

namespace {

bool valid_coords(const Int& x, const Int& y, const Int& d) {
    if (mod_floor(d, Int(4)) == 3) return mod_floor(x - y, Int(2)) == 0;
    return x % 2 == 0 && y % 2 == 0;
}

}  // namespace

QuadInt::QuadInt(Int x_, Int y_, Int d_) : x(std::move(x_)), y(std::move(y_)), d(std::move(d_)) {
    if (d < 1 || !is_squarefree(d)) throw DomainError("QuadInt requires square-free d >= 1");
    if (!valid_coords(x, y, d))
        throw DomainError("(" + x.get_str() + " + " + y.get_str() +
                          "*sqrt(-" + d.get_str() + "))/2 is not integral in O_d");
}

Int QuadInt::norm() const { return div_exact(x * x + d * y * y, Int(4)); }

QuadInt QuadInt::operator*(const QuadInt& o) const {
    if (d != o.d) throw DomainError("QuadInt multiplication across different fields");
    return QuadInt(div_exact(x * o.x - d * y * o.y, Int(2)),
                   div_exact(x * o.y + y * o.x, Int(2)), d);
}

QuadInt QuadInt::pow(const Int& e) const {
    if (e < 0) throw DomainError("QuadInt::pow requires e >= 0");
    QuadInt acc(2, 0, d);  // one
    QuadInt base = *this;
    Int k = e;
    while (k > 0) {
        if (mod_floor(k, Int(2)) == 1) acc = acc * base;
        k = div_floor(k, Int(2));
        if (k > 0) base = base * base;
    }
    return acc;
}

std::pair<Int, Int> QuadInt::omega_coords() const {
    if (mod_floor(d, Int(4)) == 3) return {div_exact(x - y, Int(2)), y};
    return {div_exact(x, Int(2)), div_exact(y, Int(2))};
}

QuadInt QuadInt::from_omega(const Int& X, const Int& Y, const Int& d) {
    if (mod_floor(d, Int(4)) == 3) return QuadInt(2 * X + Y, Y, d);
    return QuadInt(2 * X, 2 * Y, d);
}

std::string QuadInt::str() const {
    return "(" + x.get_str() + " + " + y.get_str() + "*sqrt(-" + d.get_str() + "))/2";
}

std::string PrimeIdeal::str() const {
    switch (kind) {
        case Kind::ramified:
            return "(" + p.get_str() + ", ramified)";
        case Kind::split:
            return "(" + p.get_str() + ", " + u.get_str() + "+sqrt(-d))";
        case Kind::inert:
            break;
    }
    return "(" + p.get_str() + ")";
}

SplitType split_type(const Int& p, const Int& d) {
    if (!is_prime(p)) throw DomainError("split_type: p must be prime");
    if (d < 1 || !is_squarefree(d)) throw DomainError("split_type: d must be square-free");
    if (p == 2) {
        Int m8 = mod_floor(d, Int(8));
        if (m8 == 3) return Inert{};
        if (m8 == 7)
            return Split{PrimeIdeal{2, 1, PrimeIdeal::Kind::split},
                         PrimeIdeal{2, 3, PrimeIdeal::Kind::split}};
        Int u = (mod_floor(d, Int(4)) == 1) ? 1 : 0;  // (2, 1+sqrt(-d)) or (2, sqrt(-d))
        return Ramified{PrimeIdeal{2, u, PrimeIdeal::Kind::ramified}};
    }
    if (mod_floor(d, p) == 0) return Ramified{PrimeIdeal{p, 0, PrimeIdeal::Kind::ramified}};
    auto u = sqrt_mod(-d, p);
    if (!u) return Inert{};
    Int u1 = *u, u2 = p - *u;
    if (u2 < u1) std::swap(u1, u2);
    return Split{PrimeIdeal{p, u1, PrimeIdeal::Kind::split},
                 PrimeIdeal{p, u2, PrimeIdeal::Kind::split}};
}

PrimeIdeal conjugate(const PrimeIdeal& P) {
    if (P.kind != PrimeIdeal::Kind::split) return P;
    if (P.p == 2) return PrimeIdeal{2, 4 - P.u, P.kind};
    return PrimeIdeal{P.p, P.p - P.u, P.kind};
}

namespace {

// Image of the integral basis element w under O_d -> Z/p^j for the split
// prime ideal P; the congruence X + Y*phi = 0 (mod p^j) characterizes P^j.
class RootChain {
public:
    RootChain(const PrimeIdeal& P, const Int& d) : p_(P.p), d_(d), j_(0), mod_(1) {
        if (p_ == 2) {
            // w satisfies w^2 - w + (1+d)/4 = 0; tag 1 kills w, tag 3 kills 1+w.
            c_ = div_exact(1 + d, Int(4));
            r_ = (P.u == 1) ? 0 : 1;
            quad_ = false;
        } else {
            r_ = mod_floor(-P.u, p_);  // sqrt(-d) maps to -u
            quad_ = true;
        }
    }

    // Advance to modulus p^(j+1) and return phi(w) mod p^(j+1).
    Int next() {
        Int nmod = mod_ * p_;
        if (j_ == 0) {
            mod_ = nmod;
            j_ = 1;
        } else {
            if (quad_) {
                // Newton step for r^2 + d = 0
                Int f = mod_floor(r_ * r_ + d_, nmod);
                Int inv = mod_inverse(mod_floor(2 * r_, nmod), nmod);
                r_ = mod_floor(r_ - f * inv, nmod);
            } else {
                // Newton step for r^2 - r + c = 0
                Int f = mod_floor(r_ * r_ - r_ + c_, nmod);
                Int inv = mod_inverse(mod_floor(2 * r_ - 1, nmod), nmod);
                r_ = mod_floor(r_ - f * inv, nmod);
            }
            mod_ = nmod;
            ++j_;
        }
        return phi();
    }

    const Int& modulus() const { return mod_; }

private:
    Int phi() const {
        if (p_ == 2) return r_;
        if (mod_floor(d_, Int(4)) == 3)
            return mod_floor((1 + r_) * mod_inverse(Int(2), mod_), mod_);
        return r_;
    }

    Int p_, d_, c_, r_;
    int j_;
    Int mod_;
    bool quad_;
};

Int int_valuation(const Int& n, const Int& p) {
    Int v = 0, m = n;
    while (mod_floor(m, p) == 0) {
        m = div_exact(m, p);
        ++v;
    }
    return v;
}

}  // namespace

Int ideal_valuation(const QuadInt& a, const PrimeIdeal& P) {
    if (a.is_zero()) throw DomainError("valuation of zero");
    Int cap = int_valuation(a.norm(), P.p);
    if (P.kind == PrimeIdeal::Kind::ramified) return cap;
    if (P.kind == PrimeIdeal::Kind::inert) {
        if (mod_floor(cap, Int(2)) != 0)
            throw InternalError("odd norm valuation at an inert prime");
        return div_exact(cap, Int(2));
    }
    auto [X, Y] = a.omega_coords();
    RootChain chain(P, a.d);
    Int v = 0;
    while (v < cap) {
        Int phi = chain.next();
        if (mod_floor(X + Y * phi, chain.modulus()) != 0) break;
        ++v;
    }
    return v;
}

namespace {

struct NormForm {
    // N(X + Yw) = X^2 + fb*XY + fc*Y^2
    Int fb, fc;
    Int q(const Int& X, const Int& Y) const { return X * X + fb * X * Y + fc * Y * Y; }
    Int two_b(const Int& ux, const Int& uy, const Int& vx, const Int& vy) const {
        return 2 * ux * vx + fb * (ux * vy + uy * vx) + 2 * fc * uy * vy;
    }
};

NormForm norm_form(const Int& d) {
    if (mod_floor(d, Int(4)) == 3) return {1, div_exact(1 + d, Int(4))};
    return {0, d};
}

// Lagrange-Gauss reduction; returns a shortest vector of the rank-2 lattice.
std::pair<Int, Int> shortest_vector(const NormForm& nf, std::pair<Int, Int> v1,
                                    std::pair<Int, Int> v2) {
    while (true) {
        Int q1 = nf.q(v1.first, v1.second);
        Int q2 = nf.q(v2.first, v2.second);
        if (q2 < q1) {
            std::swap(v1, v2);
            std::swap(q1, q2);
        }
        Int tb = nf.two_b(v1.first, v1.second, v2.first, v2.second);
        Int m = round_div(tb, 2 * q1);
        if (m == 0) break;
        v2 = {v2.first - m * v1.first, v2.second - m * v1.second};
        if (nf.q(v2.first, v2.second) >= q1) break;
    }
    if (nf.q(v2.first, v2.second) < nf.q(v1.first, v1.second)) std::swap(v1, v2);
    return v1;
}

}  // namespace

std::pair<Int, QuadInt> ideal_class_order(const PrimeIdeal& P, const Int& d) {
    if (P.kind != PrimeIdeal::Kind::split)
        throw DomainError("ideal_class_order requires a split prime ideal");
    auto group = class_group(d);
    NormForm nf = norm_form(d);
    std::vector<Int> divisors;
    for (Int s = 1; s <= group->c; ++s)
        if (mod_floor(group->c, s) == 0) divisors.push_back(s);
    RootChain chain(P, d);
    Int prev = 0;
    Int phi = 0;
    for (const Int& s : divisors) {
        while (prev < s) {
            phi = chain.next();
            ++prev;
        }
        Int ps = chain.modulus();
        auto v = shortest_vector(nf, {ps, 0}, {mod_floor(-phi, ps), 1});
        if (nf.q(v.first, v.second) == ps) {
            QuadInt gen = QuadInt::from_omega(v.first, v.second, d);
            if (gen.norm() != ps) throw InternalError("generator norm mismatch");
            return {s, gen};
        }
    }
    throw InternalError("no power of the ideal class up to the class number is principal");
}

QuadInt prime_power_generator(const PrimeIdeal& P, const Int& d, const Int& s) {
    if (P.kind != PrimeIdeal::Kind::split)
        throw DomainError("prime_power_generator: ideal must be split");
    auto [order, gen] = ideal_class_order(P, d);
    if (s != order) throw DomainError("s must equal the order of the ideal class");

    std::vector<QuadInt> orbit;
    auto push_unit_orbit = [&](QuadInt v) {
        if (d == 1) {
            QuadInt i(0, 2, 1);
            for (int k = 0; k < 4; ++k) {
                orbit.push_back(v);
                v = v * i;
            }
        } else if (d == 3) {
            QuadInt w(1, 1, 3);
            for (int k = 0; k < 6; ++k) {
                orbit.push_back(v);
                v = v * w;
            }
        } else {
            orbit.push_back(v);
            orbit.push_back(QuadInt(-v.x, -v.y, d));
        }
    };
    push_unit_orbit(gen);
    push_unit_orbit(gen.conj());

    std::optional<QuadInt> best;
    for (const QuadInt& v : orbit) {
        if (v.x <= 0 || v.y <= 0) continue;
        if (d == 1 && mod_floor(v.y, Int(4)) != 0) continue;
        if (d == 3 && mod_floor(v.y, Int(2)) != 0) continue;
        if (!best || v.x < best->x || (v.x == best->x && v.y < best->y)) best = v;
    }
    if (!best) throw InternalError("no canonical generator in the unit orbit");
    Int ps = pow_int(P.p, mpz_get_ui(s.get_mpz_t()));
    if (best->x * best->x + d * best->y * best->y != 4 * ps)
        throw InternalError("canonical generator violates 4p^s = x^2 + d y^2");
    return *best;
}

std::vector<std::pair<PrimeIdeal, Int>> factor_principal(const QuadInt& a) {
    if (a.is_zero()) throw DomainError("factor_principal of zero");
    bool primitive = gcd_int(abs_int(a.x), abs_int(a.y)) <= 2;
    std::vector<std::pair<PrimeIdeal, Int>> out;
    for (const auto& [q, m] : factorize(a.norm())) {
        SplitType st = split_type(q, a.d);
        if (std::holds_alternative<Inert>(st)) {
            // For a primitive element only (2) with d = 3 (mod 8) can divide
            // the norm at an inert prime (the element is 2^k times another
            // integer of the field); an odd one signals a bug upstream.
            if (m % 2 != 0 || (primitive && q != 2))
                throw InternalError("inert prime " + q.get_str() +
                                    " divides the norm of a primitive element " + a.str());
            out.emplace_back(PrimeIdeal{q, 0, PrimeIdeal::Kind::inert}, Int(m / 2));
            continue;
        }
        if (std::holds_alternative<Ramified>(st)) {
            out.emplace_back(std::get<Ramified>(st).ideal, Int(m));
            continue;
        }
        const auto& sp = std::get<Split>(st);
        Int v1 = ideal_valuation(a, sp.first);
        Int v2 = ideal_valuation(a, sp.second);
        if (v1 + v2 != m) throw InternalError("split valuations do not add to the norm valuation");
        if (v1 > 0) out.emplace_back(sp.first, v1);
        if (v2 > 0) out.emplace_back(sp.second, v2);
    }
    return out;
}

}  // namespace geodetic
