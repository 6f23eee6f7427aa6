#include "geodetic/numtheory.hpp"

#include <algorithm>
#include <mutex>

namespace geodetic {

namespace {

constexpr long kSieveBound = 1000000;

std::vector<long> build_sieve() {
    std::vector<bool> composite(kSieveBound, false);
    std::vector<long> primes;
    for (long i = 2; i < kSieveBound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (long j = i * i; j < kSieveBound; j += i) composite[j] = true;
    }
    return primes;
}

Int powmod(const Int& base, const Int& e, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

// Pollard rho, Brent variant. n must be odd composite > 1.
Int pollard_brent(const Int& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return isqrt(n);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs_int(x - y) % n;
                }
                g = gcd_int(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd_int(abs_int(x - ys), n);
            }
        }
        if (g != n) return g;
    }
}

}  // namespace

const std::vector<long>& small_primes() {
    static const std::vector<long> primes = build_sieve();
    return primes;
}

Int& FactorLimits::default_cofactor_bound() {
    static Int bound = Int(1) << 64;
    return bound;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
    // Deterministic for n < 2^64 with the first twelve prime bases.
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L})
        if (miller_rabin_witness(n, Int(a), d, s)) return false;
    return true;
}

std::vector<std::pair<Int, int>> factorize(const Int& n, const FactorLimits& limits) {
    if (n < 1) throw DomainError("factorize requires n >= 1");
    std::vector<std::pair<Int, int>> out;
    Int rest = n;
    for (long p : small_primes()) {
        auto pp = static_cast<unsigned long>(p);
        if (mpz_cmp_ui(rest.get_mpz_t(), pp * pp) < 0) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), pp)) {
            int e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), pp);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), pp));
            out.emplace_back(Int(p), e);
        }
    }
    std::vector<Int> pending;
    if (rest > 1) pending.push_back(rest);
    while (!pending.empty()) {
        Int m = pending.back();
        pending.pop_back();
        if (is_prime(m)) {
            bool merged = false;
            for (auto& [p, e] : out)
                if (p == m) {
                    ++e;
                    merged = true;
                }
            if (!merged) out.emplace_back(m, 1);
            continue;
        }
        if (m > limits.cofactor_bound)
            throw ResourceLimitError("composite cofactor " + m.get_str() +
                                     " exceeds factoring bound");
        Int f = pollard_brent(m);
        pending.push_back(f);
        pending.push_back(div_exact(m, f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Int, Int> squarefree_part(const Int& n, const FactorLimits& limits) {
    Int s = 1, d = 1;
    for (const auto& [p, e] : factorize(n, limits)) {
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    return {s, d};
}

bool is_squarefree(const Int& n, const FactorLimits& limits) {
    if (n < 1) return false;
    return squarefree_part(n, limits).first == 1;
}

std::optional<Int> sqrt_mod(const Int& c, const Int& p) {
    if (p < 3 || !is_prime(p)) throw DomainError("sqrt_mod requires an odd prime modulus");
    Int a = mod_floor(c, p);
    if (a == 0) return Int(0);
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;  // Euler criterion
    Int r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        Int q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
        Int z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        Int m(static_cast<long>(s)), cc = powmod(z, q, p);
        Int t = powmod(a, q, p);
        r = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            Int i = 0, tt = t;
            while (tt != 1) {
                tt = tt * tt % p;
                ++i;
            }
            Int b = cc;
            for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
            m = i;
            cc = b * b % p;
            t = t * cc % p;
            r = r * b % p;
        }
    }
    if (r > (p - 1) / 2) r = p - r;
    return r;
}

namespace {

// Roots of x^2 = c (mod p^e) for odd prime p, c in [0, p^e).
std::vector<Int> roots_mod_odd_prime_power(const Int& c, const Int& p, int e) {
    Int pe = pow_int(p, e);
    Int cc = mod_floor(c, pe);
    if (cc == 0) {
        // x must vanish to order ceil(e/2)
        Int step = pow_int(p, (e + 1) / 2);
        std::vector<Int> out;
        for (Int x = 0; x < pe; x += step) out.push_back(x);
        return out;
    }
    int j = 0;
    Int cp = cc;
    while (cp % p == 0) {
        cp = div_exact(cp, p);
        ++j;
    }
    if (j % 2) return {};
    if (j > 0) {
        // x = p^(j/2) * y with y^2 = c' (mod p^(e-j))
        auto inner = roots_mod_odd_prime_power(cp, p, e - j);
        Int half = pow_int(p, j / 2);
        Int span = pow_int(p, e - j) * half;  // distinct lifts spaced by p^(e-j+j/2)
        std::vector<Int> out;
        for (const Int& y : inner)
            for (Int t = y * half; t < pe; t += span) out.push_back(t);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    auto r0 = sqrt_mod(cp, p);
    if (!r0) return {};
    // Hensel lift: simple root since p is odd and p does not divide c.
    Int r = *r0, pk = p;
    for (int k = 1; k < e; ++k) {
        Int next = pk * p;
        Int f = mod_floor(r * r - cp, next);
        Int inv = mod_inverse(mod_floor(2 * r, next), next);
        r = mod_floor(r - f * inv, next);
        pk = next;
    }
    std::vector<Int> out{r, pe - r};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Roots of x^2 = c (mod 2^e).
std::vector<Int> roots_mod_two_power(const Int& c, int e) {
    Int pe = pow_int(Int(2), e);
    Int cc = mod_floor(c, pe);
    if (e == 1) return {cc};
    if (cc == 0) {
        Int step = pow_int(Int(2), (e + 1) / 2);
        std::vector<Int> out;
        for (Int x = 0; x < pe; x += step) out.push_back(x);
        return out;
    }
    int j = 0;
    Int cp = cc;
    while (cp % 2 == 0) {
        cp = div_exact(cp, 2);
        ++j;
    }
    if (j % 2) return {};
    if (j > 0) {
        auto inner = roots_mod_two_power(cp, e - j);
        Int half = pow_int(Int(2), j / 2);
        Int span = pow_int(Int(2), e - j) * half;
        std::vector<Int> out;
        for (const Int& y : inner)
            for (Int t = y * half; t < pe; t += span) out.push_back(t);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    // c odd: lift the root set power by power.
    std::vector<Int> cur;
    if (mod_floor(cc, Int(4)) == 1)
        cur = {Int(1), Int(3)};
    else
        return {};
    Int mod = 4;
    for (int k = 3; k <= e; ++k) {
        Int next = mod * 2;
        std::vector<Int> lifted;
        for (const Int& r : cur) {
            for (int step = 0; step < 2; ++step) {
                Int cand = step == 0 ? r : Int(r + mod);
                if (mod_floor(cand * cand - cc, next) == 0) lifted.push_back(cand);
            }
        }
        std::sort(lifted.begin(), lifted.end());
        lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
        cur = std::move(lifted);
        mod = next;
        if (cur.empty()) return {};
    }
    return cur;
}

}  // namespace

std::vector<Int> sqrt_mod_all(const Int& c, const Int& m, const FactorLimits& limits) {
    if (m < 1) throw DomainError("sqrt_mod_all requires m >= 1");
    if (m == 1) return {Int(0)};
    std::vector<Int> roots{Int(0)};
    Int mod_so_far = 1;
    for (const auto& [p, e] : factorize(m, limits)) {
        Int pe = pow_int(p, e);
        std::vector<Int> part = (p == 2) ? roots_mod_two_power(c, e)
                                         : roots_mod_odd_prime_power(c, p, e);
        if (part.empty()) return {};
        std::vector<Int> next;
        next.reserve(roots.size() * part.size());
        Int inv1 = mod_inverse(mod_floor(mod_so_far, pe), pe);
        for (const Int& a : roots)
            for (const Int& b : part) {
                // CRT: x = a (mod mod_so_far), x = b (mod pe)
                Int t = mod_floor((b - a) * inv1, pe);
                next.push_back(a + mod_so_far * t);
            }
        if (next.size() > 65536) throw ResourceLimitError("too many square roots mod m");
        roots = std::move(next);
        mod_so_far *= pe;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

bool admissible_pair(const Int& a, const Int& b, const Int& d) {
    if (mod_floor(d, Int(4)) == 3) return mod_floor(a - b, Int(2)) == 0;
    return a % 2 == 0 && b % 2 == 0;
}

void consider(std::optional<std::pair<Int, Int>>& best, const Int& a, const Int& b,
              const Int& d) {
    if (a <= 0 || b <= 0 || !admissible_pair(a, b, d)) return;
    if (!best || b < best->second || (b == best->second && a < best->first))
        best = std::make_pair(a, b);
}

// Divisors g of n with g^2 | n.
std::vector<Int> square_divisors(const Int& n, const FactorLimits& limits) {
    std::vector<Int> gs{Int(1)};
    for (const auto& [p, e] : factorize(n, limits)) {
        int half = e / 2;
        if (half == 0) continue;
        std::vector<Int> next;
        Int pk = 1;
        for (int i = 0; i <= half; ++i) {
            for (const Int& g : gs) next.push_back(g * pk);
            pk *= p;
        }
        gs = std::move(next);
    }
    return gs;
}

}  // namespace

std::optional<std::pair<Int, Int>> cornacchia_brute(const Int& m, const Int& d) {
    std::optional<std::pair<Int, Int>> best;
    Int target = 4 * m;
    for (Int b = 1; d * b * b <= target; ++b) {
        Int t = target - d * b * b;
        if (!is_perfect_square(t)) continue;
        consider(best, isqrt(t), b, d);
        if (best) break;  // b ascending: the first admissible hit has minimal b
    }
    return best;
}

std::optional<std::pair<Int, Int>> cornacchia(const Int& m, const Int& d,
                                              const FactorLimits& limits) {
    if (m < 1 || d < 1 || !is_squarefree(d, limits))
        throw DomainError("cornacchia requires m >= 1 and square-free d >= 1");
    if (4 * m <= d * Int(kSieveBound)) return cornacchia_brute(m, d);

    // Gcd descent on each square root of -d modulo 4m/g^2.
    std::optional<std::pair<Int, Int>> best;
    Int target = 4 * m;
    for (const Int& g : square_divisors(target, limits)) {
        Int big = div_exact(target, g * g);
        if (big < d) continue;
        Int limit = isqrt(big);
        for (const Int& r : sqrt_mod_all(mod_floor(-d, big), big, limits)) {
            Int x = big, y = r;
            while (y * y > big) {
                Int t = mod_floor(x, y);
                x = y;
                y = t;
            }
            Int rem = big - y * y;
            if (y == 0 || rem == 0) continue;
            if (mod_floor(rem, d) != 0) continue;
            Int q = div_exact(rem, d);
            if (!is_perfect_square(q)) continue;
            consider(best, y * g, isqrt(q) * g, d);
        }
    }
    return best;
}

}  // namespace geodetic
