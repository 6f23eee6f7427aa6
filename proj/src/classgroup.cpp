#include "geodetic/classgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace geodetic {

bool QuadForm::is_reduced() const {
    Int b = abs_int(B);
    if (!(b <= A && A <= C)) return false;
    if ((b == A || A == C) && B < 0) return false;
    return true;
}

std::string QuadForm::str() const {
    return "(" + A.get_str() + ", " + B.get_str() + ", " + C.get_str() + ")";
}

Int discriminant_of(const Int& d) {
    if (d < 1 || !is_squarefree(d)) throw DomainError("d must be square-free and positive");
    if (mod_floor(d, Int(4)) == 3) return -d;
    return -4 * d;
}

QuadForm principal_form(const Int& D) {
    if (mod_floor(D, Int(4)) == 0) return {1, 0, div_exact(-D, Int(4))};
    return {1, 1, div_exact(1 - D, Int(4))};
}

namespace {

// Field discriminants only: -d or -4d with d square-free.
bool is_fundamental(const Int& D) {
    if (D >= 0) return false;
    if (mod_floor(D, Int(4)) == 1) return is_squarefree(-D);
    if (mod_floor(D, Int(4)) != 0) return false;
    Int m = div_exact(-D, Int(4));
    return is_squarefree(m) && mod_floor(m, Int(4)) != 3;
}

}  // namespace

QuadForm reduce(const QuadForm& f) {
    Int D = f.discriminant();
    if (!is_fundamental(D))
        throw DomainError("form discriminant " + D.get_str() + " is not a field discriminant");
    if (f.A <= 0) throw DomainError("form must have A > 0");
    if (gcd_int(gcd_int(f.A, f.B), f.C) != 1) throw DomainError("form must be primitive");
    Int a = f.A, b = f.B, c = f.C;
    while (true) {
        // normalize: b into (-a, a]
        if (!(-a < b && b <= a)) {
            Int r = a - mod_floor(a - b, 2 * a);  // r in (-a, a], r = b (mod 2a)
            c = div_exact(r * r - D, 4 * a);
            b = r;
        }
        if (a > c) {
            Int t = a;
            a = c;
            c = t;
            b = -b;
            continue;
        }
        if ((a == c || -b == a) && b < 0) b = -b;
        break;
    }
    return {a, b, c};
}

QuadForm inverse_form(const QuadForm& f) { return reduce({f.A, -f.B, f.C}); }

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    Int D = f.discriminant();
    if (D != g.discriminant()) throw DomainError("composition requires equal discriminants");
    // Classical Gauss/Dirichlet composition on (a, b) pairs with c implied.
    Int a1 = f.A, b1 = f.B, a2 = g.A, b2 = g.B;
    Int d1, v, w;
    mpz_gcdext(d1.get_mpz_t(), v.get_mpz_t(), w.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
    Int b3 = v * a1 * (b2 - b1);
    Int a3 = a1 * a2;
    if (d1 != 1) {
        Int s = div_exact(b1 + b2, Int(2));
        Int dd, v2, w2;
        mpz_gcdext(dd.get_mpz_t(), v2.get_mpz_t(), w2.get_mpz_t(), d1.get_mpz_t(),
                   s.get_mpz_t());
        b3 = div_exact(b3 * v2 + w2 * div_exact(D - b1 * b1, Int(2)), dd);
        a3 = div_exact(a3, dd * dd);
    }
    b3 = mod_floor(b3 + b1, 2 * a3);
    Int c3 = div_exact(b3 * b3 - D, 4 * a3);
    return reduce({a3, b3, c3});
}

namespace {

std::vector<QuadForm> enumerate_reduced_forms(const Int& D) {
    std::vector<QuadForm> forms;
    for (Int a = 1; 3 * a * a <= -D; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if (mod_floor(b - D, Int(2)) != 0) continue;
            Int num = b * b - D;
            if (mod_floor(num, 4 * a) != 0) continue;
            Int c = div_exact(num, 4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (gcd_int(gcd_int(a, abs_int(b)), c) != 1) continue;
            forms.push_back({a, b, c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

}  // namespace

std::shared_ptr<const ClassGroup> class_group(const Int& d) {
    static std::map<Int, std::shared_ptr<const ClassGroup>> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    auto group = std::make_shared<ClassGroup>();
    group->d = d;
    group->D = discriminant_of(d);
    group->forms = enumerate_reduced_forms(group->D);
    group->c = static_cast<long>(group->forms.size());
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(d, std::move(group));
    return it->second;
}

Int form_order(const QuadForm& f, const ClassGroup& group) {
    QuadForm fr = reduce(f);
    if (!std::binary_search(group.forms.begin(), group.forms.end(), fr))
        throw DomainError("form does not belong to the class group");
    QuadForm id = principal_form(group.D);
    QuadForm acc = fr;
    Int s = 1;
    while (!(acc == id)) {
        acc = compose(acc, fr);
        ++s;
        if (s > group.c) throw InternalError("form order exceeded class number");
    }
    return s;
}

}  // namespace geodetic
