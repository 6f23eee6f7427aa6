#pragma once

#include <memory>
#include <vector>

#include "geodetic/numeric.hpp"
#include "geodetic/numtheory.hpp"

namespace geodetic {

// Primitive positive definite binary quadratic form A x^2 + B xy + C y^2.
struct QuadForm {
    Int A, B, C;

    Int discriminant() const { return B * B - 4 * A * C; }
    bool is_reduced() const;
    bool is_principal() const { return A == 1; }

    friend bool operator==(const QuadForm& f, const QuadForm& g) {
        return f.A == g.A && f.B == g.B && f.C == g.C;
    }
    friend bool operator<(const QuadForm& f, const QuadForm& g) {
        if (f.A != g.A) return f.A < g.A;
        if (f.B != g.B) return f.B < g.B;
        return f.C < g.C;
    }
    std::string str() const;
};

// Field discriminant of O_d: -d for d = 3 (mod 4), else -4d.
Int discriminant_of(const Int& d);

// The unique reduced form equivalent to f (f primitive, A > 0, D < 0).
QuadForm reduce(const QuadForm& f);

// Gauss/Dirichlet composition, returned reduced.
QuadForm compose(const QuadForm& f, const QuadForm& g);

QuadForm principal_form(const Int& D);
QuadForm inverse_form(const QuadForm& f);

struct ClassGroup {
    Int d;                        // square-free positive
    Int D;                        // field discriminant
    std::vector<QuadForm> forms;  // all reduced forms, sorted
    Int c;                        // class number = forms.size()
};

// Enumerates the class group of O_d; results are memoized per d.
std::shared_ptr<const ClassGroup> class_group(const Int& d);

// Least s >= 1 with f^s principal; divides the class number.
Int form_order(const QuadForm& f, const ClassGroup& group);

}  // namespace geodetic
