#pragma once

#include "geodetic/angles.hpp"

namespace geodetic {

// Exact tangent of a pure geodetic angle as a reduced surd (b/a) sqrt(d).
SurdTan tan_surd(const PureAngle& theta);

// Coordinates of theta in the basis {pi} + {<p>_d}: factors the norm of the
// associated quadratic integer, assigns signed integer coefficients by
// conjugate selection, then pins the rational pi-part and certifies it with
// combo_verify_exact. The pi-part search starts at start_precision bits and
// doubles until the separation bound is met.
AngleCombo decompose(const PureAngle& theta, mpfr_prec_t start_precision = 256);

RealInterval combo_eval(const AngleCombo& combo, mpfr_prec_t precision);

// Exact certificate for theta = t*pi + sum coeff*<p>_d (integer coefficients):
// the matching product of quadratic integers must be real with the sign
// dictated by the parity of the pi-multiple, and an interval bound excludes
// every other branch. Pure-pi combinations are compared directly.
bool combo_verify_exact(const PureAngle& theta, const AngleCombo& combo);

}  // namespace geodetic
