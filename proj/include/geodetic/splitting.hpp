#pragma once

#include <optional>
#include <vector>

#include "geodetic/decompose.hpp"
#include "geodetic/multiquad.hpp"

namespace geodetic {

// m * alpha = sum(parts) + j * pi/2, where alpha is the principal arctangent
// of the input, m = 2^g for g independent radicand generators beyond the
// first, and each part has a tangent in a single Q*sqrt(d).
struct SplitAngleResult {
    Int m;
    std::vector<PureAngle> parts;  // listed with multiplicity, n folded into {0,1}
    Int j;
};

// Tangent addition/subtraction recursion peeling one radicand prime per step.
SplitAngleResult split_angle(const MultiQuadNumber& tanval);

// Rational linear combination of pure geodetic angles.
struct GeodeticSum {
    std::vector<std::pair<Rat, PureAngle>> parts;

    RealInterval value(mpfr_prec_t precision) const;
    std::string str() const;
};

// Sum of the scaled decompositions; term coefficients may now be rational.
AngleCombo decompose_mixed(const GeodeticSum& sum);

// Engaged with the pi-coefficient exactly when all basis terms cancel.
std::optional<Rat> is_rational_multiple_of_pi(const GeodeticSum& sum);

// A dependency among the given angles modulo rational multiples of pi:
// sum coeffs[i] * angle[i] = pi_multiple * pi.
struct Relation {
    std::vector<Rat> coeffs;
    Rat pi_multiple;
};

// Basis of all such dependencies (exact rational nullspace; coefficient
// vectors normalized to primitive integers with positive leading entry).
std::vector<Relation> find_relations(const std::vector<GeodeticSum>& angles);

}  // namespace geodetic
