#pragma once

#include <string>
#include <variant>

#include "geodetic/dehn.hpp"
#include "geodetic/multiquad.hpp"
#include "geodetic/splitting.hpp"

namespace geodetic {

// Angle spec grammar:
//   ang(N) | ang(P/Q) | ang(N+P/Q)
//   sin2=P/Q [(+|-) N*pi/2]   (same for cos2=, tan2=)
//   tan=<multiquad with a single radical> [(+|-) N*pi/2]
PureAngle parse_pure_angle(const std::string& text);

// Sums of square roots with rational coefficients:
//   "sqrt6+sqrt3+sqrt2+1", "(5/4)sqrt(3)", "1/2*sqrt(2) - 1"
MultiQuadNumber parse_multiquad(const std::string& text);

// "1*ang(8/9) + 2*ang(1+2/3)"; a bare angle spec is a one-term sum.
GeodeticSum parse_geodetic_sum(const std::string& text);

// "pi - 2*<3>_2", "3*pi/4 + <3>_5 - 1/2*<5>_1", also "<3>_2^-2" forms.
AngleCombo parse_angle_combo(const std::string& text);

// Dihedral field of the polyhedron schema: angle spec or combo expression.
std::variant<PureAngle, AngleCombo> parse_dihedral(const std::string& text);
std::string dihedral_to_string(const std::variant<PureAngle, AngleCombo>& dihedral);

// {"name": ..., "volume": {...}|null, "edges": [{"length","count","dihedral"}]}
Polyhedron parse_polyhedron_json(const std::string& json_text);
std::string polyhedron_to_json(const Polyhedron& p, int indent = -1);

std::string combo_to_json(const AngleCombo& combo, int indent = -1);
AngleCombo combo_from_json(const std::string& json_text);

// {"parts": [{"coeff": "1", "n": 0, "r": "8/9"}, ...]}
std::string sum_to_json(const GeodeticSum& sum, int indent = -1);
GeodeticSum sum_from_json(const std::string& json_text);

}  // namespace geodetic
