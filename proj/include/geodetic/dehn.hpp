#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geodetic/decompose.hpp"

namespace geodetic {

// Volumes are caller-supplied metadata; irrational ones are opaque symbols
// compared structurally.
struct Volume {
    enum class Kind { rational, irrational };
    Kind kind = Kind::rational;
    Rat value{0};        // engaged meaning for Kind::rational
    std::string symbol;  // for Kind::irrational

    friend bool operator==(const Volume& a, const Volume& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::rational) return a.value == b.value;
        return a.symbol == b.symbol;
    }
};

// An orbit of congruent edges: count copies of the given length and dihedral.
struct Edge {
    Rat length{1};
    Int count{1};
    std::variant<PureAngle, AngleCombo> dihedral;

    Edge(Rat length_, Int count_, std::variant<PureAngle, AngleCombo> dihedral_);
    AngleCombo dihedral_combo() const;
};

struct Polyhedron {
    std::string name;
    std::vector<Edge> edges;
    std::optional<Volume> volume;
};

// Rational coordinates over the V[<p>_d]; the pi-component vanishes.
class DehnVector {
public:
    DehnVector() = default;

    const std::map<BasisKey, Rat>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    void add(const BasisKey& key, const Rat& coeff);
    void add(const DehnVector& other, const Rat& scale = Rat(1));

    friend bool operator==(const DehnVector& a, const DehnVector& b) {
        return a.entries_ == b.entries_;
    }
    // "-60*<3>_5 + 30*<5>_1", "0" when empty
    std::string str() const;

private:
    std::map<BasisKey, Rat> entries_;
};

// sum count * length * V[dihedral] over the edge orbits.
DehnVector dehn_invariant(const Polyhedron& p);

// Unit-edge Platonic/Archimedean solids with geodetic dihedral angles
// (the snub solids are excluded: their dihedral angles are not geodetic).
Polyhedron archimedean(const std::string& name);
const std::vector<std::string>& archimedean_names();

// The published Dehn-invariant column for the sixteen solids, reproduced
// verbatim. For every solid except the rhombicuboctahedron it coincides with
// dehn_invariant(archimedean(name)); see the note in dehn.cpp for that row.
std::vector<std::pair<std::string, DehnVector>> table3();

struct Verdict {
    bool dehn_equal = false;
    enum class VolumeStatus { equal, unequal, unknown } volume_status = VolumeStatus::unknown;
    enum class Overall { yes, no, conditional } overall = Overall::conditional;
};

// Dehn-Sydler test for two weighted collections of polyhedra.
Verdict equidecomposable(const std::vector<std::pair<Int, Polyhedron>>& left,
                         const std::vector<std::pair<Int, Polyhedron>>& right);

}  // namespace geodetic
