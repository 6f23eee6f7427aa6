#include "geodetic/dehn.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace geodetic {

Edge::Edge(Rat length_, Int count_, std::variant<PureAngle, AngleCombo> dihedral_)
    : length(std::move(length_)), count(std::move(count_)), dihedral(std::move(dihedral_)) {
    if (!(length > Rat(0))) throw DomainError("edge length must be positive");
    if (count < 1) throw DomainError("edge count must be at least 1");
}

AngleCombo Edge::dihedral_combo() const {
    if (std::holds_alternative<AngleCombo>(dihedral)) return std::get<AngleCombo>(dihedral);
    return decompose(std::get<PureAngle>(dihedral));
}

void DehnVector::add(const BasisKey& key, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) entries_.erase(it);
}

void DehnVector::add(const DehnVector& other, const Rat& scale) {
    for (const auto& [key, coeff] : other.entries_) add(key, coeff * scale);
}

std::string DehnVector::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : entries_) {
        Rat a = coeff.abs();
        std::string piece = (a == Rat(1)) ? key.str() : a.str() + "*" + key.str();
        if (first)
            out += (coeff.sign() < 0 ? "-" : "") + piece;
        else
            out += (coeff.sign() < 0 ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

DehnVector dehn_invariant(const Polyhedron& p) {
    if (p.edges.empty()) throw DomainError("polyhedron without edges");
    DehnVector v;
    for (const Edge& e : p.edges) {
        AngleCombo combo = e.dihedral_combo();  // the pi part carries V = 0
        for (const auto& [key, coeff] : combo.terms())
            v.add(key, coeff * e.length * Rat(e.count));
    }
    return v;
}

namespace {

const BasisKey k32{3, 2};  // arctan(sqrt 2)
const BasisKey k35{3, 5};  // (1/2) arctan(sqrt5 / 2)
const BasisKey k51{5, 1};  // arctan 2

AngleCombo combo(Rat t, std::initializer_list<std::pair<BasisKey, Rat>> terms) {
    AngleCombo c(std::move(t));
    for (const auto& [key, coeff] : terms) c.add_term(key, coeff);
    return c;
}

// Dihedral angles of the non-snub unit-edge solids, as exact basis
// expressions. Each entry is (edge count, dihedral).
Polyhedron builtin(const std::string& name) {
    auto P = [&name](std::vector<Edge> edges) {
        return Polyhedron{name, std::move(edges), std::nullopt};
    };
    const Rat half(Int(1), Int(2));
    const AngleCombo right_angle = combo(half, {});                      // pi/2
    const AngleCombo tetra = combo(1, {{k32, -2}});                      // pi - 2<3>_2
    const AngleCombo octa = combo(0, {{k32, 2}});                        // 2<3>_2
    const AngleCombo cubocta = combo(1, {{k32, -1}});                    // pi - <3>_2
    const AngleCombo sq_tri = combo(half, {{k32, 1}});                   // pi/2 + <3>_2
    const AngleCombo three_quarters = combo(Rat(Int(3), Int(4)), {});    // 3pi/4
    const AngleCombo icosa = combo(half, {{k35, 2}});                    // pi/2 + 2<3>_5
    const AngleCombo dodeca = combo(1, {{k51, -1}});                     // pi - <5>_1
    const AngleCombo penta_mix = combo(Rat(Int(3), Int(4)), {{k35, -1}, {k51, half}});
    const AngleCombo tri_sq_icosa = combo(Rat(Int(3), Int(4)), {{k35, 1}});
    const AngleCombo sq_penta = combo(1, {{k51, -half}});                // pi - (1/2)<5>_1

    if (name == "tetrahedron") return P({{1, 6, tetra}});
    if (name == "truncated tetrahedron") return P({{1, 6, tetra}, {1, 12, octa}});
    if (name == "cube") return P({{1, 12, right_angle}});
    if (name == "truncated cube") return P({{1, 24, cubocta}, {1, 12, right_angle}});
    if (name == "octahedron") return P({{1, 12, octa}});
    if (name == "truncated octahedron") return P({{1, 24, cubocta}, {1, 12, octa}});
    if (name == "rhombicuboctahedron") return P({{1, 24, sq_tri}, {1, 24, three_quarters}});
    if (name == "cuboctahedron") return P({{1, 24, cubocta}});
    if (name == "truncated cuboctahedron")
        return P({{1, 24, sq_tri}, {1, 24, three_quarters}, {1, 24, cubocta}});
    if (name == "icosahedron") return P({{1, 30, icosa}});
    if (name == "truncated icosahedron") return P({{1, 30, icosa}, {1, 60, penta_mix}});
    if (name == "dodecahedron") return P({{1, 30, dodeca}});
    if (name == "truncated dodecahedron") return P({{1, 30, dodeca}, {1, 60, penta_mix}});
    if (name == "rhombicosidodecahedron")
        return P({{1, 60, tri_sq_icosa}, {1, 60, sq_penta}});
    if (name == "icosidodecahedron") return P({{1, 60, penta_mix}});
    if (name == "truncated icosidodecahedron")
        return P({{1, 60, tri_sq_icosa}, {1, 60, sq_penta}, {1, 60, penta_mix}});
    throw InternalError("unknown builtin " + name);
}

std::string normalize_name(const std::string& raw) {
    std::string out;
    for (char c : raw) {
        if (c == '_' || c == '-') c = ' ';
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    while (!out.empty() && out.front() == ' ') out.erase(out.begin());
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

}  // namespace

const std::vector<std::string>& archimedean_names() {
    static const std::vector<std::string> names = {
        "tetrahedron",
        "truncated tetrahedron",
        "cube",
        "truncated cube",
        "octahedron",
        "truncated octahedron",
        "rhombicuboctahedron",
        "cuboctahedron",
        "truncated cuboctahedron",
        "icosahedron",
        "truncated icosahedron",
        "dodecahedron",
        "truncated dodecahedron",
        "rhombicosidodecahedron",
        "icosidodecahedron",
        "truncated icosidodecahedron",
    };
    return names;
}

Polyhedron archimedean(const std::string& name) {
    std::string canon = normalize_name(name);
    if (canon == "snub cube" || canon == "snub dodecahedron")
        throw DomainError("the snub solids are excluded: their dihedral angles are not geodetic");
    const auto& names = archimedean_names();
    if (std::find(names.begin(), names.end(), canon) == names.end()) {
        std::string known;
        for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
        throw DomainError("unknown polyhedron '" + name + "'; expected one of: " + known);
    }
    return builtin(canon);
}

std::vector<std::pair<std::string, DehnVector>> table3() {
    // Published column, reproduced row by row. Computing from the stored
    // dihedral angles reproduces every row except the rhombicuboctahedron,
    // whose true triangle-square dihedral pi/2 + <3>_2 (at 24 unit edges)
    // makes the invariant +24<3>_2; the published value keeps the opposite
    // sign and is preserved here verbatim.
    auto vec = [](std::initializer_list<std::pair<BasisKey, Rat>> terms) {
        DehnVector v;
        for (const auto& [key, coeff] : terms) v.add(key, coeff);
        return v;
    };
    return {
        {"tetrahedron", vec({{k32, -12}})},
        {"truncated tetrahedron", vec({{k32, 12}})},
        {"cube", vec({})},
        {"truncated cube", vec({{k32, -24}})},
        {"octahedron", vec({{k32, 24}})},
        {"truncated octahedron", vec({})},
        {"rhombicuboctahedron", vec({{k32, -24}})},
        {"cuboctahedron", vec({{k32, -24}})},
        {"truncated cuboctahedron", vec({})},
        {"icosahedron", vec({{k35, 60}})},
        {"truncated icosahedron", vec({{k51, 30}})},
        {"dodecahedron", vec({{k51, -30}})},
        {"truncated dodecahedron", vec({{k35, -60}})},
        {"rhombicosidodecahedron", vec({{k35, 60}, {k51, -30}})},
        {"icosidodecahedron", vec({{k35, -60}, {k51, 30}})},
        {"truncated icosidodecahedron", vec({})},
    };
}

namespace {

struct SideSummary {
    DehnVector dehn;
    bool volumes_known = true;
    Rat rational_volume{0};
    std::map<std::string, Int> symbolic;          // symbol -> total multiplicity
    std::map<std::string, Int> shape_multiset;    // fallback identity comparison
};

SideSummary summarize(const std::vector<std::pair<Int, Polyhedron>>& side) {
    SideSummary s;
    for (const auto& [mult, poly] : side) {
        if (mult < 1) throw DomainError("multiplicities must be at least 1");
        s.dehn.add(dehn_invariant(poly), Rat(mult));
        s.shape_multiset[poly.name] += mult;
        if (!poly.volume) {
            s.volumes_known = false;
        } else if (poly.volume->kind == Volume::Kind::rational) {
            s.rational_volume += poly.volume->value * Rat(mult);
        } else {
            s.symbolic[poly.volume->symbol] += mult;
        }
    }
    return s;
}

}  // namespace

Verdict equidecomposable(const std::vector<std::pair<Int, Polyhedron>>& left,
                         const std::vector<std::pair<Int, Polyhedron>>& right) {
    SideSummary l = summarize(left), r = summarize(right);
    Verdict v;
    v.dehn_equal = (l.dehn == r.dehn);

    if (l.shape_multiset == r.shape_multiset) {
        v.volume_status = Verdict::VolumeStatus::equal;  // identical collections
    } else if (l.volumes_known && r.volumes_known) {
        if (l.symbolic == r.symbolic) {
            v.volume_status = (l.rational_volume == r.rational_volume)
                                  ? Verdict::VolumeStatus::equal
                                  : Verdict::VolumeStatus::unequal;
        } else {
            // Distinct symbol multisets: totals are not comparable structurally.
            v.volume_status = Verdict::VolumeStatus::unknown;
        }
    } else {
        v.volume_status = Verdict::VolumeStatus::unknown;
    }

    if (!v.dehn_equal || v.volume_status == Verdict::VolumeStatus::unequal)
        v.overall = Verdict::Overall::no;
    else if (v.volume_status == Verdict::VolumeStatus::equal)
        v.overall = Verdict::Overall::yes;
    else
        v.overall = Verdict::Overall::conditional;
    return v;
}

}  // namespace geodetic
