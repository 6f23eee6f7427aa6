#include "geodetic/splitting.hpp"

#include <algorithm>
#include <set>

namespace geodetic {

namespace {

constexpr mpfr_prec_t kStartPrec = 320;
constexpr mpfr_prec_t kMaxPrec = 1 << 16;

// Rank over F_2 of the radicand differences: the group generated by the
// square-free kernels k_i * k_0 under square-free multiplication. Standard
// XOR basis keyed by the largest prime of each reduced row.
int generator_rank(const MultiQuadNumber& z) {
    std::vector<Int> radicands;
    for (const auto& [k, c] : z.coeffs()) radicands.push_back(k);
    if (radicands.empty()) return 0;
    std::map<Int, std::set<Int>> basis;  // pivot prime -> reduced row
    for (size_t i = 1; i < radicands.size(); ++i) {
        std::set<Int> row;
        for (const auto& [p, e] : factorize(radicands[i] * radicands[0]))
            if (e % 2) row.insert(p);
        while (!row.empty()) {
            Int pivot = *row.rbegin();
            auto it = basis.find(pivot);
            if (it == basis.end()) {
                basis.emplace(pivot, std::move(row));
                break;
            }
            std::set<Int> merged;  // symmetric difference
            std::set_symmetric_difference(row.begin(), row.end(), it->second.begin(),
                                          it->second.end(),
                                          std::inserter(merged, merged.begin()));
            row = std::move(merged);
        }
    }
    return static_cast<int>(basis.size());
}

struct Node {
    MultiQuadNumber tangent;
    bool infinite_tangent = false;
    // value = sum over atoms of sign * atan(eval(atom)); exact at any precision
    std::vector<std::pair<int, MultiQuadNumber>> value_atoms;
    Int weight;
};

RealInterval node_value(const Node& node, mpfr_prec_t prec) {
    RealInterval acc(prec);
    for (const auto& [sign, atom] : node.value_atoms) {
        RealInterval a = atom.eval(prec).atan();
        acc = sign > 0 ? acc + a : acc - a;
    }
    return acc;
}

// Unique integer n with value = n * pi/2 known exact, or the certified floor
// of value/(pi/2) for values strictly inside a quadrant.
Int pin_quarter_turns(const Node& node, bool exact_boundary) {
    for (mpfr_prec_t prec = kStartPrec;; prec *= 2) {
        if (prec > kMaxPrec) throw InternalError("quarter-turn count did not settle");
        RealInterval ratio =
            node_value(node, prec) * RealInterval::inv_pi(prec).scaled(Rat(2));
        Rat lo = ratio.lo_rat(), hi = ratio.hi_rat();
        if (exact_boundary) {
            if (lo.ceil() == hi.floor()) return lo.ceil();
        } else {
            if (lo.floor() == hi.floor()) return lo.floor();
        }
    }
}

void emit_leaf(const Node& node, SplitAngleResult& out) {
    Int n;
    Rat r;
    if (node.infinite_tangent || node.tangent.is_zero()) {
        n = pin_quarter_turns(node, true);
        r = Rat(0);
    } else {
        n = pin_quarter_turns(node, false);
        const auto& [k, c] = *node.tangent.coeffs().begin();
        Rat t2 = c * c * Rat(k);  // tan^2 of the angle
        r = (mod_floor(n, Int(2)) == 0) ? t2 / (Rat(1) + t2) : Rat(1) / (Rat(1) + t2);
    }
    Int folded = mod_floor(n, Int(2));
    out.j += node.weight * (n - folded);  // excess quarter turns, per copy
    if (folded == 0 && r.is_zero()) return;   // exact zero part
    PureAngle part(folded, r);
    for (Int i = 0; i < node.weight; ++i) out.parts.push_back(part);
}

void split_rec(const Node& node, SplitAngleResult& out) {
    if (node.infinite_tangent || node.tangent.is_zero() || node.tangent.is_single_term()) {
        emit_leaf(node, out);
        return;
    }
    // Peel the largest prime that separates the radicands.
    std::optional<Int> pick;
    MultiQuadNumber z1, z2;
    for (const Int& p : node.tangent.radicand_primes()) {
        auto [without, with] = node.tangent.split_by_prime(p);
        if (!without.is_zero() && !with.is_zero() && (!pick || p > *pick)) {
            pick = p;
            z1 = without;
            z2 = with;
        }
    }
    if (!pick) throw InternalError("no separating prime for a multi-term tangent");
    MultiQuadNumber conj = z1 - z2 * MultiQuadNumber::term(Rat(1), *pick);

    Node gamma, delta;
    gamma.weight = div_exact(node.weight, Int(2));
    delta.weight = gamma.weight;
    gamma.value_atoms = node.value_atoms;
    gamma.value_atoms.emplace_back(1, conj);
    delta.value_atoms = node.value_atoms;
    delta.value_atoms.emplace_back(-1, conj);

    const MultiQuadNumber& z = node.tangent;
    MultiQuadNumber one(Rat(1));
    MultiQuadNumber num_g = z + conj, den_g = one - z * conj;
    if (den_g.is_zero())
        gamma.infinite_tangent = true;
    else
        gamma.tangent = num_g / den_g;
    MultiQuadNumber num_d = z - conj, den_d = one + z * conj;
    if (den_d.is_zero())
        delta.infinite_tangent = true;
    else
        delta.tangent = num_d / den_d;

    split_rec(gamma, out);
    split_rec(delta, out);
}

}  // namespace

SplitAngleResult split_angle(const MultiQuadNumber& tanval) {
    if (tanval.is_zero() || tanval.is_rational())
        throw DomainError("split_angle needs a tangent with at least one radicand");
    SplitAngleResult out;
    out.m = Int(1) << static_cast<unsigned>(generator_rank(tanval));
    out.j = 0;
    Node root;
    root.tangent = tanval;
    root.value_atoms.emplace_back(1, tanval);
    root.weight = out.m;
    split_rec(root, out);
    return out;
}

RealInterval GeodeticSum::value(mpfr_prec_t precision) const {
    RealInterval acc(precision);
    for (const auto& [coeff, angle] : parts) acc = acc + angle.value(precision).scaled(coeff);
    return acc;
}

std::string GeodeticSum::str() const {
    if (parts.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coeff, angle] : parts) {
        Rat a = coeff.abs();
        std::string piece = (a == Rat(1)) ? angle.str() : a.str() + "*" + angle.str();
        if (first)
            out += (coeff.sign() < 0 ? "-" : "") + piece;
        else
            out += (coeff.sign() < 0 ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

AngleCombo decompose_mixed(const GeodeticSum& sum) {
    AngleCombo acc;
    for (const auto& [coeff, angle] : sum.parts) acc.add(decompose(angle), coeff);
    return acc;
}

std::optional<Rat> is_rational_multiple_of_pi(const GeodeticSum& sum) {
    AngleCombo combo = decompose_mixed(sum);
    if (combo.terms_empty()) return combo.t();
    return std::nullopt;
}

std::vector<Relation> find_relations(const std::vector<GeodeticSum>& angles) {
    const size_t n = angles.size();
    std::vector<AngleCombo> combos;
    combos.reserve(n);
    std::set<BasisKey> keys;
    for (const auto& sum : angles) {
        combos.push_back(decompose_mixed(sum));
        for (const auto& [key, coeff] : combos.back().terms()) keys.insert(key);
    }

    // Rows indexed by basis keys, columns by angles; solve A c = 0 exactly.
    std::vector<std::vector<Rat>> a;
    for (const auto& key : keys) {
        std::vector<Rat> row(n, Rat(0));
        for (size_t i = 0; i < n; ++i) {
            auto it = combos[i].terms().find(key);
            if (it != combos[i].terms().end()) row[i] = it->second;
        }
        a.push_back(std::move(row));
    }

    // Gaussian elimination to reduced row echelon form.
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < a.size(); ++col) {
        size_t sel = rank;
        while (sel < a.size() && a[sel][col].is_zero()) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[rank], a[sel]);
        Rat inv = a[rank][col].inverse();
        for (size_t c = col; c < n; ++c) a[rank][c] *= inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<Relation> out;
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> c(n, Rat(0));
        c[free_col] = Rat(1);
        for (size_t r = 0; r < rank; ++r) c[pivot_cols[r]] = -a[r][free_col];
        // normalize to a primitive integer vector with positive leading entry
        Int l = 1;
        for (const auto& q : c) l = lcm_int(l, q.den());
        Int g = 0;
        for (auto& q : c) {
            q *= Rat(l);
            g = gcd_int(g, abs_int(q.num()));
        }
        if (g > 1)
            for (auto& q : c) q = Rat(div_exact(q.num(), g));
        for (const auto& q : c) {
            if (q.is_zero()) continue;
            if (q.sign() < 0)
                for (auto& x : c) x = -x;
            break;
        }
        Rat pi_mult(0);
        for (size_t i = 0; i < n; ++i) pi_mult += c[i] * combos[i].t();
        out.push_back(Relation{std::move(c), pi_mult});
    }
    return out;
}

}  // namespace geodetic
