#include "geodetic/basis.hpp"

#include <map>
#include <mutex>

namespace geodetic {

PrimeIdeal BasisAngle::positive_ideal() const {
    const Int& p = key.p;
    const Int& d = key.d;
    SplitType st = split_type(p, d);
    if (!std::holds_alternative<Split>(st)) throw InternalError("basis key is not split");
    const auto& sp = std::get<Split>(st);
    QuadInt w = witness();
    if (ideal_valuation(w, sp.first) > 0) return sp.first;
    if (ideal_valuation(w, sp.second) > 0) return sp.second;
    throw InternalError("witness lies in neither conjugate ideal");
}

RealInterval BasisAngle::evaluate(mpfr_prec_t precision) const {
    if (precision < 32) throw DomainError("evaluate requires precision >= 32");
    mpfr_prec_t work = precision + 32;
    RealInterval root = RealInterval::from_int(key.d, work).sqrt();
    RealInterval tangent = root.scaled(Rat(b, a));
    RealInterval value = tangent.atan().scaled(Rat(1, s));
    Rat bound(Int(1), Int(1) << static_cast<unsigned long>(precision - 1));
    if (!(value.width() <= bound)) throw InternalError("basis angle enclosure too wide");
    return value;
}

BasisResult basis_angle(const Int& p, const Int& d) {
    static std::map<std::pair<Int, Int>, BasisResult> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({p, d});
        if (it != cache.end()) return it->second;
    }
    SplitType st = split_type(p, d);
    BasisResult result;
    if (std::holds_alternative<Inert>(st)) {
        result = {BasisStatus::inert, std::nullopt};
    } else if (std::holds_alternative<Ramified>(st)) {
        result = {BasisStatus::ramified, std::nullopt};
    } else {
        const auto& sp = std::get<Split>(st);
        auto [s, gen] = ideal_class_order(sp.first, d);
        QuadInt w = prime_power_generator(sp.first, d, s);
        result = {BasisStatus::defined, BasisAngle{BasisKey{p, d}, s, w.x, w.y}};
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(std::make_pair(p, d), result);
    return result;
}

std::vector<BasisCell> basis_table(const Int& p_max, const Int& d_max) {
    if (p_max < 2 || d_max < 1) throw DomainError("basis_table requires p_max >= 2, d_max >= 1");
    if (p_max >= Int(1000000)) throw DomainError("basis_table p_max beyond the prime table");
    std::vector<BasisCell> cells;
    for (long p : small_primes()) {
        if (p_max < p) break;
        for (Int d = 1; d <= d_max; ++d) {
            if (!is_squarefree(d)) continue;
            BasisResult r = basis_angle(p, d);
            BasisCell cell{p, d, r.status, r.angle, ""};
            if (r.angle) cell.radians = r.angle->evaluate(128).decimal(10);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

}  // namespace geodetic
