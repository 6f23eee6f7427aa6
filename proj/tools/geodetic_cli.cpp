// geodetic: exact decomposition of angles with rational squared trigonometric
// functions, and Dehn invariants of the polyhedra built from them.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "geodetic/dehn.hpp"
#include "geodetic/parse.hpp"
#include "geodetic/splitting.hpp"

namespace {

using namespace geodetic;

struct Config {
    long precision = 256;
    bool json = false;
};

std::string status_str(BasisStatus s) {
    switch (s) {
        case BasisStatus::defined:
            return "defined";
        case BasisStatus::inert:
            return "inert";
        case BasisStatus::ramified:
            return "ramified";
    }
    return "?";
}

int cmd_basis(const Int& p_max, const Int& d_max, const Config& cfg) {
    auto cells = basis_table(p_max, d_max);
    if (cfg.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& cell : cells) {
            nlohmann::json jc{{"p", static_cast<long>(cell.p.get_si())},
                              {"d", static_cast<long>(cell.d.get_si())},
                              {"status", status_str(cell.status)}};
            if (cell.angle) {
                jc["s"] = static_cast<long>(cell.angle->s.get_si());
                jc["a"] = static_cast<long>(cell.angle->a.get_si());
                jc["b"] = static_cast<long>(cell.angle->b.get_si());
                jc["radians"] = cell.radians;
            }
            out.push_back(jc);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::vector<Int> ds;
    for (Int d = 1; d <= d_max; ++d)
        if (is_squarefree(d)) ds.push_back(d);
    const int width = 14;
    std::cout << std::setw(6) << "p\\d";
    for (const auto& d : ds) std::cout << std::setw(width) << d.get_str();
    std::cout << "\n";
    size_t i = 0;
    for (long p : small_primes()) {
        if (p_max < p) break;
        std::cout << std::setw(6) << p;
        for (size_t k = 0; k < ds.size(); ++k, ++i) {
            const auto& cell = cells.at(i);
            std::string text = cell.status == BasisStatus::inert      ? "#"
                               : cell.status == BasisStatus::ramified ? "*"
                                                                      : cell.radians;
            std::cout << std::setw(width) << text;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_decompose(const std::string& spec, const Config& cfg) {
    PureAngle theta = parse_pure_angle(spec);
    AngleCombo combo = decompose(theta, cfg.precision);
    if (cfg.json)
        std::cout << combo_to_json(combo, 2) << "\n";
    else
        std::cout << combo.str() << "\n";
    return 0;
}

int cmd_split(const std::string& expr, const Config& cfg) {
    MultiQuadNumber tangent = parse_multiquad(expr);
    SplitAngleResult result = split_angle(tangent);
    if (cfg.json) {
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& part : result.parts)
            jp.push_back({{"n", static_cast<long>(part.n.get_si())},
                          {"r", part.r.str()},
                          {"str", part.str()}});
        nlohmann::json out{{"m", static_cast<long>(result.m.get_si())},
                           {"j", static_cast<long>(result.j.get_si())},
                           {"parts", jp}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << result.m.get_str() << "*alpha = ";
    bool first = true;
    for (const auto& part : result.parts) {
        if (!first) std::cout << " + ";
        std::cout << part.str();
        first = false;
    }
    if (result.parts.empty()) std::cout << "0";
    if (result.j != 0) std::cout << " + " << result.j.get_str() << "*pi/2";
    std::cout << "\n";
    return 0;
}

int cmd_relate(const std::vector<std::string>& specs, const Config& cfg) {
    std::vector<GeodeticSum> sums;
    sums.reserve(specs.size());
    for (const auto& s : specs) sums.push_back(parse_geodetic_sum(s));
    auto relations = find_relations(sums);
    if (cfg.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& rel : relations) {
            nlohmann::json jc = nlohmann::json::array();
            for (const auto& c : rel.coeffs) jc.push_back(c.str());
            out.push_back({{"coeffs", jc}, {"pi_multiple", rel.pi_multiple.str()}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (relations.empty()) {
        std::cout << "independent\n";
        return 0;
    }
    for (const auto& rel : relations) {
        std::cout << "relation (";
        for (size_t i = 0; i < rel.coeffs.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << rel.coeffs[i].str();
        }
        std::cout << ") = ";
        if (rel.pi_multiple.is_zero())
            std::cout << "0";
        else if (rel.pi_multiple == Rat(1))
            std::cout << "pi";
        else
            std::cout << rel.pi_multiple.str() << "*pi";
        std::cout << "\n";
    }
    return 0;
}

Polyhedron load_polyhedron(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_polyhedron_json(buffer.str());
    }
    return archimedean(arg);
}

std::string verdict_str(Verdict::Overall o) {
    switch (o) {
        case Verdict::Overall::yes:
            return "YES";
        case Verdict::Overall::no:
            return "NO";
        case Verdict::Overall::conditional:
            return "CONDITIONAL";
    }
    return "?";
}

std::string volume_str(Verdict::VolumeStatus s) {
    switch (s) {
        case Verdict::VolumeStatus::equal:
            return "equal";
        case Verdict::VolumeStatus::unequal:
            return "unequal";
        case Verdict::VolumeStatus::unknown:
            return "unknown";
    }
    return "?";
}

int cmd_dehn(const std::vector<std::string>& args, bool sum, const Config& cfg) {
    std::vector<Polyhedron> polys;
    polys.reserve(args.size());
    for (const auto& a : args) polys.push_back(load_polyhedron(a));
    std::vector<DehnVector> vectors;
    DehnVector total;
    for (const auto& p : polys) {
        vectors.push_back(dehn_invariant(p));
        total.add(vectors.back());
    }
    nlohmann::json jout;
    if (cfg.json) jout["polyhedra"] = nlohmann::json::array();
    for (size_t i = 0; i < polys.size(); ++i) {
        if (cfg.json)
            jout["polyhedra"].push_back({{"name", polys[i].name}, {"dehn", vectors[i].str()}});
        else
            std::cout << polys[i].name << ": " << vectors[i].str() << "\n";
    }
    if (sum) {
        if (cfg.json)
            jout["sum"] = total.str();
        else
            std::cout << "sum: " << total.str() << "\n";
    }
    if (polys.size() == 2 && !sum) {
        Verdict v = equidecomposable({{1, polys[0]}}, {{1, polys[1]}});
        if (cfg.json) {
            jout["dehn_equal"] = v.dehn_equal;
            jout["volume"] = volume_str(v.volume_status);
            jout["verdict"] = verdict_str(v.overall);
        } else {
            std::cout << "dehn_equal: " << (v.dehn_equal ? "true" : "false") << "\n"
                      << "volume: " << volume_str(v.volume_status) << "\n"
                      << "verdict: " << verdict_str(v.overall) << "\n";
        }
    }
    if (cfg.json) std::cout << jout.dump(2) << "\n";
    return 0;
}

int cmd_table3(const Config& cfg) {
    auto rows = table3();
    if (cfg.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [name, vec] : rows) out.push_back({{"name", name}, {"dehn", vec.str()}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& [name, vec] : rows) std::cout << name << ": " << vec.str() << "\n";
    return 0;
}

int fail(const Config& cfg, const std::string& kind, const std::string& detail, int code) {
    if (cfg.json) {
        nlohmann::json out{{"error", {{"kind", kind}, {"detail", detail}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cerr << "error (" << kind << "): " << detail << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact geodetic-angle decomposition and Dehn invariants"};
    app.require_subcommand(1);

    Config cfg;
    std::string factor_limit;
    app.add_option("--precision", cfg.precision, "working precision in bits (>= 64)")
        ->capture_default_str();
    app.add_flag("--json", cfg.json, "machine-readable output");
    app.add_option("--factor-limit", factor_limit, "factoring cofactor bound (default 2^64)");

    long p_max = 31, d_max = 21;
    auto* basis = app.add_subcommand("basis", "tabulate basis angles <p>_d");
    basis->fallthrough();
    basis->add_option("--p-max", p_max, "largest prime row")->capture_default_str();
    basis->add_option("--d-max", d_max, "largest square-free column")->capture_default_str();

    std::string angle_spec;
    auto* dec = app.add_subcommand("decompose", "decompose a pure geodetic angle");
    dec->fallthrough();
    dec->add_option("angle", angle_spec, "angle spec, e.g. \"sin2=8/9\" or \"tan=(5/4)sqrt(3)\"")
        ->required();

    std::string split_expr;
    auto* split = app.add_subcommand("split", "split a polyquadratic arctangent");
    split->fallthrough();
    split->add_option("tangent", split_expr, "tangent value, e.g. \"sqrt6+sqrt3+sqrt2+1\"")
        ->required();

    std::vector<std::string> relate_args;
    auto* relate = app.add_subcommand("relate", "find rational relations modulo pi");
    relate->fallthrough();
    relate->add_option("angles", relate_args, "angle sums")->required()->expected(-1);

    std::vector<std::string> dehn_args;
    bool dehn_sum = false;
    auto* dehn = app.add_subcommand("dehn", "Dehn invariants and equidecomposability");
    dehn->fallthrough();
    dehn->add_option("polyhedra", dehn_args, "builtin names or JSON files")
        ->required()
        ->expected(-1);
    dehn->add_flag("--sum", dehn_sum, "also print the sum of the invariants");

    auto* t3 = app.add_subcommand("table3", "Dehn invariants of the sixteen built-in solids");
    t3->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cfg.precision < 64) throw DomainError("--precision must be at least 64");
        if (!factor_limit.empty())
            FactorLimits::default_cofactor_bound() = Int(factor_limit, 10);

        if (basis->parsed()) return cmd_basis(p_max, d_max, cfg);
        if (dec->parsed()) return cmd_decompose(angle_spec, cfg);
        if (split->parsed()) return cmd_split(split_expr, cfg);
        if (relate->parsed()) return cmd_relate(relate_args, cfg);
        if (dehn->parsed()) return cmd_dehn(dehn_args, dehn_sum, cfg);
        if (t3->parsed()) return cmd_table3(cfg);
        return 1;
    } catch (const ParseError& e) {
        return fail(cfg, "parse", e.what(), 1);
    } catch (const DomainError& e) {
        return fail(cfg, "domain", e.what(), 1);
    } catch (const ResourceLimitError& e) {
        return fail(cfg, "resource", e.what(), 2);
    } catch (const InternalError& e) {
        return fail(cfg, "internal", e.what(), 1);
    } catch (const std::invalid_argument& e) {
        return fail(cfg, "parse", e.what(), 1);
    }
}
