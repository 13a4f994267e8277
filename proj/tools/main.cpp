// modring command line: congruence solving, interpolation, root scans, and
// the Z/91Z non-uniqueness demonstration.
//
// Exit codes: 0 success, 1 internal regression (demo facts disagree),
// 2 malformed input, 3 mathematically unsolvable / precondition failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "modring/crt.hpp"
#include "modring/format.hpp"
#include "modring/interp.hpp"
#include "modring/crt_polynomial.hpp"
#include "modring/poly.hpp"

namespace {

using json = nlohmann::json;
using modring::Integer;

constexpr int kExitOk = 0;
constexpr int kExitRegression = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnsolvable = 3;

json to_json_list(const std::vector<Integer>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

json poly_to_json(const modring::Polynomial& f) {
    return {{"pretty", modring::pretty(f)}, {"coefficients", to_json_list(f.coefficients())}};
}

void emit(bool as_json, const json& doc, const std::string& plain) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << plain;
    }
}

// Math-level failure: structured document in json mode, message on stderr.
int fail(bool as_json, const std::string& kind, const std::string& message, json witness = {}) {
    if (as_json) {
        json doc{{"error", {{"kind", kind}, {"message", message}}}};
        for (auto& [key, value] : witness.items()) doc["error"][key] = value;
        std::cout << doc.dump(2) << "\n";
    }
    std::cerr << "error: " << message << "\n";
    return kExitUnsolvable;
}

json pair_witness(std::size_t i, std::size_t j, const Integer& gcd) {
    return {{"i", i}, {"j", j}, {"gcd", gcd.str()}};
}

Integer parse_modulus(const std::string& text) {
    const Integer n = modring::parse_integer(text);
    if (n < 1) throw modring::parse_error("modulus must be >= 1, got " + n.str());
    return n;
}

struct SolveOptions {
    std::string moduli;
    std::string residues;
    std::string route = "idempotent";
    bool general = false;
    bool show_idempotents = false;
    bool as_json = false;
};

int run_solve(const SolveOptions& opt) {
    const std::vector<Integer> moduli = modring::parse_integer_list(opt.moduli);
    const std::vector<Integer> residues = modring::parse_integer_list(opt.residues);
    if (moduli.size() != residues.size()) {
        throw modring::parse_error("need equally many moduli and residues, got " +
                                   std::to_string(moduli.size()) + " and " +
                                   std::to_string(residues.size()));
    }
    for (const Integer& m : moduli) {
        if (m < 1) throw modring::parse_error("modulus must be >= 1, got " + m.str());
    }
    std::vector<modring::Congruence> items;
    for (std::size_t i = 0; i < moduli.size(); ++i) items.push_back({residues[i], moduli[i]});
    const modring::CongruenceSystem system{items};

    json doc{{"command", "solve"},
             {"moduli", to_json_list(moduli)},
             {"residues", to_json_list(residues)}};
    std::string plain;

    modring::CrtSolution solution;
    try {
        if (opt.general) {
            doc["route"] = "general";
            solution = modring::solve_crt_general(system);
        } else if (opt.route == "interpolation") {
            doc["route"] = "interpolation";
            const auto multipliers = modring::interpolation_multipliers(moduli);
            const auto poly = modring::build_crt_polynomial(system);
            solution = modring::crt_via_interpolation(system);
            doc["multipliers"] = to_json_list(multipliers);
            doc["polynomial"] = to_json_list(poly.coefficients());
            plain += "multipliers: " + modring::join(multipliers, ", ") + "\n";
            plain +=
                "polynomial (ascending): " + modring::coefficient_list(poly.coefficients()) + "\n";
        } else {
            doc["route"] = "idempotent";
            solution = modring::solve_crt(system);
        }
        if (opt.show_idempotents) {
            const auto basis = modring::idempotent_basis(moduli);
            doc["idempotents"] = to_json_list(basis.idempotents);
            plain += "idempotents: " + modring::join(basis.idempotents, ", ") + "\n";
        }
    } catch (const modring::not_coprime& e) {
        return fail(opt.as_json, "not_coprime",
                    "moduli " + moduli[e.i].str() + " and " + moduli[e.j].str() +
                        " (indices " + std::to_string(e.i) + ", " + std::to_string(e.j) +
                        ") are not coprime: gcd = " + e.gcd.str(),
                    pair_witness(e.i, e.j, e.gcd));
    } catch (const modring::inconsistent_system& e) {
        return fail(opt.as_json, "inconsistent",
                    "congruences " + std::to_string(e.i) + " and " + std::to_string(e.j) +
                        " (moduli " + moduli[e.i].str() + " and " + moduli[e.j].str() +
                        ") are inconsistent: gcd " + e.gcd.str() +
                        " does not divide the residue difference",
                    pair_witness(e.i, e.j, e.gcd));
    }
    doc["x"] = solution.x.str();
    doc["modulus"] = solution.modulus.str();
    plain += "x = " + solution.x.str() + " (mod " + solution.modulus.str() + ")\n";
    emit(opt.as_json, doc, plain);
    return kExitOk;
}

struct InterpOptions {
    std::string modulus;
    std::string points;
    std::string route = "lagrange";
    bool check = false;
    bool as_json = false;
};

int run_interp(const InterpOptions& opt) {
    const Integer n = parse_modulus(opt.modulus);
    const modring::PointSet points(n, modring::parse_points(opt.points));
    const bool via_crt = opt.route == "crt";

    modring::Polynomial p = modring::Polynomial::zero(n);
    try {
        p = via_crt ? modring::interpolate_via_crt(points) : modring::lagrange_interpolate(points);
    } catch (const modring::not_unit_difference& e) {
        const auto xs = points.nodes();
        const Integer diff = modring::floor_mod(xs[e.j] - xs[e.i], n);
        return fail(opt.as_json, "not_unit_difference",
                    "x_i - x_j not a unit (nodes " + xs[e.i].str() + " and " + xs[e.j].str() +
                        "): gcd(" + diff.str() + ", " + n.str() + ") = " + e.gcd.str(),
                    pair_witness(e.i, e.j, e.gcd));
    } catch (const modring::empty_input& e) {
        return fail(opt.as_json, "empty_input", e.what());
    }

    json doc{{"command", "interp"},
             {"route", via_crt ? "crt" : "lagrange"},
             {"modulus", n.str()}};
    json pts = json::array();
    for (const auto& pt : points.points()) pts.push_back({{"x", pt.x.str()}, {"y", pt.y.str()}});
    doc["points"] = pts;
    doc["pretty"] = modring::pretty(p);
    doc["coefficients"] = to_json_list(p.coefficients());

    std::string plain = "p(t) = " + modring::pretty(p) + "  (mod " + n.str() + ")\n";
    plain += "coefficients (ascending): " + modring::coefficient_list(p) + "\n";

    int exit_code = kExitOk;
    if (opt.check) {
        json checks = json::array();
        for (const auto& pt : points.points()) {
            const Integer value = modring::poly_eval(p, pt.x);
            const bool ok = value == pt.y;
            if (!ok) exit_code = kExitRegression;
            checks.push_back(
                {{"x", pt.x.str()}, {"y", pt.y.str()}, {"value", value.str()}, {"ok", ok}});
            plain += "check p(" + pt.x.str() + ") = " + value.str() +
                     (ok ? ": ok" : ": MISMATCH, expected " + pt.y.str()) + "\n";
        }
        doc["check"] = checks;
    }
    emit(opt.as_json, doc, plain);
    return exit_code;
}

struct RootsOptions {
    std::string modulus;
    std::string coefficients;
    std::string limit = "1000000";
    bool as_json = false;
};

int run_roots(const RootsOptions& opt) {
    const Integer n = parse_modulus(opt.modulus);
    const Integer limit = modring::parse_integer(opt.limit);
    const modring::Polynomial f(n, modring::parse_integer_list(opt.coefficients));

    std::vector<Integer> roots;
    try {
        roots = modring::roots_mod_n(f, limit);
    } catch (const modring::limit_exceeded& e) {
        return fail(opt.as_json, "limit_exceeded", e.what(),
                    {{"modulus", n.str()}, {"limit", limit.str()}});
    }

    json doc{{"command", "roots"},
             {"modulus", n.str()},
             {"coefficients", to_json_list(f.coefficients())},
             {"roots", to_json_list(roots)}};
    const std::string plain =
        (roots.empty() ? std::string("(none)") : modring::join(roots, ", ")) + "\n";
    emit(opt.as_json, doc, plain);
    return kExitOk;
}

struct ExpandOptions {
    std::string modulus;
    std::string roots;
    bool as_json = false;
};

int run_expand(const ExpandOptions& opt) {
    const Integer n = parse_modulus(opt.modulus);
    const std::vector<Integer> roots = modring::parse_integer_list(opt.roots);
    const modring::Polynomial q = modring::expand_from_roots(roots, n);

    json doc{{"command", "expand"}, {"modulus", n.str()}, {"roots", to_json_list(roots)}};
    doc["pretty"] = modring::pretty(q);
    doc["coefficients"] = to_json_list(q.coefficients());
    std::string plain = "q(t) = " + modring::pretty(q) + "  (mod " + n.str() + ")\n";
    plain += "coefficients (ascending): " + modring::coefficient_list(q) + "\n";
    emit(opt.as_json, doc, plain);
    return kExitOk;
}

struct DemoOptions {
    std::string expect_roots = "9,16,74,81";
    bool as_json = false;
};

// Recomputes the Z/91Z facts and compares them against the expected
// fixture; any disagreement is an internal regression (exit 1).
int run_demo_nonuniqueness(const DemoOptions& opt) {
    const Integer n = 91;
    const modring::Polynomial p(n, {1, 1, 1});
    const std::vector<Integer> p_roots = modring::roots_mod_n(p);
    const modring::Polynomial q = modring::expand_from_roots(p_roots, n);
    const std::vector<Integer> q_roots = modring::roots_mod_n(q);

    const std::vector<Integer> expected_roots = modring::parse_integer_list(opt.expect_roots);
    const std::vector<Integer> expected_q{1, 2, 3, 2, 1};
    const bool ok = p_roots == expected_roots && q_roots == expected_roots &&
                    q.coefficients() == expected_q && p != q;

    json doc{{"command", "demo"}, {"subject", "nonuniqueness"}, {"modulus", n.str()}};
    doc["p"] = poly_to_json(p);
    doc["p_roots"] = to_json_list(p_roots);
    doc["q"] = poly_to_json(q);
    doc["q_roots"] = to_json_list(q_roots);
    doc["p_equals_q"] = p == q;
    doc["same_root_set"] = p_roots == q_roots;
    doc["ok"] = ok;

    std::string plain;
    plain += "p(t) = " + modring::pretty(p) + "  (mod " + n.str() + ")\n";
    plain += "roots: " + modring::join(p_roots, ", ") + "\n";
    std::string factors;
    for (const auto& r : p_roots) factors += "(t - " + r.str() + ")";
    plain += "q(t) = " + factors + " = " + modring::pretty(q) + "  (mod " + n.str() + ")\n";
    plain += "roots: " + modring::join(q_roots, ", ") + "\n";
    if (p != q && p_roots == q_roots) {
        plain += "p and q are distinct polynomials with the same root set: "
                 "roots do not determine a polynomial over Z/" + n.str() + "Z.\n";
    }
    emit(opt.as_json, doc, plain);

    if (!ok) {
        std::cerr << "demo: recomputed facts disagree with the expected fixture\n";
        return kExitRegression;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"congruence systems, idempotents, and interpolation over Z/nZ"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "solve a simultaneous congruence system");
    solve->add_option("-m,--moduli", solve_opt.moduli, "comma-separated moduli")->required();
    solve->add_option("-r,--residues", solve_opt.residues, "comma-separated residues")->required();
    solve->add_option("--route", solve_opt.route, "construction to use")
        ->check(CLI::IsMember({"idempotent", "interpolation"}));
    solve->add_flag("--general", solve_opt.general,
                    "allow non-coprime moduli (solution modulo the lcm)");
    solve->add_flag("--show-idempotents", solve_opt.show_idempotents,
                    "also print the idempotent basis");
    solve->add_flag("--json", solve_opt.as_json, "structured output");

    InterpOptions interp_opt;
    auto* interp = app.add_subcommand("interp", "interpolate points over Z/nZ");
    interp->add_option("-n,--modulus", interp_opt.modulus, "ring modulus")->required();
    interp->add_option("-p,--points", interp_opt.points, "points as x:y,x:y,...")->required();
    interp->add_option("--route", interp_opt.route, "construction to use")
        ->check(CLI::IsMember({"lagrange", "crt"}));
    interp->add_flag("--check", interp_opt.check, "re-evaluate at the nodes and report");
    interp->add_flag("--json", interp_opt.as_json, "structured output");

    RootsOptions roots_opt;
    auto* roots = app.add_subcommand("roots", "enumerate polynomial roots mod n");
    roots->add_option("-n,--modulus", roots_opt.modulus, "ring modulus")->required();
    roots->add_option("-f,--poly", roots_opt.coefficients,
                      "ascending coefficients, e.g. 1,1,1 for t^2 + t + 1")
        ->required();
    roots->add_option("--limit", roots_opt.limit, "scan limit (default 1000000)");
    roots->add_flag("--json", roots_opt.as_json, "structured output");

    ExpandOptions expand_opt;
    auto* expand = app.add_subcommand("expand", "expand a monic product of (t - r)");
    expand->add_option("-n,--modulus", expand_opt.modulus, "ring modulus")->required();
    expand->add_option("-x,--roots", expand_opt.roots, "comma-separated roots (may be empty)");
    expand->add_flag("--json", expand_opt.as_json, "structured output");

    DemoOptions demo_opt;
    auto* demo = app.add_subcommand("demo", "worked demonstrations");
    demo->require_subcommand(1);
    auto* nonuniq = demo->add_subcommand(
        "nonuniqueness", "distinct polynomials over Z/91Z with identical root sets");
    nonuniq->add_option("--expect-roots", demo_opt.expect_roots,
                        "expected root fixture (testing hook)");
    nonuniq->add_flag("--json", demo_opt.as_json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    const bool as_json = solve_opt.as_json || interp_opt.as_json || roots_opt.as_json ||
                         expand_opt.as_json || demo_opt.as_json;
    try {
        if (*solve) return run_solve(solve_opt);
        if (*interp) return run_interp(interp_opt);
        if (*roots) return run_roots(roots_opt);
        if (*expand) return run_expand(expand_opt);
        if (*demo) return run_demo_nonuniqueness(demo_opt);
    } catch (const modring::parse_error& e) {
        if (as_json) {
            std::cout << json{{"error", {{"kind", "parse"}, {"message", e.what()}}}}.dump(2)
                      << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const modring::error& e) {
        return fail(as_json, "precondition", e.what());
    }
    return kExitBadInput;  // unreachable: a subcommand is required
}
