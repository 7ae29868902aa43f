// Command-line front end: parse curve descriptions, dispatch to the library,
// emit one machine-readable report per run on stdout, diagnostics on stderr.
//
// Exit codes: 0 ok, 10 math-negative, 2 invalid input, 70 internal invariant
// violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pgonal/pgonal.hpp"

namespace {

using namespace pgonal;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitMathNegative = 10;
constexpr int kExitInternal = 70;

struct Options {
    std::string format = "json";
    long long height_bound = -1;
    unsigned long long seed = 0;  // reserved for corpus tooling
};

struct Report {
    std::string status = "ok";
    json payload;
    std::vector<std::string> log;
    int exit_code = kExitOk;

    void negative(const std::string& line) {
        status = "math-negative";
        exit_code = kExitMathNegative;
        log.push_back(line);
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PgonalCurve load_curve(const std::string& path) {
    try {
        return parse_curve_text(read_file(path));
    } catch (const invalid_input& e) {
        throw invalid_input(path + ": " + e.what());
    }
}

void emit(const Report& r, const Options& opt) {
    if (opt.format == "json") {
        json doc{{"status", r.status}, {"payload", r.payload}, {"log", r.log}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "status: " << r.status << "\n";
        std::cout << r.payload.dump(2) << "\n";
        for (const auto& l : r.log) std::cout << "# " << l << "\n";
    }
    for (const auto& l : r.log) std::cerr << l << "\n";
}

Report run_validate(const std::string& file) {
    Report rep;
    PgonalCurve c = load_curve(file);
    rep.payload = json{{"curve", curve_to_json(c)},
                       {"genus", c.genus()},
                       {"affine_coeffs", affine_view_to_json(c)}};
    return rep;
}

Report run_genus(const std::string& file) {
    Report rep;
    PgonalCurve c = load_curve(file);
    rep.payload = json{{"genus", c.genus()}, {"m", c.num_branch_points()}, {"p", c.p()}};
    return rep;
}

Report run_isom(const std::string& f1, const std::string& f2) {
    Report rep;
    PgonalCurve a = load_curve(f1);
    PgonalCurve b = load_curve(f2);
    auto isos = isomorphic_as_pgonal(a, b);
    json list = json::array();
    for (const auto& [t, g] : isos) list.push_back(json{{"t", t}, {"matrix", to_json(g)}});
    rep.payload = json{{"isomorphisms", list}, {"count", isos.size()}};
    if (isos.empty()) rep.negative("not isomorphic as p-gonal curves");
    return rep;
}

Report run_character(const std::string& file) {
    Report rep;
    PgonalCurve c = load_curve(file);
    auto chiv = power_character(c);
    if (std::holds_alternative<FomFailure>(chiv)) {
        const auto& f = std::get<FomFailure>(chiv);
        rep.payload = json{{"fom_failure", json{{"sigma", f.sigma}, {"detail", f.detail}}}};
        rep.negative("field of moduli of the pair is not contained in Q");
        return rep;
    }
    rep.payload = json{{"character", character_to_json(std::get<PowerCharacter>(chiv))}};
    return rep;
}

Report run_cocycle(const std::string& file) {
    Report rep;
    PgonalCurve c = load_curve(file);
    auto cv = compute_cocycle(c);
    if (std::holds_alternative<FomFailure>(cv)) {
        const auto& f = std::get<FomFailure>(cv);
        rep.payload = json{{"fom_failure", json{{"sigma", f.sigma}, {"detail", f.detail}}}};
        rep.negative("field of moduli of the pair is not contained in Q");
        return rep;
    }
    if (std::holds_alternative<CocycleObstruction>(cv)) {
        rep.payload = json{{"cocycle_obstruction", std::get<CocycleObstruction>(cv).detail}};
        rep.negative("no globally consistent cocycle selection");
        return rep;
    }
    rep.payload = json{{"cocycle", cocycle_to_json(std::get<GaloisCocycle>(cv))}};
    return rep;
}

Report run_descend(const std::string& file, const Options& opt) {
    Report rep;
    PgonalCurve c = load_curve(file);
    auto res = descend(c, Int(opt.height_bound));
    if (std::holds_alternative<FomFailure>(res)) {
        const auto& f = std::get<FomFailure>(res);
        rep.payload = json{{"fom_failure", json{{"sigma", f.sigma}, {"detail", f.detail}}}};
        rep.negative("field of moduli of the pair is not contained in Q");
        return rep;
    }
    if (std::holds_alternative<CocycleObstruction>(res)) {
        rep.payload = json{{"cocycle_obstruction", std::get<CocycleObstruction>(res).detail}};
        rep.negative("no globally consistent cocycle selection");
        return rep;
    }
    if (std::holds_alternative<CharacterStop>(res)) {
        const auto& stop = std::get<CharacterStop>(res);
        rep.payload = json{{"character", character_to_json(stop.character)},
                           {"k1_degree", stop.character.k1_degree()}};
        rep.negative("power character is nontrivial; descent stops after reporting [k1:k]");
        return rep;
    }
    const auto& out = std::get<DescentOutcome>(res);
    rep.payload = json{{"outcome", outcome_to_json(out)},
                       {"cocycle", cocycle_to_json(out.cocycle)}};
    if (out.variant == DescentVariant::quadratic_model)
        rep.negative("conic has no rational point; model lives over a quadratic extension");
    return rep;
}

Report run_classify(int p, int m) {
    Report rep;
    rep.payload = verdict_to_json(uniqueness_classify(p, m));
    return rep;
}

Report run_gallery() {
    Report rep;
    json list = json::array();
    for (const auto& e : gallery()) {
        auto v = uniqueness_classify(e.curve.p(), e.curve.num_branch_points());
        list.push_back(json{{"tag", e.tag},
                            {"family", e.family},
                            {"curve", curve_to_json(e.curve)},
                            {"genus", e.curve.genus()},
                            {"expected_genus", e.expected_genus},
                            {"classification", verdict_to_json(v)},
                            {"note", e.note}});
    }
    rep.payload = json{{"gallery", list}};
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact descent toolkit for cyclic p-gonal curves"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--height-bound", opt.height_bound,
                   "conic search cap override (default: the Holzer bound)");
    app.add_option("--seed", opt.seed, "seed reserved for corpus generation tooling");

    std::string file1, file2;
    int arg_p = 0, arg_m = 0;

    auto* validate = app.add_subcommand("validate", "validate a curve file");
    validate->add_option("file", file1)->required();
    auto* genus = app.add_subcommand("genus", "genus of a curve");
    genus->add_option("file", file1)->required();
    auto* isom = app.add_subcommand("isom", "p-gonal isomorphisms between two curves");
    isom->add_option("file1", file1)->required();
    isom->add_option("file2", file2)->required();
    auto* character = app.add_subcommand("character", "power character over Q");
    character->add_option("file", file1)->required();
    auto* cocycle = app.add_subcommand("cocycle", "Galois cocycle over Q");
    cocycle->add_option("file", file1)->required();
    auto* descend_cmd = app.add_subcommand("descend", "descend to a model over Q or Q(sqrt e)");
    descend_cmd->add_option("file", file1)->required();
    auto* classify = app.add_subcommand("classify", "p-gonal group uniqueness for (p, m)");
    classify->add_option("--p", arg_p, "the prime p")->required();
    classify->add_option("--m", arg_m, "number of branch points")->required();
    auto* gallery_cmd = app.add_subcommand("gallery", "the six exceptional fixtures");
    (void)gallery_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInvalidInput : kExitOk;
    }

    try {
        Report rep;
        if (validate->parsed())
            rep = run_validate(file1);
        else if (genus->parsed())
            rep = run_genus(file1);
        else if (isom->parsed())
            rep = run_isom(file1, file2);
        else if (character->parsed())
            rep = run_character(file1);
        else if (cocycle->parsed())
            rep = run_cocycle(file1);
        else if (descend_cmd->parsed())
            rep = run_descend(file1, opt);
        else if (classify->parsed())
            rep = run_classify(arg_p, arg_m);
        else
            rep = run_gallery();
        emit(rep, opt);
        return rep.exit_code;
    } catch (const invalid_input& e) {
        json doc{{"status", "invalid-input"}, {"payload", json{{"error", e.what()}}},
                 {"log", json::array({e.what()})}};
        std::cout << doc.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        json doc{{"status", "internal-invariant-violation"},
                 {"payload", json{{"error", e.what()}}}, {"log", json::array({e.what()})}};
        std::cout << doc.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return kExitInternal;
    }
}
