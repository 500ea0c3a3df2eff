// SPDX-License-Identifier: MIT
//
// Command-line front end: decisions on surface files, curve enumeration,
// classification reports, the verification suite and reference tables.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include "dvdp/catalog.hpp"
#include "dvdp/cylinder_oracle.hpp"
#include "dvdp/divisor_calculus.hpp"
#include "dvdp/json_io.hpp"
#include "dvdp/reference_tables.hpp"
#include "dvdp/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dvdp;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;

enum class Format { Human, Json };

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    Format format = Format::Human;
    int verbosity = 0;
    std::string fixtures_dir = "fixtures";
    int denominator_bound = 8;
    int degree = 0;
    std::string kind;
    std::string scope = "all";
    std::string table = "all";
};

/// Result of processing one input file: either an output block or an error.
struct FileResult {
    std::string text;
    bool failed = false;
};

std::string error_path(const std::exception& e) {
    if (const auto* ie = dynamic_cast<const InputError*>(&e)) return ie->path();
    return {};
}

FileResult error_result(const RunConfig& cfg, const std::string& file, const std::exception& e) {
    FileResult r;
    r.failed = true;
    if (cfg.format == Format::Json) {
        Json j{{"file", file}, {"error", e.what()}};
        const auto path = error_path(e);
        if (!path.empty()) j["path"] = path;
        r.text = j.dump() + "\n";
    } else {
        r.text = file + ": error: " + e.what() + "\n";
    }
    return r;
}

/// Runs `work` on every input concurrently and prints the results in input order.
int run_batch(const RunConfig& cfg, const std::function<FileResult(const std::string&)>& work) {
    if (cfg.inputs.empty()) {
        std::cerr << "no input files\n";
        return kExitInput;
    }
    std::vector<std::future<FileResult>> jobs;
    for (const auto& file : cfg.inputs)
        jobs.push_back(std::async(std::launch::async, [&cfg, &work, file] {
            try {
                return work(file);
            } catch (const std::exception& e) {
                return error_result(cfg, file, e);
            }
        }));
    bool failed = false;
    for (auto& j : jobs) {
        const auto r = j.get();
        std::cout << r.text;
        failed = failed || r.failed;
    }
    return failed ? kExitInput : kExitOk;
}

std::string render_verdict(const Verdict& v, int verbosity) {
    std::ostringstream os;
    os << answer_name(v.answer) << " via " << rule_name(v.rule);
    if (v.construction_case) os << " (construction case " << *v.construction_case << ")";
    os << "\n";
    for (const auto& t : v.trace)
        if (verbosity > 0 || t.cite == "warning" || t.cite == "review") os << "  [" << t.cite << "] " << t.quote << "\n";
    return os.str();
}

FileResult decide_file(const RunConfig& cfg, const std::string& file, bool fibration) {
    const auto doc = load_surface_file(file);
    const auto v = fibration ? decide_fibration(doc.surface) : decide(doc.surface);
    FileResult r;
    if (cfg.format == Format::Json) {
        Json j{{"file", file}, {"name", doc.surface.name}};
        const Json vj = verdict_to_json(v);
        for (const auto& [k, val] : vj.items()) j[k] = val;
        r.text = j.dump() + "\n";
    } else {
        const std::string label = doc.surface.name.empty() ? file : doc.surface.name;
        r.text = label + ": " + render_verdict(v, cfg.verbosity);
    }
    return r;
}

FileResult classify_file(const RunConfig& cfg, const std::string& file) {
    const auto doc = load_surface_file(file);
    const auto& s = doc.surface;
    validate_action(s);
    const auto type = surface_type(s.profile);
    const auto orb = orbits(s);
    const auto drop = rho_drop(s);
    const auto rank = rank_one_check(s);
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, Decoration>> decorations;
    for (const auto& id : orb.rational_points)
        decorations.emplace_back(id, decorate_point(s, id, FlagPolicy::DefaultTrue, &warnings));
    const auto lines = lines_on_surface(s.profile);
    std::vector<DivisorClass> verts = s.profile.simple_roots;
    verts.insert(verts.end(), lines.classes.begin(), lines.classes.end());
    const auto graph = dual_graph(verts, s.profile.form);

    FileResult r;
    if (cfg.format == Format::Json) {
        Json j{{"file", file}, {"name", s.name}, {"profile", profile_to_json(s.profile)}};
        Json orbits_json = Json::array();
        for (const auto& o : orb.point_orbits) orbits_json.push_back(o);
        j["point_orbits"] = orbits_json;
        Json decs = Json::array();
        for (const auto& [id, d] : decorations) decs.push_back(Json{{"id", id}, {"decoration", d.label()}});
        j["rational_points"] = decs;
        j["rho_resolution"] = drop.rho_resolution;
        j["root_orbits"] = drop.total;
        j["rho_surface"] = drop.rho_surface;
        j["rank_one"] = rank.rank_one;
        j["obstructions"] = rank.obstructions;
        warnings.insert(warnings.end(), rank.warnings.begin(), rank.warnings.end());
        j["warnings"] = warnings;
        j["model_note"] = kRhoModelNote;
        r.text = j.dump() + "\n";
        return r;
    }
    std::ostringstream os;
    os << (s.name.empty() ? file : s.name) << "\n";
    os << "  type: degree " << type.degree << ", " << type.name() << ", " << type.num_lines << " lines\n";
    os << "  points:";
    for (const auto& p : s.profile.points) os << " " << p.id;
    os << "\n  point orbits:";
    for (const auto& o : orb.point_orbits) {
        os << " {";
        for (std::size_t i = 0; i < o.size(); ++i) os << (i ? "," : "") << o[i];
        os << "}";
    }
    os << "\n  k-rational points:";
    if (decorations.empty()) os << " none";
    for (const auto& [id, d] : decorations) os << " " << id << "=" << d.label();
    os << "\n  rho_k(resolution) = " << drop.rho_resolution << ", root orbits = " << drop.total
       << ", rho_k(S) = " << drop.rho_surface << (rank.rank_one ? " (rank one)" : " (not rank one)") << "\n";
    for (const auto& o : rank.obstructions) os << "  obstruction: " << o << "\n";
    for (const auto& w : warnings) os << "  warning: " << w << "\n";
    for (const auto& w : rank.warnings) os << "  warning: " << w << "\n";
    os << "  " << kRhoModelNote << "\n";
    os << "  dual graph (" << s.profile.simple_roots.size() << " roots, " << lines.size() << " lines):\n";
    std::istringstream gs(render_ascii(graph));
    for (std::string line; std::getline(gs, line);) os << "    " << line << "\n";
    r.text = os.str();
    return r;
}

int cmd_enumerate(const RunConfig& cfg) {
    if (cfg.degree < 1 || cfg.degree > 8) {
        std::cerr << "error: degree must lie in 1..8\n";
        return kExitInput;
    }
    if (cfg.kind != "roots" && cfg.kind != "lines") {
        std::cerr << "error: kind must be 'roots' or 'lines'\n";
        return kExitInput;
    }
    const auto form = lattice_for_degree(cfg.degree);
    const auto set = cfg.kind == "roots" ? roots(form) : line_classes(form);
    if (cfg.format == Format::Json) {
        std::cout << curve_set_to_json(set).dump() << "\n";
        return kExitOk;
    }
    std::cout << set.size() << " " << cfg.kind << " in degree " << cfg.degree << "\n";
    for (const auto& c : set.classes) {
        std::cout << "  (";
        for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? ", " : "") << c[i];
        std::cout << ")\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    VerificationOptions opts;
    opts.denominator_bound = cfg.denominator_bound;
    opts.fixtures_dir = cfg.fixtures_dir;
    const auto records = run_verification(cfg.scope, opts);
    if (cfg.format == Format::Json) {
        std::cout << verification_report(records).dump(2) << "\n";
    } else {
        for (const auto& r : records) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.scope << "/" << r.id << " (" << r.checked << " checked, "
                      << std::fixed << std::setprecision(2) << r.seconds << " s): " << r.detail << "\n";
            if (r.counterexample) std::cout << "    counterexample: " << *r.counterexample << "\n";
            if (cfg.verbosity > 0)
                for (const auto& l : r.log) std::cout << "    " << l << "\n";
        }
        std::cout << (all_passed(records) ? "all checks passed" : "verification FAILED") << "\n";
    }
    return all_passed(records) ? kExitOk : kExitVerifyFailed;
}

Json table_chain() {
    Json rows = Json::array();
    for (int n = 1; n <= 8; ++n)
        for (int j0 = 1; j0 <= n; ++j0)
            rows.push_back(Json{{"n", n}, {"j0", j0}, {"self_pairing", to_string(closed_form_chain(n, j0).self_pairing)}});
    return rows;
}

Json table_corti(int bound) {
    Json rows = Json::array();
    for (const auto& row : reference::corti_rows()) {
        const CortiParams p{row.degree, row.alpha, row.beta, row.gamma};
        Json j{{"degree", row.degree}, {"type", row.label}, {"support", row.support},
               {"alpha", to_string(row.alpha)}, {"beta", to_string(row.beta)}, {"gamma", to_string(row.gamma)},
               {"special", corti_special(row.degree, row.alpha, row.gamma)}};
        if (const auto w = corti_search(p, bound)) j["search_witness"] = {to_string(w->first), to_string(w->second)};
        rows.push_back(j);
    }
    return rows;
}

Json table_gamma() {
    Json rows = Json::array();
    for (const auto& g : reference::gamma_polynomials())
        rows.push_back(Json{{"position", g.label},
                            {"gamma", to_string(g.a) + " t^2 + " + to_string(g.b) + " t + " + to_string(g.c)},
                            {"t_range", {to_string(g.t_min), to_string(g.t_max)}},
                            {"gamma_range", {to_string(g.gamma_min), to_string(g.gamma_max)}}});
    return rows;
}

Json table_catalog() {
    Json rows = Json::array();
    for (const auto& row : reference::all_catalog_rows()) {
        Json j{{"table", row.table}, {"degree", row.degree}, {"type", row.type}, {"rho", row.rho_values}};
        if (row.construction_case) j["construction_case"] = *row.construction_case;
        if (!row.decorations.empty()) j["decorations"] = row.decorations;
        rows.push_back(j);
    }
    return rows;
}

int cmd_tables(const RunConfig& cfg) {
    const std::vector<std::string> names = {"chain", "corti", "gamma", "catalog"};
    if (cfg.table != "all" && std::find(names.begin(), names.end(), cfg.table) == names.end()) {
        std::cerr << "error: unknown table '" << cfg.table << "' (chain, corti, gamma, catalog, all)\n";
        return kExitInput;
    }
    Json out = Json::object();
    auto want = [&](const std::string& n) { return cfg.table == "all" || cfg.table == n; };
    if (want("chain")) out["chain"] = table_chain();
    if (want("corti")) out["corti"] = table_corti(cfg.denominator_bound);
    if (want("gamma")) out["gamma"] = table_gamma();
    if (want("catalog")) out["catalog"] = table_catalog();
    if (cfg.format == Format::Json) {
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    if (out.contains("chain")) {
        std::cout << "(M)^2 for a chain A_n with -(M.M_j) = delta_{j0,j}\n   n\\j0";
        for (int j0 = 1; j0 <= 8; ++j0) std::cout << std::setw(8) << j0;
        std::cout << "\n";
        for (int n = 1; n <= 8; ++n) {
            std::cout << std::setw(6) << n;
            for (int j0 = 1; j0 <= n; ++j0) std::cout << std::setw(8) << to_string(closed_form_chain(n, j0).self_pairing);
            std::cout << "\n";
        }
        std::cout << "\n";
    }
    if (out.contains("corti")) {
        std::cout << "Corti parameters (alpha, beta, gamma)\n";
        for (const auto& r : out["corti"]) {
            std::cout << "  d=" << r["degree"].get<int>() << " " << std::left << std::setw(9)
                      << r["type"].get<std::string>() << std::right << " (" << r["alpha"].get<std::string>() << ", "
                      << r["beta"].get<std::string>() << ", " << r["gamma"].get<std::string>() << ")"
                      << (r["special"].get<bool>() ? "  special system holds" : "  special system fails");
            if (r.contains("search_witness"))
                std::cout << ", witness (" << r["search_witness"][0].get<std::string>() << ", "
                          << r["search_witness"][1].get<std::string>() << ")";
            std::cout << "\n";
        }
        std::cout << "\n";
    }
    if (out.contains("gamma")) {
        std::cout << "gamma of the one-parameter families\n";
        for (const auto& r : out["gamma"])
            std::cout << "  " << r["position"].get<std::string>() << ": " << r["gamma"].get<std::string>() << ", t in ["
                      << r["t_range"][0].get<std::string>() << ", " << r["t_range"][1].get<std::string>()
                      << "], gamma in [" << r["gamma_range"][0].get<std::string>() << ", "
                      << r["gamma_range"][1].get<std::string>() << "]\n";
        std::cout << "\n";
    }
    if (out.contains("catalog")) {
        std::cout << "surface type catalog\n";
        for (const auto& r : out["catalog"]) {
            std::cout << "  " << std::left << std::setw(10) << r["table"].get<std::string>() << " d=" << r["degree"].get<int>()
                      << " " << std::setw(12) << r["type"].get<std::string>() << std::right << " rho " << r["rho"].dump();
            if (r.contains("construction_case")) std::cout << " case " << r["construction_case"].get<int>();
            if (r.contains("decorations")) std::cout << " " << r["decorations"].dump();
            std::cout << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Du Val del Pezzo surfaces of Picard rank one: cylinders, divisors and verification"};
    app.require_subcommand(1, 1);
    RunConfig cfg;
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");
    app.add_flag("-v,--verbose", cfg.verbosity, "print traces and logs");
    app.add_option("--fixtures", cfg.fixtures_dir, "fixture catalog directory")->capture_default_str();
    app.add_option("--denominator-bound", cfg.denominator_bound, "denominator bound of the Corti witness search")
        ->capture_default_str()
        ->check(CLI::Range(1, 64));

    auto* decide_cmd = app.add_subcommand("decide", "decide cylinder existence for surface files");
    decide_cmd->add_option("files", cfg.inputs, "surface JSON files")->required();
    auto* fib_cmd = app.add_subcommand("decide-fibration", "decide vertical cylinders for generic fibers");
    fib_cmd->add_option("files", cfg.inputs, "surface JSON files")->required();
    auto* enum_cmd = app.add_subcommand("enumerate", "list root or line classes of a degree");
    enum_cmd->add_option("degree", cfg.degree, "degree 1..8")->required();
    enum_cmd->add_option("kind", cfg.kind, "roots or lines")->required();
    auto* classify_cmd = app.add_subcommand("classify", "type, orbits, decorations and dual graph of surface files");
    classify_cmd->add_option("files", cfg.inputs, "surface JSON files")->required();
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    std::string scope_help = "all";
    for (const auto& s : verification_scopes()) scope_help += " | " + s;
    verify_cmd->add_option("scope", cfg.scope, scope_help)->capture_default_str();
    auto* tables_cmd = app.add_subcommand("tables", "regenerate the reference tables");
    tables_cmd->add_option("table", cfg.table, "chain | corti | gamma | catalog | all")->capture_default_str();
    for (auto* sub : {decide_cmd, fib_cmd, enum_cmd, classify_cmd, verify_cmd, tables_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }
    cfg.format = json ? Format::Json : Format::Human;
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (cfg.subcommand == "decide")
            return run_batch(cfg, [&](const std::string& f) { return decide_file(cfg, f, false); });
        if (cfg.subcommand == "decide-fibration")
            return run_batch(cfg, [&](const std::string& f) { return decide_file(cfg, f, true); });
        if (cfg.subcommand == "classify")
            return run_batch(cfg, [&](const std::string& f) { return classify_file(cfg, f); });
        if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg);
        if (cfg.subcommand == "verify") return cmd_verify(cfg);
        if (cfg.subcommand == "tables") return cmd_tables(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
