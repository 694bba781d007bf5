// propb: build, verify and export non-2-colorable uniform hypergraphs.
//
// Exit codes: 0 success / 2-colorable / satisfiable; 1 not-2-colorable or
// unsatisfiable verdicts; 2 resource limits (vertex cap, timeout, budget,
// unknown solver outcome); 64 usage or malformed input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "propb/atlas.hpp"
#include "propb/cnf.hpp"
#include "propb/constructions.hpp"
#include "propb/core.hpp"
#include "propb/io.hpp"
#include "propb/verifier.hpp"

namespace {

constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;

propb::UniformHypergraph load_input(const std::string& path) {
    if (path.empty() || path == "-") return propb::read_hypergraph(std::cin);
    return propb::load_hypergraph_file(path);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

// ---- table ---------------------------------------------------------------

int run_table(int max_n, bool baseline, bool as_json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 1; n <= max_n; ++n) {
        const propb::BoundEntry e = baseline ? propb::baseline_bound(n) : propb::best_bound(n);
        if (as_json) {
            rows.push_back({{"n", e.n},
                            {"bound", e.bound},
                            {"rule", propb::rule_name(e.rule)},
                            {"recurrence", e.recurrence()}});
        } else {
            std::cout << e.n << '\t' << e.bound << '\t' << propb::rule_name(e.rule) << '\t'
                      << e.recurrence() << '\n';
        }
    }
    if (as_json) std::cout << rows.dump() << '\n';
    return 0;
}

// ---- build -----------------------------------------------------------------

struct BuildConfig {
    std::string construction;
    int n = 0;
    int factor_a = 0;
    int factor_b = 0;
    std::string core_path;
    std::string format = "json";
    std::string output;
    int cap = propb::kDefaultConstructionCap;
};

propb::UniformHypergraph build_graph(const BuildConfig& cfg) {
    const auto core = [&](int n) {
        if (!cfg.core_path.empty()) return propb::load_hypergraph_file(cfg.core_path);
        return propb::best_construction(n - 2, cfg.cap);
    };
    if (cfg.construction == "single") return propb::single_vertex();
    if (cfg.construction == "triangle") return propb::triangle();
    if (cfg.construction == "fano") return propb::fano();
    if (cfg.construction == "m8") return propb::m8_construction();
    if (cfg.construction == "best") return propb::best_construction(cfg.n, cfg.cap);
    if (cfg.construction == "aht") return propb::aht_construction(core(cfg.n), cfg.n);
    if (cfg.construction == "swap") return propb::swap_construction(core(cfg.n), cfg.n);
    if (cfg.construction == "layered") return propb::layered_construction(core(cfg.n), cfg.n);
    if (cfg.construction == "product") {
        int a = cfg.factor_a, b = cfg.factor_b;
        if (a == 0 || b == 0) {
            const propb::BoundEntry e = propb::best_bound(cfg.n);
            if (e.rule != propb::BoundRule::ProductAM) {
                throw std::invalid_argument(
                    "no tabulated factorization for this n; pass --a and --b");
            }
            a = e.factor_a;
            b = e.factor_b;
        }
        if (cfg.n != 0 && a * b != cfg.n) {
            throw std::invalid_argument("--a times --b must equal --n");
        }
        return propb::product_construction(propb::best_construction(a, cfg.cap),
                                           propb::best_construction(b, cfg.cap));
    }
    throw std::invalid_argument("unknown construction: " + cfg.construction);
}

int run_build(const BuildConfig& cfg) {
    const propb::UniformHypergraph h = build_graph(cfg);
    std::ostringstream out;
    if (cfg.format == "json") {
        propb::write_json(h, out);
    } else {
        propb::write_edge_list(h, out);
    }
    write_output(out.str(), cfg.output);
    return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyConfig {
    std::string input;
    unsigned threads = 1;
    bool fast = false;
    int timeout_secs = 0;
    std::size_t max_vertices = 31;
    bool as_json = false;
};

int run_verify(const VerifyConfig& cfg) {
    const propb::UniformHypergraph h = load_input(cfg.input);
    if (h.vertex_count() > cfg.max_vertices) {
        std::cerr << "verify: " << h.vertex_count()
                  << " vertices exceed the exhaustive-search limit of " << cfg.max_vertices
                  << "; use 'propb solve' (SAT encoding) instead, or raise --max-vertices\n";
        return kExitResource;
    }

    propb::SearchOptions options;
    options.threads = cfg.threads;
    options.fast = cfg.fast;
    if (cfg.timeout_secs > 0) options.timeout = std::chrono::seconds(cfg.timeout_secs);

    const propb::SearchResult r = propb::find_proper_coloring(h, options);
    if (r.status == propb::SearchStatus::TimedOut) {
        if (cfg.as_json) {
            std::cout << nlohmann::ordered_json{{"status", "timeout"}}.dump() << '\n';
        } else {
            std::cerr << "verify: timed out after scanning " << r.colorings_scanned
                      << " colorings\n";
        }
        return kExitResource;
    }

    std::vector<propb::VertexId> red;
    if (r.verdict.witness) {
        for (propb::VertexId v = 0; v < h.vertex_count(); ++v) {
            if (r.verdict.witness->red(v)) red.push_back(v);
        }
    }
    if (cfg.as_json) {
        nlohmann::ordered_json j{{"status", "decided"},
                                 {"two_colorable", r.verdict.two_colorable},
                                 {"vertex_count", h.vertex_count()},
                                 {"edge_count", h.edge_count()},
                                 {"colorings_scanned", r.colorings_scanned}};
        j["witness_red"] = r.verdict.witness ? nlohmann::ordered_json(red)
                                             : nlohmann::ordered_json(nullptr);
        std::cout << j.dump() << '\n';
    } else if (r.verdict.two_colorable) {
        std::cout << "2-colorable; red vertices:";
        for (propb::VertexId v : red) std::cout << ' ' << v;
        std::cout << '\n';
    } else {
        std::cout << "not 2-colorable (" << h.edge_count() << " edges on " << h.vertex_count()
                  << " vertices, " << r.colorings_scanned << " colorings scanned)\n";
    }
    return r.verdict.two_colorable ? 0 : 1;
}

// ---- export ----------------------------------------------------------------

int run_export(const std::string& input, const std::string& dimacs_out) {
    const propb::UniformHypergraph h = load_input(input);
    const propb::CnfFormula f = propb::to_monotone_cnf(h);
    write_output(propb::to_dimacs_string(f), dimacs_out);
    return 0;
}

// ---- solve -----------------------------------------------------------------

struct SolveConfig {
    std::string input;
    std::string external;
    bool internal_only = false;
    std::uint64_t budget = propb::kDefaultDecisionBudget;
    int timeout_secs = 60;
    bool as_json = false;
};

int report_solve(bool sat_known, bool sat, const std::string& detail,
                 const std::vector<propb::VertexId>& red, bool as_json) {
    if (as_json) {
        nlohmann::ordered_json j;
        j["status"] = sat_known ? (sat ? "sat" : "unsat") : "unknown";
        j["detail"] = detail;
        j["witness_red"] =
            (sat_known && sat) ? nlohmann::ordered_json(red) : nlohmann::ordered_json(nullptr);
        std::cout << j.dump() << '\n';
    } else if (!sat_known) {
        std::cerr << "solve: " << detail << '\n';
    } else if (sat) {
        std::cout << "satisfiable (2-colorable); red vertices:";
        for (propb::VertexId v : red) std::cout << ' ' << v;
        std::cout << '\n';
    } else {
        std::cout << "unsatisfiable (not 2-colorable)" << (detail.empty() ? "" : " via " + detail)
                  << '\n';
    }
    if (!sat_known) return kExitResource;
    return sat ? 0 : 1;
}

std::vector<propb::VertexId> red_vertices(const std::vector<bool>& assignment) {
    std::vector<propb::VertexId> red;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i]) red.push_back(static_cast<propb::VertexId>(i));
    }
    return red;
}

int run_solve(const SolveConfig& cfg) {
    const propb::UniformHypergraph h = load_input(cfg.input);
    const propb::CnfFormula f = propb::to_monotone_cnf(h);

    std::string external = cfg.external;
    if (external.empty() && !cfg.internal_only) {
        if (const char* env = std::getenv(propb::kSolverEnvVar)) external = env;
    }

    if (!external.empty()) {
        const propb::ExternalResult r =
            propb::solve_external(f, external, std::chrono::seconds(cfg.timeout_secs));
        switch (r.status) {
            case propb::ExternalStatus::Sat:
                return report_solve(true, true, external, red_vertices(r.assignment), cfg.as_json);
            case propb::ExternalStatus::Unsat:
                return report_solve(true, false, external, {}, cfg.as_json);
            case propb::ExternalStatus::Unknown:
                return report_solve(false, false, "external solver: " + r.diagnostic, {},
                                    cfg.as_json);
        }
    }

    const propb::DpllResult r = propb::dpll_solve(f, cfg.budget);
    switch (r.status) {
        case propb::SolveStatus::Sat:
            return report_solve(true, true,
                                "dpll (" + std::to_string(r.decisions) + " decisions)",
                                red_vertices(r.assignment), cfg.as_json);
        case propb::SolveStatus::Unsat:
            return report_solve(true, false,
                                "dpll (" + std::to_string(r.decisions) + " decisions)", {},
                                cfg.as_json);
        case propb::SolveStatus::BudgetExceeded:
            return report_solve(false, false,
                                "decision budget of " + std::to_string(cfg.budget) +
                                    " exhausted; raise --budget or configure an external solver",
                                {}, cfg.as_json);
    }
    return kExitResource;
}

// ---- lemma-check -------------------------------------------------------

int run_lemma_check(int n, std::optional<int> p, bool as_json) {
    std::vector<int> ps;
    if (p) {
        ps.push_back(*p);
    } else {
        for (int i = 1; i <= n; ++i) ps.push_back(i);
    }
    bool all = true;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int pi : ps) {
        const bool holds = propb::verify_lemma1(n, propb::SwapOrdering{pi});
        all = all && holds;
        if (as_json) {
            rows.push_back({{"n", n}, {"p", pi}, {"holds", holds}});
        } else {
            std::cout << "n=" << n << " p=" << pi << ": " << (holds ? "holds" : "FAILS") << '\n';
        }
    }
    if (as_json) std::cout << rows.dump() << '\n';
    return all ? 0 : 1;
}

// ---- minimality --------------------------------------------------------

int run_minimality(const std::string& input, unsigned threads, bool as_json) {
    const propb::UniformHypergraph h = load_input(input);
    propb::SearchOptions options;
    options.threads = threads;
    const bool minimal = propb::minimality_probe(h, options);
    if (as_json) {
        std::cout << nlohmann::ordered_json{{"minimal", minimal}}.dump() << '\n';
    } else {
        std::cout << (minimal ? "minimal: every single-edge deletion is 2-colorable"
                              : "not minimal: some single-edge deletion stays non-2-colorable")
                  << '\n';
    }
    return minimal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-2-colorable uniform hypergraph toolkit"};
    app.set_config("--config");
    app.require_subcommand(1);

    int exit_code = 0;

    // table
    auto* table = app.add_subcommand("table", "print the best-known m(n) upper-bound table");
    int table_max = 17;
    bool table_baseline = false, table_json = false;
    table->add_option("--max", table_max, "largest n to print")->check(CLI::Range(1, 63));
    table->add_flag("--baseline", table_baseline,
                    "restrict to the product and AHT recurrences");
    table->add_flag("--json", table_json);
    table->callback([&] { exit_code = run_table(table_max, table_baseline, table_json); });

    // build
    auto* build = app.add_subcommand("build", "construct a hypergraph and print it");
    BuildConfig bc;
    build->add_option("--construction", bc.construction, "one of: product, aht, swap, layered, m8, best, single, triangle, fano")
        ->required()
        ->check(CLI::IsMember(
            {"product", "aht", "swap", "layered", "m8", "best", "single", "triangle", "fano"}));
    build->add_option("--n", bc.n, "target uniformity");
    build->add_option("--a", bc.factor_a, "product: first factor");
    build->add_option("--b", bc.factor_b, "product: second factor");
    build->add_option("--core", bc.core_path, "core hypergraph file (default: best construction)");
    build->add_option("--format", bc.format)->check(CLI::IsMember({"json", "edgelist"}));
    build->add_option("-o,--output", bc.output, "output file (default stdout)");
    build->add_option("--cap", bc.cap, "largest n materialized recursively");
    build->callback([&] {
        const bool needs_n = bc.construction == "aht" || bc.construction == "swap" ||
                             bc.construction == "layered" || bc.construction == "best" ||
                             (bc.construction == "product" && bc.factor_a == 0);
        if (needs_n && bc.n == 0) {
            throw CLI::ValidationError("--n is required for construction '" + bc.construction +
                                       "'");
        }
        exit_code = run_build(bc);
    });

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustively decide 2-colorability");
    VerifyConfig vc;
    verify->add_option("file", vc.input, "hypergraph file (default stdin)");
    verify->add_option("--threads", vc.threads)->check(CLI::Range(1u, 256u));
    verify->add_flag("--fast", vc.fast, "stop at the first witness (may not be minimal)");
    verify->add_option("--timeout", vc.timeout_secs, "seconds before giving up");
    verify->add_option("--max-vertices", vc.max_vertices,
                       "refuse larger instances (hard bitmask cap is 63)");
    verify->add_flag("--json", vc.as_json);
    verify->callback([&] { exit_code = run_verify(vc); });

    // export
    auto* exp = app.add_subcommand("export", "write the monotone CNF encoding as DIMACS");
    std::string export_in, export_out = "-";
    exp->add_option("file", export_in, "hypergraph file (default stdin)");
    exp->add_option("--dimacs", export_out, "output path (default stdout)");
    exp->callback([&] { exit_code = run_export(export_in, export_out); });

    // solve
    auto* solve = app.add_subcommand("solve", "decide 2-colorability through the CNF encoding");
    SolveConfig sc;
    solve->add_option("file", sc.input, "hypergraph file (default stdin)");
    solve->add_option("--external", sc.external,
                      std::string("external solver command (default: $") + propb::kSolverEnvVar +
                          ")");
    solve->add_flag("--internal", sc.internal_only, "ignore the environment solver");
    solve->add_option("--budget", sc.budget, "internal DPLL decision budget");
    solve->add_option("--timeout", sc.timeout_secs, "external solver timeout in seconds");
    solve->add_flag("--json", sc.as_json);
    solve->callback([&] { exit_code = run_solve(sc); });

    // lemma-check
    auto* lemma = app.add_subcommand("lemma-check",
                                     "enumerate the pair-condition lemma over a cross family");
    int lemma_n = 0;
    int lemma_p = 0;
    bool lemma_json = false;
    lemma->add_option("--n", lemma_n)->required()->check(CLI::Range(2, 12));
    lemma->add_option("--p", lemma_p, "check a single ordering (default: all p in 1..n)");
    lemma->add_flag("--json", lemma_json);
    lemma->callback([&] {
        std::optional<int> p;
        if (lemma_p != 0) p = lemma_p;
        exit_code = run_lemma_check(lemma_n, p, lemma_json);
    });

    // minimality
    auto* mini = app.add_subcommand("minimality",
                                    "check that every single-edge deletion is 2-colorable");
    std::string mini_in;
    unsigned mini_threads = 1;
    bool mini_json = false;
    mini->add_option("file", mini_in, "hypergraph file (default stdin)");
    mini->add_option("--threads", mini_threads);
    mini->add_flag("--json", mini_json);
    mini->callback([&] { exit_code = run_minimality(mini_in, mini_threads, mini_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "propb: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "propb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "propb: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}
