#include "propb/cnf.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

namespace propb {

CnfFormula to_monotone_cnf(const UniformHypergraph& h) {
    if (h.edge_count() == 0) {
        throw std::invalid_argument("cannot encode a hypergraph with no edges");
    }
    CnfFormula f;
    f.variable_count = static_cast<int>(h.vertex_count());
    f.clauses.reserve(2 * h.edge_count());
    for (const Hyperedge& e : h.edges()) {
        std::vector<Literal> pos, neg;
        pos.reserve(e.size());
        neg.reserve(e.size());
        for (VertexId v : e.vertices()) {
            pos.push_back({static_cast<int>(v) + 1, false});
            neg.push_back({static_cast<int>(v) + 1, true});
        }
        f.clauses.push_back(std::move(pos));
        f.clauses.push_back(std::move(neg));
    }
    std::string name = h.description().empty() ? "hypergraph" : h.description();
    f.comments.push_back("monotone 2-coloring encoding of " + name);
    f.comments.push_back("n=" + std::to_string(h.uniformity()) +
                         " vertices=" + std::to_string(h.vertex_count()) +
                         " edges=" + std::to_string(h.edge_count()));
    return f;
}

Coloring assignment_to_coloring(const std::vector<bool>& assignment) {
    if (assignment.size() > kMaxBitmaskVertices) {
        throw std::domain_error("assignment too wide for a bitmask coloring");
    }
    Coloring chi;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i]) chi.bits |= std::uint64_t{1} << i;
    }
    return chi;
}

void write_dimacs(const CnfFormula& f, std::ostream& out) {
    for (const std::string& c : f.comments) out << "c " << c << '\n';
    out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
    for (const auto& clause : f.clauses) {
        for (const Literal& lit : clause) {
            out << (lit.negated ? -lit.variable : lit.variable) << ' ';
        }
        out << "0\n";
    }
}

std::string to_dimacs_string(const CnfFormula& f) {
    std::ostringstream out;
    write_dimacs(f, out);
    return out.str();
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    bool saw_header = false;
    std::size_t clause_count = 0;
    std::vector<Literal> current;

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') {
            std::size_t start = line.size() > 1 && line[1] == ' ' ? 2 : 1;
            f.comments.push_back(line.substr(start));
            continue;
        }
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, cnf;
            if (!(hs >> p >> cnf >> f.variable_count >> clause_count) || cnf != "cnf") {
                throw std::invalid_argument("malformed DIMACS header: " + line);
            }
            saw_header = true;
            continue;
        }
        if (!saw_header) throw std::invalid_argument("DIMACS clause before 'p cnf' header");
        std::istringstream ls(line);
        long long raw = 0;
        while (ls >> raw) {
            if (raw == 0) {
                f.clauses.push_back(std::move(current));
                current.clear();
            } else {
                const int var = static_cast<int>(raw < 0 ? -raw : raw);
                if (var > f.variable_count) {
                    throw std::invalid_argument("DIMACS literal out of declared variable range");
                }
                current.push_back({var, raw < 0});
            }
        }
    }
    if (!saw_header) throw std::invalid_argument("missing DIMACS header");
    if (!current.empty()) throw std::invalid_argument("DIMACS input ends inside a clause");
    if (f.clauses.size() != clause_count) {
        throw std::invalid_argument("DIMACS clause count does not match the header");
    }
    return f;
}

// ---- DPLL -----------------------------------------------------------------

namespace {

// Clause literals and occurrence lists live in flat arrays (CSR layout);
// per-clause and per-variable counters drive unit and pure-literal detection.
struct DpllState {
    int nvars = 0;
    std::size_t nclauses = 0;
    std::vector<int> lits;                   // all clause literals, back to back
    std::vector<std::uint32_t> clause_begin; // nclauses + 1 offsets into lits
    std::vector<std::uint32_t> occ;          // clause indices, one run per literal
    std::vector<std::uint32_t> occ_begin;    // 2*(nvars+1) offsets: pos at 2v, neg at 2v+1

    std::vector<std::int8_t> value;          // -1 unassigned, 0 false, 1 true
    std::vector<int> unassigned_in;          // per clause
    std::vector<int> satisfied_by;           // per clause: count of true literals
    std::vector<std::uint32_t> pos_active, neg_active;  // active-clause occurrence counts
    std::size_t unsatisfied_clauses = 0;

    std::vector<int> trail;                  // signed literals in assignment order
    std::vector<int> unit_queue;
    std::vector<std::uint32_t> frequency;    // per variable, over the whole formula
    std::uint64_t decisions = 0;
    std::uint64_t budget = 0;

    explicit DpllState(const CnfFormula& f, std::uint64_t decision_budget)
        : nvars(f.variable_count), nclauses(f.clauses.size()), budget(decision_budget) {
        clause_begin.reserve(nclauses + 1);
        clause_begin.push_back(0);
        for (const auto& clause : f.clauses) {
            for (const Literal& lit : clause) {
                lits.push_back(lit.negated ? -lit.variable : lit.variable);
            }
            clause_begin.push_back(static_cast<std::uint32_t>(lits.size()));
            unassigned_in.push_back(static_cast<int>(clause.size()));
            satisfied_by.push_back(0);
        }

        const std::size_t slots = 2 * (static_cast<std::size_t>(nvars) + 1);
        std::vector<std::uint32_t> counts(slots, 0);
        for (int lit : lits) ++counts[slot_of(lit)];
        occ_begin.assign(slots + 1, 0);
        for (std::size_t s = 0; s < slots; ++s) occ_begin[s + 1] = occ_begin[s] + counts[s];
        occ.resize(lits.size());
        std::vector<std::uint32_t> cursor(occ_begin.begin(), occ_begin.end() - 1);
        for (std::size_t ci = 0; ci < nclauses; ++ci) {
            for (std::uint32_t i = clause_begin[ci]; i < clause_begin[ci + 1]; ++i) {
                occ[cursor[slot_of(lits[i])]++] = static_cast<std::uint32_t>(ci);
            }
        }

        pos_active.assign(static_cast<std::size_t>(nvars) + 1, 0);
        neg_active.assign(static_cast<std::size_t>(nvars) + 1, 0);
        frequency.assign(static_cast<std::size_t>(nvars) + 1, 0);
        for (int lit : lits) {
            if (lit > 0) {
                ++pos_active[static_cast<std::size_t>(lit)];
            } else {
                ++neg_active[static_cast<std::size_t>(-lit)];
            }
            ++frequency[static_cast<std::size_t>(lit > 0 ? lit : -lit)];
        }
        unsatisfied_clauses = nclauses;
        value.assign(static_cast<std::size_t>(nvars) + 1, -1);
    }

    static std::size_t slot_of(int lit) {
        return lit > 0 ? 2 * static_cast<std::size_t>(lit)
                       : 2 * static_cast<std::size_t>(-lit) + 1;
    }

    void for_each_occ(std::size_t slot, auto&& fn) {
        for (std::uint32_t i = occ_begin[slot]; i < occ_begin[slot + 1]; ++i) fn(occ[i]);
    }

    void retire_clause(std::size_t ci) {  // clause became satisfied
        --unsatisfied_clauses;
        for (std::uint32_t i = clause_begin[ci]; i < clause_begin[ci + 1]; ++i) {
            const int lit = lits[i];
            if (lit > 0) {
                --pos_active[static_cast<std::size_t>(lit)];
            } else {
                --neg_active[static_cast<std::size_t>(-lit)];
            }
        }
    }

    void revive_clause(std::size_t ci) {  // undo of retire_clause
        ++unsatisfied_clauses;
        for (std::uint32_t i = clause_begin[ci]; i < clause_begin[ci + 1]; ++i) {
            const int lit = lits[i];
            if (lit > 0) {
                ++pos_active[static_cast<std::size_t>(lit)];
            } else {
                ++neg_active[static_cast<std::size_t>(-lit)];
            }
        }
    }

    // Assigns lit true. Returns false on conflict. Queues fresh units.
    bool assign(int lit) {
        const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
        value[var] = lit > 0 ? 1 : 0;
        trail.push_back(lit);

        for_each_occ(slot_of(lit), [&](std::uint32_t ci) {
            --unassigned_in[ci];
            if (++satisfied_by[ci] == 1) retire_clause(ci);
        });
        bool ok = true;
        for_each_occ(slot_of(-lit), [&](std::uint32_t ci) {
            --unassigned_in[ci];
            if (satisfied_by[ci] > 0) return;
            if (unassigned_in[ci] == 0) ok = false;
            if (unassigned_in[ci] == 1) {
                for (std::uint32_t i = clause_begin[ci]; i < clause_begin[ci + 1]; ++i) {
                    const int l = lits[i];
                    const auto v = static_cast<std::size_t>(l > 0 ? l : -l);
                    if (value[v] == -1) {
                        unit_queue.push_back(l);
                        break;
                    }
                }
            }
        });
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            const int lit = trail.back();
            trail.pop_back();
            const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
            value[var] = -1;
            for_each_occ(slot_of(lit), [&](std::uint32_t ci) {
                ++unassigned_in[ci];
                if (--satisfied_by[ci] == 0) revive_clause(ci);
            });
            for_each_occ(slot_of(-lit), [&](std::uint32_t ci) { ++unassigned_in[ci]; });
        }
    }

    // Unit propagation and pure-literal elimination to fixpoint.
    // Returns false on conflict (the queue is cleared either way).
    bool propagate() {
        while (true) {
            while (!unit_queue.empty()) {
                const int lit = unit_queue.back();
                unit_queue.pop_back();
                const auto var = static_cast<std::size_t>(lit > 0 ? lit : -lit);
                if (value[var] != -1) {
                    if ((value[var] == 1) != (lit > 0)) {
                        unit_queue.clear();
                        return false;
                    }
                    continue;
                }
                if (!assign(lit)) {
                    unit_queue.clear();
                    return false;
                }
            }
            if (unsatisfied_clauses == 0) return true;
            bool progress = false;
            for (int v = 1; v <= nvars; ++v) {
                if (value[static_cast<std::size_t>(v)] != -1) continue;
                const std::uint32_t pos = pos_active[static_cast<std::size_t>(v)];
                const std::uint32_t neg = neg_active[static_cast<std::size_t>(v)];
                if (pos == 0 && neg == 0) continue;
                if (pos == 0 || neg == 0) {
                    unit_queue.push_back(pos == 0 ? -v : v);
                    progress = true;
                }
            }
            if (!progress) return true;
        }
    }

    // Most frequent variable in the formula, skipping assigned ones and
    // those no longer in any active clause; ties fall to the smallest index.
    int pick_branch_variable() const {
        int best = 0;
        std::uint32_t best_score = 0;
        for (int v = 1; v <= nvars; ++v) {
            if (value[static_cast<std::size_t>(v)] != -1) continue;
            if (pos_active[static_cast<std::size_t>(v)] == 0 &&
                neg_active[static_cast<std::size_t>(v)] == 0) {
                continue;
            }
            const std::uint32_t score = frequency[static_cast<std::size_t>(v)];
            if (score > best_score) {
                best = v;
                best_score = score;
            }
        }
        return best;
    }

    // Sat / Unsat / BudgetExceeded for the current partial assignment.
    SolveStatus search() {
        if (unsatisfied_clauses == 0) return SolveStatus::Sat;
        const int var = pick_branch_variable();
        if (var == 0) {
            // unreachable once empty clauses are screened out up front
            return SolveStatus::Unsat;
        }
        if (++decisions > budget) return SolveStatus::BudgetExceeded;

        for (const int lit : {-var, var}) {  // false first
            const std::size_t mark = trail.size();
            const bool ok = assign(lit) && propagate();
            if (ok) {
                const SolveStatus sub = search();
                if (sub != SolveStatus::Unsat) return sub;
            }
            unit_queue.clear();
            undo_to(mark);
        }
        return SolveStatus::Unsat;
    }
};

}  // namespace

DpllResult dpll_solve(const CnfFormula& f, std::uint64_t decision_budget) {
    DpllResult result;
    if (f.variable_count < 0) throw std::invalid_argument("negative variable count");
    for (const auto& clause : f.clauses) {
        if (clause.empty()) {  // empty clause: immediately unsatisfiable
            result.status = SolveStatus::Unsat;
            return result;
        }
    }

    DpllState state(f, decision_budget);
    for (std::size_t ci = 0; ci < state.nclauses; ++ci) {
        if (state.unassigned_in[ci] == 1) state.unit_queue.push_back(state.lits[state.clause_begin[ci]]);
    }
    if (!state.propagate()) {
        result.status = SolveStatus::Unsat;
        result.decisions = state.decisions;
        return result;
    }
    result.status = state.search();
    result.decisions = state.decisions;
    if (result.status == SolveStatus::Sat) {
        result.assignment.assign(static_cast<std::size_t>(f.variable_count), false);
        for (int v = 1; v <= f.variable_count; ++v) {
            result.assignment[static_cast<std::size_t>(v - 1)] =
                state.value[static_cast<std::size_t>(v)] == 1;
        }
    }
    return result;
}

// ---- external solver --------------------------------------------------

namespace {

bool clause_satisfied(const std::vector<Literal>& clause, const std::vector<bool>& assignment) {
    for (const Literal& lit : clause) {
        const bool val = assignment[static_cast<std::size_t>(lit.variable - 1)];
        if (val != lit.negated) return true;
    }
    return false;
}

std::filesystem::path unique_temp_path() {
    static std::mt19937_64 rng(std::random_device{}());
    std::ostringstream name;
    name << "propb-" << ::getpid() << '-' << std::hex << rng() << ".cnf";
    return std::filesystem::temp_directory_path() / name.str();
}

struct RunOutput {
    int exit_code = -1;
    bool timed_out = false;
    std::string output;
    std::string error;
};

RunOutput run_with_timeout(const std::string& command, std::chrono::seconds timeout) {
    RunOutput out;
    int fds[2];
    if (::pipe(fds) != 0) {
        out.error = std::string("pipe: ") + std::strerror(errno);
        return out;
    }
    const pid_t pid = ::fork();
    if (pid < 0) {
        out.error = std::string("fork: ") + std::strerror(errno);
        ::close(fds[0]);
        ::close(fds[1]);
        return out;
    }
    if (pid == 0) {
        ::dup2(fds[1], STDOUT_FILENO);
        ::dup2(fds[1], STDERR_FILENO);
        ::close(fds[0]);
        ::close(fds[1]);
        ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    ::close(fds[1]);
    // Non-blocking read loop so the deadline also covers a silent child.
    ::fcntl(fds[0], F_SETFL, O_NONBLOCK);
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    bool child_done = false;
    int status = 0;
    while (true) {
        char buf[4096];
        while (true) {
            const ssize_t got = ::read(fds[0], buf, sizeof buf);
            if (got > 0) {
                out.output.append(buf, static_cast<std::size_t>(got));
            } else {
                break;
            }
        }
        if (child_done) break;
        const pid_t waited = ::waitpid(pid, &status, WNOHANG);
        if (waited == pid) {
            child_done = true;
            continue;  // drain remaining output once more
        }
        if (std::chrono::steady_clock::now() > deadline) {
            ::kill(pid, SIGKILL);
            ::waitpid(pid, &status, 0);
            out.timed_out = true;
            break;
        }
        ::usleep(20 * 1000);
    }
    ::close(fds[0]);
    if (!out.timed_out) {
        out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    return out;
}

}  // namespace

ExternalResult solve_external(const CnfFormula& f, const std::string& solver_command,
                              std::chrono::seconds timeout) {
    ExternalResult result;
    if (solver_command.empty()) {
        result.diagnostic = "no solver command configured";
        return result;
    }

    const std::filesystem::path path = unique_temp_path();
    {
        std::ofstream file(path);
        if (!file) {
            result.diagnostic = "cannot write temp DIMACS file " + path.string();
            return result;
        }
        write_dimacs(f, file);
    }
    const RunOutput run = run_with_timeout(solver_command + " " + path.string(), timeout);
    std::error_code ec;
    std::filesystem::remove(path, ec);

    if (!run.error.empty()) {
        result.diagnostic = run.error;
        return result;
    }
    if (run.timed_out) {
        result.diagnostic = "solver timed out after " + std::to_string(timeout.count()) + "s";
        return result;
    }

    std::optional<bool> sat;
    std::vector<bool> assignment(static_cast<std::size_t>(f.variable_count), false);
    std::vector<bool> assigned(static_cast<std::size_t>(f.variable_count), false);
    std::istringstream lines(run.output);
    std::string line;
    bool bad_literal = false;
    while (std::getline(lines, line)) {
        if (line.rfind("s ", 0) == 0) {
            if (line.find("UNSATISFIABLE") != std::string::npos) {
                sat = false;
            } else if (line.find("SATISFIABLE") != std::string::npos) {
                sat = true;
            }
        } else if (line.rfind("v", 0) == 0 && (line.size() == 1 || line[1] == ' ')) {
            std::istringstream vs(line.substr(1));
            long long lit = 0;
            while (vs >> lit) {
                if (lit == 0) continue;
                const long long var = lit < 0 ? -lit : lit;
                if (var < 1 || var > f.variable_count) {
                    bad_literal = true;
                    continue;
                }
                assignment[static_cast<std::size_t>(var - 1)] = lit > 0;
                assigned[static_cast<std::size_t>(var - 1)] = true;
            }
        }
    }

    if (!sat.has_value()) {
        result.diagnostic = "no 's SATISFIABLE/UNSATISFIABLE' line in solver output (exit " +
                            std::to_string(run.exit_code) + "): " +
                            run.output.substr(0, 512);
        return result;
    }
    if (!*sat) {
        result.status = ExternalStatus::Unsat;
        return result;
    }

    // Unassigned variables default to false; a wrong model still fails the
    // clause re-validation below.
    if (bad_literal) throw std::runtime_error("solver output invalid");
    for (const auto& clause : f.clauses) {
        if (!clause_satisfied(clause, assignment)) {
            throw std::runtime_error("solver output invalid");
        }
    }
    result.status = ExternalStatus::Sat;
    result.assignment = std::move(assignment);
    return result;
}

}  // namespace propb
