#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "propb/core.hpp"

namespace propb {

/// 1-based variable; variable i stands for vertex i-1 being Red.
struct Literal {
    int variable = 0;
    bool negated = false;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Monotone CNF mirror of a hypergraph: per edge one all-positive and one
/// all-negative clause, so clause_count = 2 * edge_count and the clauses come
/// in complementary pairs.
struct CnfFormula {
    int variable_count = 0;
    std::vector<std::vector<Literal>> clauses;
    std::vector<std::string> comments;  // DIMACS 'c' lines; excluded from equality

    bool operator==(const CnfFormula& other) const {
        return variable_count == other.variable_count && clauses == other.clauses;
    }
};

/// Encodes 2-colorability: the formula is satisfiable iff the hypergraph is
/// 2-colorable, and models decode to proper colorings. Throws on an empty
/// hypergraph.
CnfFormula to_monotone_cnf(const UniformHypergraph& h);

/// assignment[i] is the value of variable i+1; true = Red for vertex i.
Coloring assignment_to_coloring(const std::vector<bool>& assignment);

/// Standard DIMACS with the formula's comments first. Byte-stable for equal
/// inputs.
void write_dimacs(const CnfFormula& f, std::ostream& out);
std::string to_dimacs_string(const CnfFormula& f);

/// Accepts comments, the "p cnf V C" header and 0-terminated clauses
/// (possibly spanning lines). Throws std::invalid_argument on malformed
/// input.
CnfFormula parse_dimacs(std::istream& in);

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

struct DpllResult {
    SolveStatus status = SolveStatus::BudgetExceeded;
    std::vector<bool> assignment;  // meaningful when Sat
    std::uint64_t decisions = 0;
};

inline constexpr std::uint64_t kDefaultDecisionBudget = 10'000'000;

/// Plain DPLL: unit propagation, pure-literal elimination, branching on the
/// most frequent variable trying false first. Sound and complete within the
/// decision budget; running out yields BudgetExceeded, never a wrong verdict.
DpllResult dpll_solve(const CnfFormula& f, std::uint64_t decision_budget = kDefaultDecisionBudget);

enum class ExternalStatus { Sat, Unsat, Unknown };

struct ExternalResult {
    ExternalStatus status = ExternalStatus::Unknown;
    std::vector<bool> assignment;  // meaningful when Sat; always re-validated
    std::string diagnostic;
};

/// Default external solver command, read from this environment variable when
/// no explicit command is given.
inline constexpr const char* kSolverEnvVar = "PROPB_SAT_SOLVER";

/// Writes the formula to a temp DIMACS file, runs `solver_command <file>`
/// through the shell and parses the standard "s ..."/"v ..." output. Sat
/// assignments are re-validated against the formula; a claimed model that
/// fails validation throws std::runtime_error("solver output invalid").
/// Missing binaries, timeouts and unparsable output come back as Unknown
/// with a diagnostic.
ExternalResult solve_external(const CnfFormula& f, const std::string& solver_command,
                              std::chrono::seconds timeout = std::chrono::seconds{60});

}  // namespace propb
