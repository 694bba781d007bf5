#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "propb/constructions.hpp"
#include "propb/core.hpp"

namespace propb {

struct Verdict {
    bool two_colorable = false;
    std::optional<Coloring> witness;     // proper coloring when two_colorable
    bool certificate_checked = false;    // witness re-validated / search completed
};

enum class SearchStatus { Decided, TimedOut };

struct SearchOptions {
    unsigned threads = 1;
    /// Stop as soon as any worker finds a proper coloring. The witness may
    /// then be any proper coloring, not the canonical minimal one.
    bool fast = false;
    std::optional<std::chrono::milliseconds> timeout;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Decided;
    Verdict verdict;
    std::uint64_t colorings_scanned = 0;
};

/// Lexicographically first edge that is all-Red or all-Blue under chi, or
/// nullopt when every edge sees both colors. Needs vertex_count <= 63.
std::optional<Hyperedge> monochromatic_edge(const UniformHypergraph& h, Coloring chi);

/// Exhaustive search over all colorings with vertex 0 fixed Blue (the
/// color-swap halves the space without losing any verdict), in increasing
/// bitmask order. The witness, when not in fast mode, is the minimum-bitmask
/// proper coloring with vertex 0 Blue regardless of thread count. Throws
/// std::domain_error when vertex_count exceeds the bitmask domain.
SearchResult find_proper_coloring(const UniformHypergraph& h, const SearchOptions& options = {});

/// True iff removing any single edge leaves a 2-colorable hypergraph. Throws
/// std::runtime_error if a sub-search times out.
bool minimality_probe(const UniformHypergraph& h, const SearchOptions& options = {});

/// chi covers u_1..u_n as bits 0..n-1 and v_1..v_n as bits n..2n-1. True iff
/// there are NOT two matching pairs (u_i, v^p_i) Red-Red and (u_j, v^p_j)
/// Blue-Blue at the same time.
bool lemma1_condition_holds(int n, Coloring chi_uv, SwapOrdering swap = {});

/// Enumerates all 2^{2n} colorings of U and V: whenever the condition above
/// holds, some edge of cross_family(n, p) must be monochromatic. Returns the
/// conjunction over the whole space. Needs n <= 12.
bool verify_lemma1(int n, SwapOrdering swap = {});

}  // namespace propb
