#pragma once

#include <map>
#include <vector>

#include "propb/core.hpp"

namespace propb {

/// The ordered set V^p: the identity ordering of v_1..v_n with positions 1
/// and p transposed. p = 1 is the identity. The matching partner of u_i is
/// the v sitting at position i, i.e. v_{at(i)}.
struct SwapOrdering {
    int p = 1;

    /// 1-based index of the v vertex at position i.
    int at(int i) const { return i == 1 ? p : (i == p ? 1 : i); }
};

/// Edges over two n-blocks starting at u_offset and v_offset (u_i maps to
/// u_offset + i - 1, likewise for v):
///   - U itself,
///   - U_K with the complement of V^p_K for every odd |K| <= floor(n/2),
///   - V^p_K with the complement of U_K for every even 2 <= |K| <= floor(n/2).
/// The family has no internal duplicates; the emitted order is U first, then
/// ascending |K| with subsets in lexicographic index order.
std::vector<Hyperedge> cross_family(int n, VertexId u_offset, VertexId v_offset,
                                    SwapOrdering swap = {});

/// Replaces each vertex of `a` with a private copy of `b` and combines one
/// b-edge per copy across every a-edge. Result is (a.n * b.n)-uniform with
/// |E(a)| * |E(b)|^a.n edges; copy c belongs to vertex c of `a` in id order.
UniformHypergraph product_construction(const UniformHypergraph& a, const UniformHypergraph& b);

/// Core plus blocks U, V of size n: every core edge augmented with each
/// matching pair, then the p = 1 cross family. 2^{n-1} + n*m edges for odd n,
/// C(n, n/2)/2 more for even n.
UniformHypergraph aht_construction(const UniformHypergraph& core, int n);

struct SwapProvenance {
    std::map<Hyperedge, int> first_p;               // smallest p that forms each cross edge
    std::vector<std::size_t> new_cross_edges_per_p; // distinct new edges, index p-1
};

/// Like aht_construction but pair-augments core edges only for i >= 2 and
/// takes the cross families of every ordering V^p, p = 1..n, deduplicated by
/// set semantics. Optionally records which p first produced each cross edge.
UniformHypergraph swap_construction(const UniformHypergraph& core, int n,
                                    SwapProvenance* provenance = nullptr);

/// Core plus four blocks U, V (size n) and U', V' (size n-2). Core edges are
/// pair-augmented through U'/V'; each (n-2)-ary cross edge over U'/V' is
/// completed with every pair u_i, v_i; the plain cross family over U/V tops
/// it off.
UniformHypergraph layered_construction(const UniformHypergraph& core, int n);

struct M8StepCounts {
    std::size_t ab = 0;         // A-edge with B-edge
    std::size_t ac = 0;         // A-edge with C-edge
    std::size_t pairs_bc = 0;   // pair + B-edge + C-edge
    std::size_t u_edge = 0;     // the block U itself
    std::size_t cross_rest = 0; // remaining cross-family edges
};

/// The 8-uniform instance on 47 vertices: A = aht(fano, 5), B = C = fano,
/// plus blocks U, V of size 8. 1269 edges.
UniformHypergraph m8_construction(M8StepCounts* counts = nullptr);

}  // namespace propb
