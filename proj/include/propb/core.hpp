#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace propb {

using VertexId = std::uint32_t;

// Bitmask colorings cover at most this many vertices. Larger hypergraphs are
// still constructible and serializable; they are just outside the exhaustive
// search domain (use the CNF path instead).
inline constexpr std::size_t kMaxBitmaskVertices = 63;

/// Total Red/Blue assignment over the vertices of one hypergraph.
/// Bit v set means vertex v is Red, clear means Blue.
struct Coloring {
    std::uint64_t bits = 0;

    bool red(VertexId v) const { return (bits >> v) & 1u; }
    friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

enum class VertexRole { Core, U, V, UPrime, VPrime, SubA, SubB, SubC };

std::string_view role_name(VertexRole role);
std::optional<VertexRole> role_from_name(std::string_view name);

/// (role, index) names a vertex within one hypergraph; index is 1-based so
/// that u_3 carries index 3. Matching pairs share the index across U/V and
/// UPrime/VPrime.
struct VertexLabel {
    VertexRole role = VertexRole::Core;
    int index = 0;

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

/// Canonical hyperedge: vertex ids stored strictly increasing.
class Hyperedge {
public:
    /// Sorts the ids; throws std::invalid_argument on a repeated vertex.
    explicit Hyperedge(std::vector<VertexId> vertices);
    Hyperedge(std::initializer_list<VertexId> vertices);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    bool contains(VertexId v) const;

    friend auto operator<=>(const Hyperedge&, const Hyperedge&) = default;

private:
    std::vector<VertexId> vertices_;
};

/// n-uniform hypergraph on dense vertex ids [0, vertex_count) with labeled
/// vertices and set-semantics edges iterated in lexicographic order.
///
/// Mutation is limited to add_edge while a single owner builds the graph;
/// once construction finishes the object is treated as immutable and is safe
/// to share read-only across threads.
class UniformHypergraph {
public:
    /// Throws std::invalid_argument for n < 1, vertex_count == 0, a label
    /// list of the wrong length, or a duplicate (role, index) pair.
    UniformHypergraph(int n, std::size_t vertex_count, std::vector<VertexLabel> labels);

    /// Default labels: (Core, 1) .. (Core, vertex_count).
    UniformHypergraph(int n, std::size_t vertex_count);

    int uniformity() const { return n_; }
    std::size_t vertex_count() const { return vertex_count_; }

    const std::set<Hyperedge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool contains_edge(const Hyperedge& e) const { return edges_.count(e) != 0; }

    const std::vector<VertexLabel>& labels() const { return labels_; }
    const VertexLabel& label(VertexId v) const;
    std::optional<VertexId> vertex_for(VertexRole role, int index) const;

    /// Inserts the edge in canonical form. Returns false (and leaves the edge
    /// set unchanged) when the edge is already present. Throws
    /// std::invalid_argument on wrong arity, a repeated vertex, or an
    /// out-of-range id.
    bool add_edge(std::span<const VertexId> vertices);
    bool add_edge(std::initializer_list<VertexId> vertices);
    bool add_edge(Hyperedge e);

    /// Copy with one edge removed; used by minimality probing.
    UniformHypergraph without_edge(const Hyperedge& e) const;

    /// Free-form provenance ("fano", "aht(n=5, core=fano)", ...). Not part of
    /// the serialized form; carried into DIMACS comments.
    const std::string& description() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }

private:
    int n_;
    std::size_t vertex_count_;
    std::vector<VertexLabel> labels_;
    std::map<VertexLabel, VertexId> label_to_vertex_;
    std::set<Hyperedge> edges_;
    std::string description_;
};

/// One block of a disjoint union: either bare vertices or the vertex set of
/// an existing hypergraph (optionally carrying its edges across).
struct EmbedPart {
    std::size_t count = 0;
    VertexRole role = VertexRole::Core;
    int index_start = 1;
    const UniformHypergraph* copy_edges_from = nullptr;

    static EmbedPart block(std::size_t count, VertexRole role, int index_start = 1);
    static EmbedPart graph(const UniformHypergraph& g, VertexRole role, bool copy_edges = false,
                           int index_start = 1);
};

struct Embedding {
    UniformHypergraph skeleton;
    std::vector<VertexId> offsets;  // one per part, in input order
};

/// Lays the parts out side by side: part i's vertex j becomes offsets[i] + j.
/// Labels are (part.role, part.index_start + j). Edges are copied only for
/// parts that request it (those must match the target uniformity n).
Embedding disjoint_union_embed(int n, const std::vector<EmbedPart>& parts);

}  // namespace propb
