#include "propb/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace propb {

std::string_view role_name(VertexRole role) {
    switch (role) {
        case VertexRole::Core: return "Core";
        case VertexRole::U: return "U";
        case VertexRole::V: return "V";
        case VertexRole::UPrime: return "UPrime";
        case VertexRole::VPrime: return "VPrime";
        case VertexRole::SubA: return "SubA";
        case VertexRole::SubB: return "SubB";
        case VertexRole::SubC: return "SubC";
    }
    return "Core";
}

std::optional<VertexRole> role_from_name(std::string_view name) {
    static const std::pair<std::string_view, VertexRole> table[] = {
        {"Core", VertexRole::Core},     {"U", VertexRole::U},
        {"V", VertexRole::V},           {"UPrime", VertexRole::UPrime},
        {"VPrime", VertexRole::VPrime}, {"SubA", VertexRole::SubA},
        {"SubB", VertexRole::SubB},     {"SubC", VertexRole::SubC},
    };
    for (const auto& [n, r] : table) {
        if (n == name) return r;
    }
    return std::nullopt;
}

Hyperedge::Hyperedge(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw std::invalid_argument("hyperedge contains a repeated vertex");
    }
}

Hyperedge::Hyperedge(std::initializer_list<VertexId> vertices)
    : Hyperedge(std::vector<VertexId>(vertices)) {}

bool Hyperedge::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

UniformHypergraph::UniformHypergraph(int n, std::size_t vertex_count,
                                     std::vector<VertexLabel> labels)
    : n_(n), vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (n < 1) throw std::invalid_argument("uniformity must be at least 1");
    if (vertex_count == 0) throw std::invalid_argument("hypergraph needs at least one vertex");
    if (labels_.size() != vertex_count) {
        throw std::invalid_argument("label list length must equal vertex_count");
    }
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        auto [it, inserted] = label_to_vertex_.emplace(labels_[v], static_cast<VertexId>(v));
        if (!inserted) {
            throw std::invalid_argument("duplicate vertex label (role, index)");
        }
    }
}

static std::vector<VertexLabel> default_labels(std::size_t vertex_count) {
    std::vector<VertexLabel> labels;
    labels.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        labels.push_back({VertexRole::Core, static_cast<int>(v) + 1});
    }
    return labels;
}

UniformHypergraph::UniformHypergraph(int n, std::size_t vertex_count)
    : UniformHypergraph(n, vertex_count, default_labels(vertex_count)) {}

const VertexLabel& UniformHypergraph::label(VertexId v) const {
    if (v >= labels_.size()) throw std::invalid_argument("vertex id out of range");
    return labels_[v];
}

std::optional<VertexId> UniformHypergraph::vertex_for(VertexRole role, int index) const {
    auto it = label_to_vertex_.find(VertexLabel{role, index});
    if (it == label_to_vertex_.end()) return std::nullopt;
    return it->second;
}

bool UniformHypergraph::add_edge(std::span<const VertexId> vertices) {
    return add_edge(Hyperedge(std::vector<VertexId>(vertices.begin(), vertices.end())));
}

bool UniformHypergraph::add_edge(std::initializer_list<VertexId> vertices) {
    return add_edge(Hyperedge(std::vector<VertexId>(vertices)));
}

bool UniformHypergraph::add_edge(Hyperedge e) {
    if (e.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("edge arity does not match hypergraph uniformity");
    }
    if (!e.vertices().empty() && e.vertices().back() >= vertex_count_) {
        throw std::invalid_argument("edge contains an out-of-range vertex id");
    }
    return edges_.insert(std::move(e)).second;
}

UniformHypergraph UniformHypergraph::without_edge(const Hyperedge& e) const {
    UniformHypergraph out(n_, vertex_count_, labels_);
    for (const Hyperedge& edge : edges_) {
        if (edge != e) out.add_edge(edge);
    }
    out.set_description(description_);
    return out;
}

EmbedPart EmbedPart::block(std::size_t count, VertexRole role, int index_start) {
    return EmbedPart{count, role, index_start, nullptr};
}

EmbedPart EmbedPart::graph(const UniformHypergraph& g, VertexRole role, bool copy_edges,
                           int index_start) {
    return EmbedPart{g.vertex_count(), role, index_start, copy_edges ? &g : nullptr};
}

Embedding disjoint_union_embed(int n, const std::vector<EmbedPart>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint union needs at least one part");

    std::vector<VertexLabel> labels;
    std::vector<VertexId> offsets;
    std::size_t total = 0;
    for (const EmbedPart& part : parts) {
        offsets.push_back(static_cast<VertexId>(total));
        for (std::size_t j = 0; j < part.count; ++j) {
            labels.push_back({part.role, part.index_start + static_cast<int>(j)});
        }
        total += part.count;
    }

    UniformHypergraph skeleton(n, total, std::move(labels));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const UniformHypergraph* src = parts[i].copy_edges_from;
        if (src == nullptr) continue;
        if (src->uniformity() != n) {
            throw std::invalid_argument("cannot copy edges from a part of different uniformity");
        }
        for (const Hyperedge& e : src->edges()) {
            std::vector<VertexId> shifted;
            shifted.reserve(e.size());
            for (VertexId v : e.vertices()) shifted.push_back(v + offsets[i]);
            skeleton.add_edge(Hyperedge(std::move(shifted)));
        }
    }
    return Embedding{std::move(skeleton), std::move(offsets)};
}

}  // namespace propb
