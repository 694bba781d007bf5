#include "propb/constructions.hpp"

#include <stdexcept>
#include <string>

#include "propb/atlas.hpp"

namespace propb {

namespace {

void require_valid_swap(int n, SwapOrdering swap) {
    if (swap.p < 1 || swap.p > n) {
        throw std::invalid_argument("swap ordering index p must lie in 1..n");
    }
}

// Visits every K subset of {1..n} with 1 <= |K| <= floor(n/2), ascending by
// size and lexicographic within a size.
template <typename Fn>
void for_each_index_subset(int n, Fn&& fn) {
    std::vector<int> k;
    for (int size = 1; size <= n / 2; ++size) {
        k.assign(static_cast<std::size_t>(size), 0);
        for (int i = 0; i < size; ++i) k[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            fn(k);
            int i = size - 1;
            while (i >= 0 && k[static_cast<std::size_t>(i)] == n - (size - 1 - i)) --i;
            if (i < 0) break;
            ++k[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                k[static_cast<std::size_t>(j)] = k[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
}

std::string core_name(const UniformHypergraph& core) {
    return core.description().empty() ? std::string("unnamed") : core.description();
}

void require_core(const UniformHypergraph& core, int n) {
    if (n < 3) throw std::invalid_argument("pair-augmented constructions need n >= 3");
    if (core.uniformity() != n - 2) {
        throw std::invalid_argument("core uniformity must be n - 2");
    }
}

}  // namespace

std::vector<Hyperedge> cross_family(int n, VertexId u_offset, VertexId v_offset,
                                    SwapOrdering swap) {
    if (n < 2) throw std::invalid_argument("cross family needs n >= 2");
    require_valid_swap(n, swap);

    const auto u = [&](int i) { return u_offset + static_cast<VertexId>(i - 1); };
    // Actual vertex backing position i of V^p.
    const auto v_at = [&](int i) { return v_offset + static_cast<VertexId>(swap.at(i) - 1); };

    std::vector<Hyperedge> edges;
    std::vector<VertexId> all_u;
    for (int i = 1; i <= n; ++i) all_u.push_back(u(i));
    edges.emplace_back(all_u);

    std::vector<bool> in_k(static_cast<std::size_t>(n) + 1);
    for_each_index_subset(n, [&](const std::vector<int>& k) {
        std::fill(in_k.begin(), in_k.end(), false);
        for (int a : k) in_k[static_cast<std::size_t>(a)] = true;

        std::vector<VertexId> edge;
        edge.reserve(static_cast<std::size_t>(n));
        if (k.size() % 2 == 1) {
            // U_K with the complement of V^p_K
            for (int a : k) edge.push_back(u(a));
            for (int i = 1; i <= n; ++i) {
                if (!in_k[static_cast<std::size_t>(i)]) edge.push_back(v_at(i));
            }
        } else {
            // V^p_K with the complement of U_K
            for (int a : k) edge.push_back(v_at(a));
            for (int i = 1; i <= n; ++i) {
                if (!in_k[static_cast<std::size_t>(i)]) edge.push_back(u(i));
            }
        }
        edges.emplace_back(std::move(edge));
    });
    return edges;
}

UniformHypergraph product_construction(const UniformHypergraph& a, const UniformHypergraph& b) {
    if (a.edge_count() == 0 || b.edge_count() == 0) {
        throw std::invalid_argument("product construction needs nonempty factors");
    }

    const std::size_t copies = a.vertex_count();
    const std::size_t block = b.vertex_count();
    UniformHypergraph out(a.uniformity() * b.uniformity(), copies * block);

    const std::vector<Hyperedge> b_edges(b.edges().begin(), b.edges().end());
    const int arity = a.uniformity();

    std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
    for (const Hyperedge& ea : a.edges()) {
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<VertexId> edge;
            edge.reserve(out.uniformity());
            for (int slot = 0; slot < arity; ++slot) {
                const VertexId base =
                    static_cast<VertexId>(ea.vertices()[static_cast<std::size_t>(slot)] * block);
                for (VertexId w : b_edges[pick[static_cast<std::size_t>(slot)]].vertices()) {
                    edge.push_back(base + w);
                }
            }
            out.add_edge(Hyperedge(std::move(edge)));

            int slot = arity - 1;
            while (slot >= 0 && pick[static_cast<std::size_t>(slot)] + 1 == b_edges.size()) {
                pick[static_cast<std::size_t>(slot)] = 0;
                --slot;
            }
            if (slot < 0) break;
            ++pick[static_cast<std::size_t>(slot)];
        }
    }
    out.set_description("product(" + core_name(a) + ", " + core_name(b) + ")");
    return out;
}

UniformHypergraph aht_construction(const UniformHypergraph& core, int n) {
    require_core(core, n);

    Embedding emb = disjoint_union_embed(
        n, {EmbedPart::graph(core, VertexRole::Core),
            EmbedPart::block(static_cast<std::size_t>(n), VertexRole::U),
            EmbedPart::block(static_cast<std::size_t>(n), VertexRole::V)});
    UniformHypergraph h = std::move(emb.skeleton);
    const VertexId u0 = emb.offsets[1];
    const VertexId v0 = emb.offsets[2];

    for (int i = 1; i <= n; ++i) {
        for (const Hyperedge& e : core.edges()) {
            std::vector<VertexId> edge(e.vertices());
            edge.push_back(u0 + static_cast<VertexId>(i - 1));
            edge.push_back(v0 + static_cast<VertexId>(i - 1));
            h.add_edge(Hyperedge(std::move(edge)));
        }
    }
    for (Hyperedge& e : cross_family(n, u0, v0)) h.add_edge(std::move(e));

    h.set_description("aht(n=" + std::to_string(n) + ", core=" + core_name(core) + ")");
    return h;
}

UniformHypergraph swap_construction(const UniformHypergraph& core, int n,
                                    SwapProvenance* provenance) {
    require_core(core, n);

    Embedding emb = disjoint_union_embed(
        n, {EmbedPart::graph(core, VertexRole::Core),
            EmbedPart::block(static_cast<std::size_t>(n), VertexRole::U),
            EmbedPart::block(static_cast<std::size_t>(n), VertexRole::V)});
    UniformHypergraph h = std::move(emb.skeleton);
    const VertexId u0 = emb.offsets[1];
    const VertexId v0 = emb.offsets[2];

    // Pairs (u_1, v_1) stay out of the core augmentation here.
    for (int i = 2; i <= n; ++i) {
        for (const Hyperedge& e : core.edges()) {
            std::vector<VertexId> edge(e.vertices());
            edge.push_back(u0 + static_cast<VertexId>(i - 1));
            edge.push_back(v0 + static_cast<VertexId>(i - 1));
            h.add_edge(Hyperedge(std::move(edge)));
        }
    }

    if (provenance != nullptr) {
        provenance->first_p.clear();
        provenance->new_cross_edges_per_p.assign(static_cast<std::size_t>(n), 0);
    }
    for (int p = 1; p <= n; ++p) {
        for (Hyperedge& e : cross_family(n, u0, v0, SwapOrdering{p})) {
            if (provenance != nullptr) {
                auto [it, inserted] = provenance->first_p.emplace(e, p);
                if (inserted) ++provenance->new_cross_edges_per_p[static_cast<std::size_t>(p - 1)];
            }
            h.add_edge(std::move(e));
        }
    }

    h.set_description("swap(n=" + std::to_string(n) + ", core=" + core_name(core) + ")");
    return h;
}

UniformHypergraph layered_construction(const UniformHypergraph& core, int n) {
    require_core(core, n);

    const auto inner = static_cast<std::size_t>(n - 2);
    Embedding emb = disjoint_union_embed(
        n, {EmbedPart::graph(core, VertexRole::Core),
            EmbedPart::block(static_cast<std::size_t>(n), VertexRole::U),
            EmbedPart::block(static_cast<std::size_t>(n), VertexRole::V),
            EmbedPart::block(inner, VertexRole::UPrime),
            EmbedPart::block(inner, VertexRole::VPrime)});
    UniformHypergraph h = std::move(emb.skeleton);
    const VertexId u0 = emb.offsets[1];
    const VertexId v0 = emb.offsets[2];
    const VertexId up0 = emb.offsets[3];
    const VertexId vp0 = emb.offsets[4];

    for (int i = 1; i <= n - 2; ++i) {
        for (const Hyperedge& e : core.edges()) {
            std::vector<VertexId> edge(e.vertices());
            edge.push_back(up0 + static_cast<VertexId>(i - 1));
            edge.push_back(vp0 + static_cast<VertexId>(i - 1));
            h.add_edge(Hyperedge(std::move(edge)));
        }
    }

    // Every (n-2)-ary cross edge over U'/V', completed with each pair u_i, v_i.
    // The inner family at n - 2 = 1 degenerates to the single edge {u'_1}.
    std::vector<Hyperedge> inner_family;
    if (n - 2 >= 2) {
        inner_family = cross_family(n - 2, up0, vp0);
    } else {
        inner_family.emplace_back(std::vector<VertexId>{up0});
    }
    for (int i = 1; i <= n; ++i) {
        for (const Hyperedge& f : inner_family) {
            std::vector<VertexId> edge(f.vertices());
            edge.push_back(u0 + static_cast<VertexId>(i - 1));
            edge.push_back(v0 + static_cast<VertexId>(i - 1));
            h.add_edge(Hyperedge(std::move(edge)));
        }
    }

    for (Hyperedge& e : cross_family(n, u0, v0)) h.add_edge(std::move(e));

    h.set_description("layered(n=" + std::to_string(n) + ", core=" + core_name(core) + ")");
    return h;
}

UniformHypergraph m8_construction(M8StepCounts* counts) {
    const UniformHypergraph a = aht_construction(fano(), 5);
    const UniformHypergraph b = fano();
    const UniformHypergraph c = fano();

    Embedding emb = disjoint_union_embed(
        8, {EmbedPart::graph(a, VertexRole::SubA), EmbedPart::graph(b, VertexRole::SubB),
            EmbedPart::graph(c, VertexRole::SubC), EmbedPart::block(8, VertexRole::U),
            EmbedPart::block(8, VertexRole::V)});
    UniformHypergraph h = std::move(emb.skeleton);
    const VertexId b0 = emb.offsets[1];
    const VertexId c0 = emb.offsets[2];
    const VertexId u0 = emb.offsets[3];
    const VertexId v0 = emb.offsets[4];

    const auto shifted = [](const Hyperedge& e, VertexId off) {
        std::vector<VertexId> ids;
        ids.reserve(e.size());
        for (VertexId v : e.vertices()) ids.push_back(v + off);
        return ids;
    };

    M8StepCounts local;
    for (const Hyperedge& ea : a.edges()) {
        for (const Hyperedge& eb : b.edges()) {
            std::vector<VertexId> edge(ea.vertices());
            for (VertexId w : shifted(eb, b0)) edge.push_back(w);
            if (h.add_edge(Hyperedge(std::move(edge)))) ++local.ab;
        }
    }
    for (const Hyperedge& ea : a.edges()) {
        for (const Hyperedge& ec : c.edges()) {
            std::vector<VertexId> edge(ea.vertices());
            for (VertexId w : shifted(ec, c0)) edge.push_back(w);
            if (h.add_edge(Hyperedge(std::move(edge)))) ++local.ac;
        }
    }
    for (int i = 0; i < 8; ++i) {
        for (const Hyperedge& eb : b.edges()) {
            for (const Hyperedge& ec : c.edges()) {
                std::vector<VertexId> edge = shifted(eb, b0);
                for (VertexId w : shifted(ec, c0)) edge.push_back(w);
                edge.push_back(u0 + static_cast<VertexId>(i));
                edge.push_back(v0 + static_cast<VertexId>(i));
                if (h.add_edge(Hyperedge(std::move(edge)))) ++local.pairs_bc;
            }
        }
    }
    bool first = true;
    for (Hyperedge& e : cross_family(8, u0, v0)) {
        if (h.add_edge(std::move(e))) {
            if (first) {
                ++local.u_edge;  // cross_family emits U first
            } else {
                ++local.cross_rest;
            }
        }
        first = false;
    }

    if (counts != nullptr) *counts = local;
    h.set_description("m8");
    return h;
}

}  // namespace propb
