#include "propb/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace propb {

namespace {

std::uint64_t edge_mask(const Hyperedge& e) {
    std::uint64_t m = 0;
    for (VertexId v : e.vertices()) m |= std::uint64_t{1} << v;
    return m;
}

bool mono(std::uint64_t chi, std::uint64_t mask) {
    const std::uint64_t hit = chi & mask;
    return hit == mask || hit == 0;
}

void require_bitmask_domain(const UniformHypergraph& h) {
    if (h.vertex_count() > kMaxBitmaskVertices) {
        throw std::domain_error(
            "hypergraph exceeds the bitmask coloring domain (" +
            std::to_string(kMaxBitmaskVertices) +
            " vertices); encode it with to_monotone_cnf and use a SAT solver instead");
    }
}

// Greedy fail-fast order: start from the edge with the largest total vertex
// degree, then repeatedly pick the edge overlapping the already-covered
// vertex set the most. Affects speed only, never results.
std::vector<std::uint64_t> fail_fast_masks(const UniformHypergraph& h) {
    std::vector<std::uint64_t> masks;
    masks.reserve(h.edge_count());
    std::vector<std::size_t> degree(h.vertex_count(), 0);
    for (const Hyperedge& e : h.edges()) {
        masks.push_back(edge_mask(e));
        for (VertexId v : e.vertices()) ++degree[v];
    }
    if (masks.empty()) return masks;

    std::vector<std::size_t> weight(masks.size(), 0);
    {
        std::size_t i = 0;
        for (const Hyperedge& e : h.edges()) {
            for (VertexId v : e.vertices()) weight[i] += degree[v];
            ++i;
        }
    }

    std::vector<std::uint64_t> ordered;
    ordered.reserve(masks.size());
    std::vector<bool> used(masks.size(), false);
    std::uint64_t covered = 0;
    for (std::size_t round = 0; round < masks.size(); ++round) {
        std::size_t best = masks.size();
        std::size_t best_overlap = 0;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if (used[i]) continue;
            const auto overlap =
                static_cast<std::size_t>(__builtin_popcountll(masks[i] & covered));
            // Rank by overlap with covered vertices, then by degree weight;
            // index order breaks remaining ties deterministically.
            if (best == masks.size() || overlap > best_overlap ||
                (overlap == best_overlap && weight[i] > weight[best])) {
                best = i;
                best_overlap = overlap;
            }
        }
        used[best] = true;
        covered |= masks[best];
        ordered.push_back(masks[best]);
    }
    return ordered;
}

struct WorkerResult {
    std::optional<std::uint64_t> witness;  // local minimum proper coloring
    std::uint64_t scanned = 0;
    bool timed_out = false;
};

// Scans chi = x << 1 for x in [begin, end); vertex 0 stays Blue.
WorkerResult scan_range(const std::vector<std::uint64_t>& masks, std::uint64_t begin,
                        std::uint64_t end, const std::atomic<bool>* stop,
                        std::atomic<bool>* found_any,
                        std::optional<std::chrono::steady_clock::time_point> deadline) {
    constexpr std::uint64_t kCheckInterval = 1 << 14;
    WorkerResult result;
    for (std::uint64_t x = begin; x < end; ++x) {
        if ((x & (kCheckInterval - 1)) == 0) {
            if (stop != nullptr && stop->load(std::memory_order_relaxed)) return result;
            if (deadline && std::chrono::steady_clock::now() > *deadline) {
                result.timed_out = true;
                return result;
            }
        }
        const std::uint64_t chi = x << 1;
        bool proper = true;
        for (const std::uint64_t m : masks) {
            if (mono(chi, m)) {
                proper = false;
                break;
            }
        }
        ++result.scanned;
        if (proper) {
            result.witness = chi;
            if (found_any != nullptr) found_any->store(true, std::memory_order_relaxed);
            return result;  // ascending scan: first hit is the range minimum
        }
    }
    return result;
}

}  // namespace

std::optional<Hyperedge> monochromatic_edge(const UniformHypergraph& h, Coloring chi) {
    require_bitmask_domain(h);
    for (const Hyperedge& e : h.edges()) {
        if (mono(chi.bits, edge_mask(e))) return e;
    }
    return std::nullopt;
}

SearchResult find_proper_coloring(const UniformHypergraph& h, const SearchOptions& options) {
    require_bitmask_domain(h);

    const std::vector<std::uint64_t> masks = fail_fast_masks(h);
    const std::uint64_t space = std::uint64_t{1} << (h.vertex_count() - 1);

    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (options.timeout) deadline = std::chrono::steady_clock::now() + *options.timeout;

    unsigned threads = std::max(1u, options.threads);
    if (space < 1024) threads = 1;

    std::vector<WorkerResult> results(threads);
    if (threads == 1) {
        results[0] = scan_range(masks, 0, space, nullptr, nullptr, deadline);
    } else {
        std::atomic<bool> found_any{false};
        std::atomic<bool> stop{false};
        const std::atomic<bool>* stop_ptr = options.fast ? &found_any : &stop;
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (space + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t begin = chunk * t;
            const std::uint64_t end = std::min(space, begin + chunk);
            pool.emplace_back([&, t, begin, end] {
                results[t] = scan_range(masks, begin, end, stop_ptr, &found_any, deadline);
            });
        }
        for (std::thread& th : pool) th.join();
    }

    SearchResult out;
    bool timed_out = false;
    std::optional<std::uint64_t> witness;
    for (const WorkerResult& r : results) {
        out.colorings_scanned += r.scanned;
        timed_out = timed_out || r.timed_out;
        if (r.witness && (!witness || *r.witness < *witness)) witness = r.witness;
    }

    if (witness) {
        out.status = SearchStatus::Decided;
        out.verdict.two_colorable = true;
        out.verdict.witness = Coloring{*witness};
        out.verdict.certificate_checked = !monochromatic_edge(h, *out.verdict.witness).has_value();
        return out;
    }
    if (timed_out) {
        out.status = SearchStatus::TimedOut;
        return out;
    }
    out.status = SearchStatus::Decided;
    out.verdict.two_colorable = false;
    out.verdict.certificate_checked = true;  // the half space was fully enumerated
    return out;
}

bool minimality_probe(const UniformHypergraph& h, const SearchOptions& options) {
    for (const Hyperedge& e : h.edges()) {
        const SearchResult r = find_proper_coloring(h.without_edge(e), options);
        if (r.status == SearchStatus::TimedOut) {
            throw std::runtime_error("minimality probe timed out");
        }
        if (!r.verdict.two_colorable) return false;
    }
    return true;
}

bool lemma1_condition_holds(int n, Coloring chi_uv, SwapOrdering swap) {
    if (swap.p < 1 || swap.p > n) throw std::invalid_argument("swap index p must lie in 1..n");
    bool red_red = false;
    bool blue_blue = false;
    for (int i = 1; i <= n; ++i) {
        const bool u_red = chi_uv.red(static_cast<VertexId>(i - 1));
        const bool v_red = chi_uv.red(static_cast<VertexId>(n + swap.at(i) - 1));
        red_red = red_red || (u_red && v_red);
        blue_blue = blue_blue || (!u_red && !v_red);
    }
    return !(red_red && blue_blue);
}

bool verify_lemma1(int n, SwapOrdering swap) {
    if (n < 2) throw std::invalid_argument("lemma check needs n >= 2");
    if (n > 12) throw std::invalid_argument("lemma check enumerates 2^(2n) colorings; n <= 12");

    std::vector<std::uint64_t> masks;
    for (const Hyperedge& e : cross_family(n, 0, static_cast<VertexId>(n), swap)) {
        masks.push_back(edge_mask(e));
    }

    const std::uint64_t space = std::uint64_t{1} << (2 * n);
    for (std::uint64_t chi = 0; chi < space; ++chi) {
        if (!lemma1_condition_holds(n, Coloring{chi}, swap)) continue;
        bool has_mono = false;
        for (const std::uint64_t m : masks) {
            if (mono(chi, m)) {
                has_mono = true;
                break;
            }
        }
        if (!has_mono) return false;
    }
    return true;
}

}  // namespace propb
