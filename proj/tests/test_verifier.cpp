#include <doctest.h>

#include <random>
#include <stdexcept>
#include <thread>

#include "propb/atlas.hpp"
#include "propb/verifier.hpp"
#include "test_support.hpp"

using namespace propb;
namespace oracle = propb::testing;

TEST_SUITE_BEGIN("verifier");

TEST_CASE("monochromatic_edge") {
    const UniformHypergraph f = fano();
    SUBCASE("all-red coloring reports the lexicographically first edge") {
        const auto e = monochromatic_edge(f, Coloring{0x7f});
        REQUIRE(e.has_value());
        CHECK(*e == Hyperedge{0, 1, 2});
    }
    SUBCASE("red vertex 0 leaves the opposite triangle edge all-Blue") {
        // no triangle coloring avoids a monochromatic edge (m(2) = 3)
        const auto e = monochromatic_edge(triangle(), Coloring{0b001});
        REQUIRE(e.has_value());
        CHECK(*e == Hyperedge{1, 2});
    }
    SUBCASE("a proper coloring of a path reports nothing") {
        UniformHypergraph path(2, 3);
        path.add_edge({0, 1});
        path.add_edge({1, 2});
        CHECK_FALSE(monochromatic_edge(path, Coloring{0b010}).has_value());
    }
    SUBCASE("every fano coloring has a monochromatic line") {
        for (std::uint64_t chi = 0; chi < 128; ++chi) {
            CHECK(monochromatic_edge(f, Coloring{chi}).has_value());
        }
    }
}

TEST_CASE("monochromatic_edge returns the lexicographically first hit") {
    std::mt19937 rng(31);
    const UniformHypergraph instances[] = {fano(), aht_construction(triangle(), 4)};
    for (const UniformHypergraph& h : instances) {
        for (int round = 0; round < 200; ++round) {
            const Coloring chi{rng() & ((std::uint64_t{1} << h.vertex_count()) - 1)};
            // reference: first edge in lexicographic set order that is monochromatic
            std::optional<Hyperedge> expected;
            for (const Hyperedge& e : h.edges()) {
                if (oracle::mono_under(chi.bits, oracle::mask_of(e))) {
                    expected = e;
                    break;
                }
            }
            CHECK(monochromatic_edge(h, chi) == expected);
        }
    }
}

TEST_CASE("find_proper_coloring verdicts") {
    CHECK_FALSE(find_proper_coloring(triangle()).verdict.two_colorable);
    CHECK_FALSE(find_proper_coloring(fano()).verdict.two_colorable);

    const SearchResult r = find_proper_coloring(aht_construction(fano(), 5));
    CHECK(r.status == SearchStatus::Decided);
    CHECK_FALSE(r.verdict.two_colorable);
    CHECK(r.verdict.certificate_checked);
    CHECK(r.colorings_scanned == std::uint64_t{1} << 16);  // full half space
}

TEST_CASE("witness on a colorable instance") {
    const UniformHypergraph h = fano().without_edge(Hyperedge{0, 1, 2});
    const SearchResult r = find_proper_coloring(h);
    REQUIRE(r.verdict.two_colorable);
    REQUIRE(r.verdict.witness.has_value());
    CHECK(r.verdict.certificate_checked);
    CHECK_FALSE(monochromatic_edge(h, *r.verdict.witness).has_value());

    // canonical witness: the minimum bitmask proper coloring with vertex 0 Blue
    const auto expected = oracle::brute_force_min_even_witness(h);
    REQUIRE(expected.has_value());
    CHECK(r.verdict.witness->bits == *expected);
}

TEST_CASE("half-space search agrees with the full-space oracle") {
    std::mt19937 rng(2024);
    std::vector<UniformHypergraph> corpus = {triangle(), fano(), aht_construction(triangle(), 4),
                                             single_vertex()};
    for (int i = 0; i < 12; ++i) {
        const UniformHypergraph base = (i % 2 == 0) ? fano() : aht_construction(triangle(), 4);
        corpus.push_back(oracle::delete_edges(
            base, oracle::sample_positions(rng, base.edge_count(), 1 + rng() % 3)));
    }
    for (const UniformHypergraph& h : corpus) {
        const auto full = oracle::brute_force_proper_coloring(h);
        const SearchResult half = find_proper_coloring(h);
        CHECK(half.verdict.two_colorable == full.has_value());
        if (half.verdict.two_colorable) {
            CHECK_FALSE(monochromatic_edge(h, *half.verdict.witness).has_value());
        }
    }
}

TEST_CASE("witness is deterministic across thread counts") {
    const UniformHypergraph h = oracle::delete_edges(aht_construction(fano(), 5), {0, 17, 33});
    const SearchResult base = find_proper_coloring(h);
    for (unsigned threads : {2u, 3u, 4u, 8u}) {
        SearchOptions options;
        options.threads = threads;
        const SearchResult r = find_proper_coloring(h, options);
        CHECK(r.verdict.two_colorable == base.verdict.two_colorable);
        if (base.verdict.witness) {
            REQUIRE(r.verdict.witness.has_value());
            CHECK(r.verdict.witness->bits == base.verdict.witness->bits);
        }
    }
}

TEST_CASE("fast mode still returns a valid witness") {
    const UniformHypergraph h = oracle::delete_edges(aht_construction(fano(), 5), {5, 6});
    SearchOptions options;
    options.threads = 4;
    options.fast = true;
    const SearchResult r = find_proper_coloring(h, options);
    if (r.verdict.two_colorable) {
        CHECK_FALSE(monochromatic_edge(h, *r.verdict.witness).has_value());
    }
    CHECK(r.verdict.two_colorable ==
          oracle::brute_force_proper_coloring(h).has_value());
}

TEST_CASE("vertex limit produces guidance, timeout reports TimedOut") {
    UniformHypergraph wide(2, 64);
    wide.add_edge({0, 1});
    CHECK_THROWS_AS(find_proper_coloring(wide), std::domain_error);
    CHECK_THROWS_AS(monochromatic_edge(wide, Coloring{0}), std::domain_error);

    SearchOptions options;
    options.timeout = std::chrono::milliseconds{1};
    const SearchResult r = find_proper_coloring(layered_construction(fano(), 5), options);
    CHECK(r.status == SearchStatus::TimedOut);
}

TEST_CASE("minimality probes") {
    CHECK(minimality_probe(triangle()));
    CHECK(minimality_probe(fano()));

    // informational on larger instances: just check it runs and returns
    const bool aht5 = minimality_probe(aht_construction(fano(), 5));
    (void)aht5;

    // non-minimal example: fano plus one extra edge
    const UniformHypergraph f = fano();
    UniformHypergraph padded(3, 7);
    for (const Hyperedge& e : f.edges()) padded.add_edge(e);
    padded.add_edge({0, 1, 3});
    CHECK_FALSE(minimality_probe(padded));
}

TEST_CASE("lemma1_condition_holds") {
    SUBCASE("all-red has no blue-blue pair") {
        CHECK(lemma1_condition_holds(2, Coloring{0xf}, SwapOrdering{1}));
    }
    SUBCASE("n=2: both pair kinds present violates the condition") {
        // u_1 = v_1 = Red, u_2 = v_2 = Blue; bits are u1 u2 v1 v2
        const Coloring chi{0b0101};
        CHECK_FALSE(lemma1_condition_holds(2, chi, SwapOrdering{1}));
    }
    SUBCASE("n=5 p=2: single monochromatic pair kind passes") {
        // pairs under V^2 are (u_1,v_2), (u_2,v_1), (u_i,v_i) for i >= 3;
        // everything Red means no Blue-Blue pair can exist
        Coloring chi{(std::uint64_t{1} << 10) - 1};
        CHECK(lemma1_condition_holds(5, chi, SwapOrdering{2}));
    }
}

TEST_CASE("verify_lemma1 on small cross families") {
    CHECK(verify_lemma1(3, SwapOrdering{1}));
    CHECK(verify_lemma1(5, SwapOrdering{1}));
    CHECK(verify_lemma1(5, SwapOrdering{3}));
    for (int n = 2; n <= 6; ++n) {
        for (int p = 1; p <= n; ++p) {
            CAPTURE(n);
            CAPTURE(p);
            CHECK(verify_lemma1(n, SwapOrdering{p}));
        }
    }
    CHECK_THROWS_AS(verify_lemma1(13), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma1(4, SwapOrdering{5}), std::invalid_argument);
}

TEST_CASE("verify_lemma1 up to n = 8, first and swapped ordering") {
    CHECK(verify_lemma1(7, SwapOrdering{1}));
    CHECK(verify_lemma1(7, SwapOrdering{4}));
    CHECK(verify_lemma1(8, SwapOrdering{1}));
    CHECK(verify_lemma1(8, SwapOrdering{2}));
}

TEST_CASE("the lemma hypothesis is not vacuous at n = 4") {
    // some coloring with both a Red-Red and a Blue-Blue pair leaves every
    // cross-family edge bichromatic
    std::vector<std::uint64_t> masks;
    for (const Hyperedge& e : cross_family(4, 0, 4)) masks.push_back(oracle::mask_of(e));
    bool found = false;
    for (std::uint64_t chi = 0; chi < (1 << 8) && !found; ++chi) {
        if (lemma1_condition_holds(4, Coloring{chi}, SwapOrdering{1})) continue;
        bool any_mono = false;
        for (std::uint64_t m : masks) any_mono = any_mono || oracle::mono_under(chi, m);
        found = !any_mono;
    }
    CHECK(found);
}

TEST_SUITE_END();

// Slow full-space sweep kept out of the default "verifier" suite; registered
// as its own ctest entry.
TEST_SUITE_BEGIN("verifier-deep");

TEST_CASE("the 31-vertex iterated construction is exhaustively non-2-colorable") {
    const UniformHypergraph h = aht_construction(aht_construction(fano(), 5), 7);
    REQUIRE(h.vertex_count() == 31);
    REQUIRE(h.edge_count() == 421);
    SearchOptions options;
    options.threads = std::max(2u, std::thread::hardware_concurrency());
    const SearchResult r = find_proper_coloring(h, options);
    CHECK(r.status == SearchStatus::Decided);
    CHECK_FALSE(r.verdict.two_colorable);
    CHECK(r.colorings_scanned == std::uint64_t{1} << 30);
}

TEST_SUITE_END();
