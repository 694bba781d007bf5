#pragma once

#include <cstdint>
#include <string>

#include "propb/core.hpp"

namespace propb {

// ---- base hypergraphs -------------------------------------------------

/// 1-uniform, one vertex, one edge. m(1) = 1.
UniformHypergraph single_vertex();

/// 2-uniform K_3. m(2) = 3.
UniformHypergraph triangle();

/// The Fano plane: 3-uniform, 7 points, 7 lines. m(3) = 7.
UniformHypergraph fano();

// ---- recurrence values -------------------------------------------------

/// Exact C(n, k); throws std::overflow_error beyond 64 bits.
std::uint64_t binomial(int n, int k);

/// 2^{n-1} + n*m for odd n; + C(n, n/2)/2 extra for even n. Needs n >= 3.
std::uint64_t aht_bound(int n, std::uint64_t core_bound);

/// (n+1)*2^{n-2} + (n-1)*m for odd n;
/// (n+1)*2^{n-2} + C(n,n/2)/2 + (n-1)*(m + C(n-2,(n-2)/2)) for even n.
std::uint64_t swap_bound(int n, std::uint64_t core_bound);

/// (n+4)*2^{n-3} + (n-2)*m for odd n;
/// (n+4)*2^{n-3} + n*C(n-2,(n-2)/2)/2 + C(n,n/2)/2 + (n-2)*m for even n.
std::uint64_t layered_bound(int n, std::uint64_t core_bound);

/// m(a) * m(b)^a for n = a*b.
std::uint64_t product_bound(std::uint64_t m_a, std::uint64_t m_b, int a);

/// 2*m(5)*m(3) + 8*m(3)^2 + 2^7 + C(8,4)/2.
std::uint64_t m8_special_bound(std::uint64_t m5, std::uint64_t m3);

// ---- best-known bound table ---------------------------------------------

enum class BoundRule { Exact, ProductAM, AHT, Swap, Layered, M8Special };

std::string_view rule_name(BoundRule rule);

struct BoundEntry {
    int n = 0;
    std::uint64_t bound = 0;
    BoundRule rule = BoundRule::Exact;
    int factor_a = 0;               // ProductAM: n = a*b
    int factor_b = 0;
    std::uint64_t core_bound = 0;   // the m value(s) the recurrence was fed

    /// Human recurrence with concrete coefficients, e.g. "15*2^8 + 9*m(9)".
    std::string recurrence() const;
};

/// Best bound using the product and AHT recurrences only (the pre-swap
/// table). Exact for n <= 4 (1, 3, 7, 23).
///
/// The tabulated bounds apply the product rule to even n only in its halving
/// form m(2)*m(n/2)^2; for odd composite n every ordered factorization is
/// taken. Other pairs can undercut the tabulated values (23*7^4 < 3*147^2 at
/// n = 12) but are excluded so the table reproduces the accepted bounds.
BoundEntry baseline_bound(int n);

/// Best known bound: baseline improved by the swap, layered and special
/// 8-uniform constructions, with cores drawn from this same table.
BoundEntry best_bound(int n);

inline constexpr int kDefaultConstructionCap = 13;

/// Materializes a hypergraph achieving best_bound(n). Edge counts grow with
/// 2^n, so n is capped (default 13). Throws std::domain_error above the cap.
UniformHypergraph best_construction(int n, int cap = kDefaultConstructionCap);

}  // namespace propb
