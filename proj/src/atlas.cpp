#include "propb/atlas.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "propb/constructions.hpp"

namespace propb {

UniformHypergraph single_vertex() {
    UniformHypergraph h(1, 1);
    h.add_edge({0});
    h.set_description("single-vertex");
    return h;
}

UniformHypergraph triangle() {
    UniformHypergraph h(2, 3);
    h.add_edge({0, 1});
    h.add_edge({0, 2});
    h.add_edge({1, 2});
    h.set_description("triangle");
    return h;
}

UniformHypergraph fano() {
    UniformHypergraph h(3, 7);
    // The standard lines, 1-based {1,2,3},{1,4,5},{1,6,7},{2,4,6},{2,5,7},
    // {3,4,7},{3,5,6}.
    h.add_edge({0, 1, 2});
    h.add_edge({0, 3, 4});
    h.add_edge({0, 5, 6});
    h.add_edge({1, 3, 5});
    h.add_edge({1, 4, 6});
    h.add_edge({2, 3, 6});
    h.add_edge({2, 4, 5});
    h.set_description("fano");
    return h;
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("bound exceeds 64 bits");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("bound exceeds 64 bits");
    return r;
}

std::uint64_t pow2(int e) {
    if (e < 0 || e >= 64) throw std::overflow_error("power of two exceeds 64 bits");
    return std::uint64_t{1} << e;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        unsigned __int128 wide = static_cast<unsigned __int128>(r) *
                                 static_cast<unsigned __int128>(n - k + i);
        wide /= static_cast<unsigned>(i);
        if (wide > std::uint64_t(-1)) throw std::overflow_error("binomial exceeds 64 bits");
        r = static_cast<std::uint64_t>(wide);
    }
    return r;
}

std::uint64_t aht_bound(int n, std::uint64_t core_bound) {
    if (n < 3) throw std::invalid_argument("aht recurrence needs n >= 3");
    std::uint64_t total = checked_add(pow2(n - 1), checked_mul(static_cast<std::uint64_t>(n), core_bound));
    if (n % 2 == 0) total = checked_add(total, binomial(n, n / 2) / 2);
    return total;
}

std::uint64_t swap_bound(int n, std::uint64_t core_bound) {
    if (n < 3) throw std::invalid_argument("swap recurrence needs n >= 3");
    const auto nn = static_cast<std::uint64_t>(n);
    std::uint64_t total = checked_mul(nn + 1, pow2(n - 2));
    if (n % 2 == 1) {
        total = checked_add(total, checked_mul(nn - 1, core_bound));
    } else {
        total = checked_add(total, binomial(n, n / 2) / 2);
        total = checked_add(
            total, checked_mul(nn - 1, checked_add(core_bound, binomial(n - 2, (n - 2) / 2))));
    }
    return total;
}

std::uint64_t layered_bound(int n, std::uint64_t core_bound) {
    if (n < 3) throw std::invalid_argument("layered recurrence needs n >= 3");
    const auto nn = static_cast<std::uint64_t>(n);
    std::uint64_t total = checked_mul(nn + 4, pow2(n - 3));
    total = checked_add(total, checked_mul(nn - 2, core_bound));
    if (n % 2 == 0) {
        total = checked_add(total, checked_mul(nn, binomial(n - 2, (n - 2) / 2) / 2));
        total = checked_add(total, binomial(n, n / 2) / 2);
    }
    return total;
}

std::uint64_t product_bound(std::uint64_t m_a, std::uint64_t m_b, int a) {
    std::uint64_t r = m_a;
    for (int i = 0; i < a; ++i) r = checked_mul(r, m_b);
    return r;
}

std::uint64_t m8_special_bound(std::uint64_t m5, std::uint64_t m3) {
    std::uint64_t total = checked_mul(2, checked_mul(m5, m3));
    total = checked_add(total, checked_mul(8, checked_mul(m3, m3)));
    total = checked_add(total, pow2(7));
    return checked_add(total, binomial(8, 4) / 2);
}

std::string_view rule_name(BoundRule rule) {
    switch (rule) {
        case BoundRule::Exact: return "Exact";
        case BoundRule::ProductAM: return "ProductAM";
        case BoundRule::AHT: return "AHT";
        case BoundRule::Swap: return "Swap";
        case BoundRule::Layered: return "Layered";
        case BoundRule::M8Special: return "M8Special";
    }
    return "Exact";
}

std::string BoundEntry::recurrence() const {
    const std::string core = "m(" + std::to_string(n - 2) + ")";
    switch (rule) {
        case BoundRule::Exact:
            return "exact";
        case BoundRule::ProductAM:
            return "m(" + std::to_string(factor_a) + ")*m(" + std::to_string(factor_b) + ")^" +
                   std::to_string(factor_a);
        case BoundRule::AHT:
            if (n % 2 == 1) {
                return "2^" + std::to_string(n - 1) + " + " + std::to_string(n) + "*" + core;
            }
            return "2^" + std::to_string(n - 1) + " + C(" + std::to_string(n) + "," +
                   std::to_string(n / 2) + ")/2 + " + std::to_string(n) + "*" + core;
        case BoundRule::Swap:
            if (n % 2 == 1) {
                return std::to_string(n + 1) + "*2^" + std::to_string(n - 2) + " + " +
                       std::to_string(n - 1) + "*" + core;
            }
            return std::to_string(n + 1) + "*2^" + std::to_string(n - 2) + " + C(" +
                   std::to_string(n) + "," + std::to_string(n / 2) + ")/2 + " +
                   std::to_string(n - 1) + "*(" + core + " + C(" + std::to_string(n - 2) + "," +
                   std::to_string((n - 2) / 2) + "))";
        case BoundRule::Layered:
            if (n % 2 == 1) {
                return std::to_string(n + 4) + "*2^" + std::to_string(n - 3) + " + " +
                       std::to_string(n - 2) + "*" + core;
            }
            return std::to_string(n + 4) + "*2^" + std::to_string(n - 3) + " + " +
                   std::to_string(n) + "*C(" + std::to_string(n - 2) + "," +
                   std::to_string((n - 2) / 2) + ")/2 + C(" + std::to_string(n) + "," +
                   std::to_string(n / 2) + ")/2 + " + std::to_string(n - 2) + "*" + core;
        case BoundRule::M8Special:
            return "2*m(5)*m(3) + 8*m(3)^2 + 2^7 + C(8,4)/2";
    }
    return "exact";
}

namespace {

constexpr std::uint64_t kExactBounds[] = {0, 1, 3, 7, 23};

BoundEntry baseline_bound_unlocked(int n, std::map<int, BoundEntry>& memo);

// Ordered factor pairs the table draws from (see baseline_bound docs).
std::vector<std::pair<int, int>> table_factor_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    if (n % 2 == 0) {
        if (n / 2 >= 2) pairs.emplace_back(2, n / 2);
    } else {
        for (int a = 2; a < n; ++a) {
            if (n % a == 0) pairs.emplace_back(a, n / a);
        }
    }
    return pairs;
}

BoundEntry baseline_bound_unlocked(int n, std::map<int, BoundEntry>& memo) {
    if (n < 1) throw std::invalid_argument("m(n) is defined for n >= 1");
    if (auto it = memo.find(n); it != memo.end()) return it->second;

    BoundEntry best;
    best.n = n;
    if (n <= 4) {
        best.bound = kExactBounds[n];
        best.rule = BoundRule::Exact;
    } else {
        const BoundEntry core = baseline_bound_unlocked(n - 2, memo);
        best.bound = aht_bound(n, core.bound);
        best.rule = BoundRule::AHT;
        best.core_bound = core.bound;
        for (const auto& [a, b] : table_factor_pairs(n)) {
            const std::uint64_t ma = baseline_bound_unlocked(a, memo).bound;
            const std::uint64_t mb = baseline_bound_unlocked(b, memo).bound;
            const std::uint64_t value = product_bound(ma, mb, a);
            if (value < best.bound) {
                best = BoundEntry{n, value, BoundRule::ProductAM, a, b, 0};
            }
        }
    }
    memo.emplace(n, best);
    return best;
}

std::mutex g_bound_mutex;
std::map<int, BoundEntry> g_baseline_memo;
std::map<int, BoundEntry> g_best_memo;

BoundEntry best_bound_unlocked(int n) {
    if (n < 1) throw std::invalid_argument("m(n) is defined for n >= 1");
    if (auto it = g_best_memo.find(n); it != g_best_memo.end()) return it->second;

    BoundEntry best = baseline_bound_unlocked(n, g_baseline_memo);
    if (n >= 3) {
        const BoundEntry core = best_bound_unlocked(n - 2);
        if (const std::uint64_t v = swap_bound(n, core.bound); v < best.bound) {
            best = BoundEntry{n, v, BoundRule::Swap, 0, 0, core.bound};
        }
        if (const std::uint64_t v = layered_bound(n, core.bound); v < best.bound) {
            best = BoundEntry{n, v, BoundRule::Layered, 0, 0, core.bound};
        }
    }
    if (n == 8) {
        const std::uint64_t m5 = best_bound_unlocked(5).bound;
        const std::uint64_t m3 = best_bound_unlocked(3).bound;
        if (const std::uint64_t v = m8_special_bound(m5, m3); v < best.bound) {
            best = BoundEntry{n, v, BoundRule::M8Special, 0, 0, 0};
        }
    }
    g_best_memo.emplace(n, best);
    return best;
}

}  // namespace

BoundEntry baseline_bound(int n) {
    std::lock_guard<std::mutex> lock(g_bound_mutex);
    return baseline_bound_unlocked(n, g_baseline_memo);
}

BoundEntry best_bound(int n) {
    std::lock_guard<std::mutex> lock(g_bound_mutex);
    return best_bound_unlocked(n);
}

UniformHypergraph best_construction(int n, int cap) {
    if (n < 1) throw std::invalid_argument("m(n) is defined for n >= 1");
    if (n > cap) {
        throw std::domain_error("best_construction(" + std::to_string(n) +
                                ") exceeds the configured cap of " + std::to_string(cap));
    }
    switch (n) {
        case 1: return single_vertex();
        case 2: return triangle();
        case 3: return fano();
        case 4: return aht_construction(triangle(), 4);  // 23 edges, matching the exact value
        default: break;
    }
    const BoundEntry entry = best_bound(n);
    switch (entry.rule) {
        case BoundRule::ProductAM:
            return product_construction(best_construction(entry.factor_a, cap),
                                        best_construction(entry.factor_b, cap));
        case BoundRule::AHT:
            return aht_construction(best_construction(n - 2, cap), n);
        case BoundRule::Swap:
            return swap_construction(best_construction(n - 2, cap), n);
        case BoundRule::Layered:
            return layered_construction(best_construction(n - 2, cap), n);
        case BoundRule::M8Special:
            return m8_construction();
        case BoundRule::Exact:
            break;
    }
    throw std::logic_error("no construction recipe for n = " + std::to_string(n));
}

}  // namespace propb
