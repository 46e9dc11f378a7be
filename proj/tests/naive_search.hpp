#pragma once

// Test-only oracle: decides existence of an (n, q^k, n-k+1) code by
// depth-first extension over ALL codeword subsets in lexicographic
// order, with no symmetry reduction and no systematic-form assumption.
// Exponential; usable for q = 2, n <= 5 scale only. Kept independent of
// the production search so the two can cross-check each other.

#include <cstdint>
#include <vector>

namespace mdscode::testing {

inline unsigned naive_distance(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

inline bool naive_extend(const std::vector<std::vector<unsigned>>& universe, unsigned d,
                         std::uint64_t target, std::vector<std::size_t>& chosen, std::size_t start) {
    if (chosen.size() == target) return true;
    for (std::size_t w = start; w < universe.size(); ++w) {
        bool ok = true;
        for (std::size_t c : chosen) {
            if (naive_distance(universe[w], universe[c]) < d) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(w);
        if (naive_extend(universe, d, target, chosen, w + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

inline bool naive_exists(unsigned n, unsigned q, unsigned k) {
    const unsigned d = n - k + 1;
    std::uint64_t total = 1, target = 1;
    for (unsigned i = 0; i < n; ++i) total *= q;
    for (unsigned i = 0; i < k; ++i) target *= q;
    std::vector<std::vector<unsigned>> universe;
    universe.reserve(total);
    std::vector<unsigned> word(n, 0);
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t x = v;
        for (unsigned i = n; i-- > 0;) {
            word[i] = static_cast<unsigned>(x % q);
            x /= q;
        }
        universe.push_back(word);
    }
    std::vector<std::size_t> chosen;
    return naive_extend(universe, d, target, chosen, 0);
}

} // namespace mdscode::testing
