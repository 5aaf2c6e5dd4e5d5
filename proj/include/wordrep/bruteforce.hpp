#pragma once

#include <cstdint>
#include <cstring>
#include <optional>
#include <set>
#include <span>
#include <vector>

// Definition-level reference implementations: direct scans with no hashing,
// no border arrays and no suffix structures. They exist to cross-check the
// optimized paths and are deliberately independent of them.

namespace wordrep::bruteforce {

/// r(n) on text by double scan: smallest 1-based m such that the length-n
/// factor ending at m occurs starting at some i <= m-n.
inline std::optional<std::int64_t> naive_r(std::span<const std::uint8_t> text, std::size_t n) {
    if (n == 0 || n >= text.size()) return std::nullopt;
    for (std::size_t m = n + 1; m <= text.size(); ++m) {
        const std::uint8_t* tail = text.data() + (m - n);
        for (std::size_t i = 0; i + n < m; ++i)
            if (std::memcmp(text.data() + i, tail, n) == 0) return (std::int64_t)m;
    }
    return std::nullopt;
}

/// p(n) on text by collecting factors into an ordered set.
inline std::int64_t naive_p(std::span<const std::uint8_t> text, std::size_t n) {
    std::set<std::vector<std::uint8_t>> factors;
    for (std::size_t i = 0; i + n <= text.size(); ++i)
        factors.emplace(text.begin() + i, text.begin() + i + n);
    return (std::int64_t)factors.size();
}

/// Lambda(U) straight from the definition.
inline std::vector<std::size_t> naive_periods(std::span<const std::uint8_t> u) {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k < u.size(); ++k) {
        bool ok = true;
        for (std::size_t i = 0; i + k < u.size(); ++i)
            if (u[i] != u[i + k]) { ok = false; break; }
        if (ok) out.push_back(k);
    }
    return out;
}

}  // namespace wordrep::bruteforce
