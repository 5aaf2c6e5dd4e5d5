#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace wordrep::detail {

/// Suffix array by prefix doubling with radix passes (O(n log n)).
inline std::vector<std::int32_t> suffix_array(std::span<const std::uint8_t> s) {
    const std::int32_t n = (std::int32_t)s.size();
    std::vector<std::int32_t> sa(n), rank(n), tmp(n), cnt;
    for (std::int32_t i = 0; i < n; ++i) rank[i] = s[i];
    {
        // initial counting sort by first symbol
        cnt.assign(257, 0);
        for (std::int32_t i = 0; i < n; ++i) ++cnt[rank[i]];
        std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
        for (std::int32_t i = n - 1; i >= 0; --i) sa[--cnt[rank[i]]] = i;
    }
    for (std::int32_t k = 1; ; k <<= 1) {
        std::int32_t classes = n == 0 ? 0 : 1 + *std::max_element(rank.begin(), rank.end());
        // sort by (rank[i], rank[i+k]) with two counting passes
        std::vector<std::int32_t> sa2(n);
        {
            // pass 1: by second key. Suffixes with i+k >= n come first.
            std::int32_t idx = 0;
            for (std::int32_t i = n - k; i < n; ++i) sa2[idx++] = i;
            for (std::int32_t i = 0; i < n; ++i)
                if (sa[i] >= k) sa2[idx++] = sa[i] - k;
        }
        {
            // pass 2: stable counting sort by first key
            cnt.assign(classes, 0);
            for (std::int32_t i = 0; i < n; ++i) ++cnt[rank[i]];
            std::partial_sum(cnt.begin(), cnt.end(), cnt.begin());
            for (std::int32_t i = n - 1; i >= 0; --i) sa[--cnt[rank[sa2[i]]]] = sa2[i];
        }
        tmp[sa[0]] = 0;
        for (std::int32_t i = 1; i < n; ++i) {
            std::int32_t a = sa[i - 1], b = sa[i];
            bool same = rank[a] == rank[b] &&
                        ((a + k < n && b + k < n) ? rank[a + k] == rank[b + k]
                                                  : (a + k >= n && b + k >= n));
            tmp[b] = tmp[a] + (same ? 0 : 1);
        }
        rank = tmp;
        if (n == 0 || rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

/// Kasai's LCP: lcp[i] = lcp(suffix sa[i-1], suffix sa[i]), lcp[0] = 0.
inline std::vector<std::int32_t> lcp_array(std::span<const std::uint8_t> s,
                                           const std::vector<std::int32_t>& sa) {
    const std::int32_t n = (std::int32_t)s.size();
    std::vector<std::int32_t> rank(n), lcp(n, 0);
    for (std::int32_t i = 0; i < n; ++i) rank[sa[i]] = i;
    std::int32_t h = 0;
    for (std::int32_t i = 0; i < n; ++i) {
        if (rank[i] == 0) { h = 0; continue; }
        std::int32_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank[i]] = h;
        if (h) --h;
    }
    return lcp;
}

/// Longest previous factor with overlaps allowed:
/// lpf[j] = max over i < j of lcp(suffix i, suffix j), lpf[0] = 0.
/// Computed by deleting positions from a doubly linked list over SA order,
/// largest text position first (Crochemore-Ilie).
inline std::vector<std::int32_t> lpf_array(std::span<const std::uint8_t> s) {
    const std::int32_t n = (std::int32_t)s.size();
    std::vector<std::int32_t> lpf(n, 0);
    if (n == 0) return lpf;
    auto sa = suffix_array(s);
    auto lcp = lcp_array(s, sa);
    std::vector<std::int32_t> rank(n), prev(n), next(n);
    for (std::int32_t i = 0; i < n; ++i) rank[sa[i]] = i;
    for (std::int32_t i = 0; i < n; ++i) {
        prev[i] = i - 1;
        next[i] = i + 1;  // n means end
    }
    for (std::int32_t j = n - 1; j >= 1; --j) {
        std::int32_t i = rank[j];
        std::int32_t with_prev = prev[i] >= 0 ? lcp[i] : 0;
        std::int32_t with_next = next[i] < n ? lcp[next[i]] : 0;
        lpf[j] = std::max(with_prev, with_next);
        // unlink i, tightening the lcp between its neighbours
        if (next[i] < n) {
            lcp[next[i]] = std::min(with_prev, with_next);
            prev[next[i]] = prev[i];
        }
        if (prev[i] >= 0) next[prev[i]] = next[i];
    }
    return lpf;
}

}  // namespace wordrep::detail
