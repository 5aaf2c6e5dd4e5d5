#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

/// The set Lambda(U) of periods of a finite word U: all k with 1 <= k < |U|
/// and u_i = u_{i+k} for every valid i.
struct PeriodSet {
    std::size_t word_length = 0;
    std::vector<std::size_t> periods;  // sorted ascending

    bool contains(std::size_t k) const {
        return std::binary_search(periods.begin(), periods.end(), k);
    }
    std::optional<std::size_t> minimal() const {
        if (periods.empty()) return std::nullopt;
        return periods.front();
    }
};

/// KMP failure function: border[i] = length of the longest proper border of
/// the prefix of length i+1.
inline std::vector<std::size_t> border_array(std::span<const std::uint8_t> u) {
    std::vector<std::size_t> border(u.size(), 0);
    for (std::size_t i = 1; i < u.size(); ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && u[i] != u[b]) b = border[b - 1];
        if (u[i] == u[b]) ++b;
        border[i] = b;
    }
    return border;
}

/// Lambda(U) from the full border chain: k is a period iff U has a border of
/// length |U|-k. The shift k = |U| itself is excluded by definition.
inline PeriodSet period_set(std::span<const std::uint8_t> u) {
    if (u.empty()) throw std::invalid_argument("period_set: empty word");
    auto border = border_array(u);
    PeriodSet out;
    out.word_length = u.size();
    for (std::size_t b = border.back(); b > 0; b = border[b - 1])
        out.periods.push_back(u.size() - b);  // b decreasing, so k ascending
    return out;
}

enum class FineWilfVerdict { Forced, NotApplicable };

/// Fine and Wilf: if h, k are periods of U and |U| >= h + k - gcd(h,k), then
/// gcd(h,k) is a period of U as well. Returns Forced when the length
/// hypothesis holds (and asserts the conclusion), NotApplicable otherwise.
inline FineWilfVerdict fine_wilf_check(std::span<const std::uint8_t> u, std::size_t h,
                                       std::size_t k) {
    PeriodSet lambda = period_set(u);
    if (!lambda.contains(h) || !lambda.contains(k))
        throw std::invalid_argument("fine_wilf_check: h and k must be periods of U");
    std::size_t g = std::gcd(h, k);
    if (u.size() < h + k - g) return FineWilfVerdict::NotApplicable;
    if (g < u.size() && !lambda.contains(g))
        throw std::logic_error("Fine-Wilf conclusion violated (implementation bug)");
    return FineWilfVerdict::Forced;
}

/// If lambda is a period of the factor x_n^m (1-based, inclusive), then
/// r(m-n+1-lambda, x) <= m. Returns the bound m; the caller cross-checks it
/// against a repetition profile.
inline std::size_t lemma_lll_bound(Word& x, std::size_t n, std::size_t m, std::size_t lambda) {
    if (n < 1 || m <= n) throw std::invalid_argument("lemma_lll_bound: need m > n >= 1");
    if (m - n + 1 <= lambda)
        throw std::invalid_argument("lemma_lll_bound: need m-n+1-lambda >= 1");
    auto text = x.prefix(m);
    auto factor = text.subspan(n - 1, m - n + 1);
    if (!period_set(factor).contains(lambda))
        throw std::invalid_argument("lemma_lll_bound: lambda is not a period of x_n^m");
    return m;
}

}  // namespace wordrep
