#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "wordrep/detail/rolling_hash.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Number of distinct length-n factors of the materialized prefix x_1^L, for
/// n = 1..N. Exact on the prefix; a lower bound for the complexity of the
/// infinite word (later factors may first occur beyond L).
struct ComplexityProfile {
    std::string word_spec;
    std::size_t prefix_len = 0;
    std::vector<std::int64_t> values;  // values[n-1] = p(n)

    std::int64_t p(std::size_t n) const {
        if (n < 1 || n > values.size())
            throw std::out_of_range("complexity profile: n out of range");
        return values[n - 1];
    }
    std::size_t max_n() const { return values.size(); }
};

/// Exact distinct-factor count for a single n: rolling-hash buckets, colliding
/// candidates verified by direct comparison.
inline std::int64_t count_distinct_factors(std::span<const std::uint8_t> text, std::size_t n) {
    if (n == 0 || n > text.size())
        throw std::invalid_argument("count_distinct_factors: need 1 <= n <= |text|");
    detail::RollingHash rh(n);
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> groups;
    groups.reserve(text.size() - n + 2);
    std::uint64_t h = rh.init(text);
    std::int64_t distinct = 0;
    for (std::size_t j = 0; ; ++j) {
        auto& reps = groups[h];
        bool known = false;
        for (std::uint32_t i : reps)
            if (detail::window_equal(text, i, j, n)) { known = true; break; }
        if (!known) {
            reps.push_back((std::uint32_t)j);
            ++distinct;
        }
        if (j + n >= text.size()) break;
        h = rh.roll(h, text[j], text[j + n]);
    }
    return distinct;
}

inline ComplexityProfile complexity_profile(Word& x, std::size_t N, std::size_t L) {
    if (N < 1 || L < N) throw std::invalid_argument("complexity_profile: need 1 <= N <= L");
    auto text = x.prefix(L);
    ComplexityProfile out;
    out.word_spec = x.spec();
    out.prefix_len = L;
    out.values.reserve(N);
    for (std::size_t n = 1; n <= N; ++n)
        out.values.push_back(count_distinct_factors(text, n));
    return out;
}

enum class PeriodicityVerdict { PeriodicConsistent, AperiodicWitnessed };

/// Plateau test: p(N) = p(N-1) is consistent with ultimate periodicity; a
/// strict increase at the top witnesses aperiodicity on this prefix (for the
/// infinite word a plateau would certify periodicity, on a prefix it is only
/// evidence).
inline PeriodicityVerdict is_ultimately_periodic_on_prefix(const ComplexityProfile& profile) {
    std::size_t N = profile.max_n();
    if (N < 2)
        throw std::invalid_argument("periodicity verdict needs a profile with N >= 2");
    return profile.p(N) == profile.p(N - 1) ? PeriodicityVerdict::PeriodicConsistent
                                            : PeriodicityVerdict::AperiodicWitnessed;
}

}  // namespace wordrep
