#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wordrep/detail/rolling_hash.hpp"
#include "wordrep/detail/suffix.hpp"
#include "wordrep/periods.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// r(n, x) = length of the smallest prefix of x containing two (possibly
/// overlapping) occurrences of some word of length n. Entries with no
/// repetition inside x_1^L carry exceeds-horizon status, never a sentinel.
struct RepetitionProfile {
    std::string word_spec;
    std::size_t prefix_len = 0;
    std::vector<std::int64_t> values;  // values[n-1]; meaningful only when exact
    std::vector<bool> is_exact;

    std::size_t max_n() const { return values.size(); }
    bool exact(std::size_t n) const {
        if (n < 1 || n > values.size())
            throw std::out_of_range("repetition profile: n out of range");
        return is_exact[n - 1];
    }
    std::int64_t r(std::size_t n) const {
        if (!exact(n)) throw std::logic_error("r(n) exceeds horizon");
        return values[n - 1];
    }
    std::optional<std::int64_t> r_opt(std::size_t n) const {
        if (n < 1 || n > values.size() || !is_exact[n - 1]) return std::nullopt;
        return values[n - 1];
    }
};

/// Full profile in O(L log L + N): r(n) = n - 1 + min{ j >= 2 : lpf[j] >= n }
/// (1-based j), where lpf[j] is the longest factor starting at j that also
/// occurs starting earlier, overlaps allowed.
inline RepetitionProfile repetition_profile(Word& x, std::size_t N, std::size_t L) {
    if (N < 1 || L < 2) throw std::invalid_argument("repetition_profile: need N >= 1, L >= 2");
    auto text = x.prefix(L);
    auto lpf = detail::lpf_array(text);

    constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> first(N + 2, kNone);  // first[n] = min 0-based j with lpf[j] == n (capped)
    for (std::size_t j = 1; j < L; ++j) {
        std::size_t len = std::min<std::size_t>((std::size_t)lpf[j], N);
        if (len >= 1 && (std::int64_t)j < first[len]) first[len] = (std::int64_t)j;
    }
    for (std::size_t n = N; n >= 1; --n)
        first[n] = std::min(first[n], first[n + 1]);

    RepetitionProfile out;
    out.word_spec = x.spec();
    out.prefix_len = L;
    out.values.assign(N, 0);
    out.is_exact.assign(N, false);
    for (std::size_t n = 1; n <= N; ++n) {
        if (first[n] != kNone) {
            out.values[n - 1] = first[n] + (std::int64_t)n;  // m = (j+1) + n - 1
            out.is_exact[n - 1] = true;
        }
    }
    return out;
}

/// Per-n incremental scan, expected O(L) per n: rolling-hash buckets with
/// direct verification, stopping at the first duplicated n-window.
inline RepetitionProfile repetition_profile_hashed(Word& x, std::size_t N, std::size_t L) {
    if (N < 1 || L < 2) throw std::invalid_argument("repetition_profile: need N >= 1, L >= 2");
    auto text = x.prefix(L);
    RepetitionProfile out;
    out.word_spec = x.spec();
    out.prefix_len = L;
    out.values.assign(N, 0);
    out.is_exact.assign(N, false);
    for (std::size_t n = 1; n <= N && n < L; ++n) {
        detail::RollingHash rh(n);
        std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> groups;
        std::uint64_t h = rh.init(text);
        for (std::size_t j = 0; ; ++j) {
            auto& reps = groups[h];
            bool dup = false;
            for (std::uint32_t i : reps)
                if (detail::window_equal(text, i, j, n)) { dup = true; break; }
            if (dup) {
                out.values[n - 1] = (std::int64_t)(j + n);
                out.is_exact[n - 1] = true;
                break;
            }
            reps.push_back((std::uint32_t)j);
            if (j + n >= L) break;
            h = rh.roll(h, text[j], text[j + n]);
        }
    }
    return out;
}

namespace detail {

/// 1-based end position of the last occurrence of `pattern` that ends strictly
/// before position `limit` (1-based), or 0 if none. KMP scan.
inline std::size_t last_occurrence_end_before(std::span<const std::uint8_t> text,
                                              std::span<const std::uint8_t> pattern,
                                              std::size_t limit) {
    auto fail = border_array(pattern);
    std::size_t best = 0, q = 0;
    std::size_t scan = std::min<std::size_t>(text.size(), limit - 1);
    for (std::size_t i = 0; i < scan; ++i) {
        while (q > 0 && text[i] != pattern[q]) q = fail[q - 1];
        if (text[i] == pattern[q]) ++q;
        if (q == pattern.size()) {
            best = i + 1;  // 1-based end
            q = fail[q - 1];
        }
    }
    return best;
}

}  // namespace detail

enum class JumpCase { I, II, III, IV, Degenerate };

inline const char* to_string(JumpCase c) {
    switch (c) {
        case JumpCase::I: return "i";
        case JumpCase::II: return "ii";
        case JumpCase::III: return "iii";
        case JumpCase::IV: return "iv";
        default: return "degenerate";
    }
}

/// One jump n with r(n+1) > r(n) + 1, together with the occurrence shifts and
/// the overlap word V_n = x_{r(n+1)-n}^{r(n)} (empty when v_n < 1).
struct JumpRecord {
    std::int64_t n = 0;
    std::int64_t r_n = 0;
    std::int64_t r_n_plus_1 = 0;
    std::int64_t lambda = 0;        // distance to nearest earlier occurrence at length n
    std::int64_t lambda_prime = 0;  // same at length n+1
    std::int64_t v_n = 0;           // r(n) - r(n+1) + n + 1; may be <= 0 on finite words
    std::vector<std::uint8_t> overlap;  // V_n when v_n >= 1
    JumpCase label = JumpCase::Degenerate;
};

namespace detail {

inline JumpCase classify(std::int64_t r_n, std::int64_t r_n1, std::int64_t lam,
                         std::int64_t lam1) {
    if (lam < lam1) return r_n1 - lam1 <= r_n - lam + 1 ? JumpCase::I : JumpCase::II;
    if (lam > lam1) return r_n1 - lam1 < r_n + 1 ? JumpCase::III : JumpCase::IV;
    return JumpCase::Degenerate;  // lambda == lambda' can occur when v_n < 1
}

}  // namespace detail

/// All jumps of the profile whose r(n) and r(n+1) are both exact.
inline std::vector<JumpRecord> jumps(Word& x, const RepetitionProfile& profile) {
    std::vector<JumpRecord> out;
    auto text = x.prefix(profile.prefix_len);
    for (std::size_t n = 1; n + 1 <= profile.max_n(); ++n) {
        if (!profile.exact(n) || !profile.exact(n + 1)) continue;
        std::int64_t r = profile.r(n), r1 = profile.r(n + 1);
        if (r1 <= r + 1) continue;

        JumpRecord j;
        j.n = (std::int64_t)n;
        j.r_n = r;
        j.r_n_plus_1 = r1;
        auto w = text.subspan((std::size_t)(r - (std::int64_t)n), n);
        std::size_t e = detail::last_occurrence_end_before(text, w, (std::size_t)r);
        if (e == 0) throw std::logic_error("jump: no earlier occurrence at length n");
        j.lambda = r - (std::int64_t)e;
        auto w1 = text.subspan((std::size_t)(r1 - (std::int64_t)n - 1), n + 1);
        std::size_t e1 = detail::last_occurrence_end_before(text, w1, (std::size_t)r1);
        if (e1 == 0) throw std::logic_error("jump: no earlier occurrence at length n+1");
        j.lambda_prime = r1 - (std::int64_t)e1;
        j.v_n = r - r1 + (std::int64_t)n + 1;
        if (j.v_n >= 1)
            j.overlap.assign(text.begin() + (r1 - (std::int64_t)n - 1), text.begin() + r);
        j.label = detail::classify(r, r1, j.lambda, j.lambda_prime);
        out.push_back(std::move(j));
    }
    return out;
}

/// One audited inequality; `applicable` is false when the quantities involved
/// are undefined at this jump (empty overlap, r beyond horizon, ...).
struct AuditCheck {
    std::string id;
    bool applicable = false;
    bool pass = true;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

struct CaseAudit {
    JumpRecord jump;
    bool overlap_nonempty = false;  // v_n >= 1; recorded, not assumed
    std::vector<AuditCheck> checks;
    bool pass = true;  // every applicable check passed
};

/// Audits the proved jump inequalities. Strict inequalities are encoded as
/// lhs >= rhs with rhs already shifted by one.
inline CaseAudit classify_jump(Word& x, const RepetitionProfile& profile,
                               const JumpRecord& jump) {
    CaseAudit audit;
    audit.jump = jump;
    audit.overlap_nonempty = jump.v_n >= 1;

    const std::int64_t n = jump.n, r = jump.r_n, r1 = jump.r_n_plus_1;
    const std::int64_t lam = jump.lambda, lam1 = jump.lambda_prime, v = jump.v_n;
    auto r_of = [&](std::int64_t k) -> std::optional<std::int64_t> {
        if (k < 1) return std::nullopt;
        return profile.r_opt((std::size_t)k);
    };
    auto add = [&](std::string id, bool applicable, std::int64_t lhs, std::int64_t rhs) {
        AuditCheck c{std::move(id), applicable, !applicable || lhs >= rhs, lhs, rhs};
        if (applicable && !c.pass) audit.pass = false;
        audit.checks.push_back(std::move(c));
    };

    // v_n < n holds at every jump by arithmetic; v_n >= 1 is a diagnostic.
    add("v_lt_n", true, n - 1, v);
    add("lambda_ne_lambda_prime", audit.overlap_nonempty,
        lam == lam1 ? 0 : 1, 1);

    if (audit.overlap_nonempty) {
        // the three readings of V_n must coincide
        auto text = x.prefix((std::size_t)r);
        bool eq = true;
        for (std::int64_t d : {lam, lam1}) {
            std::int64_t start = r1 - n - 1 - d;  // 0-based
            if (start < 0) { eq = false; break; }
            for (std::int64_t i = 0; i < v; ++i)
                if (text[(std::size_t)(start + i)] != jump.overlap[(std::size_t)i]) {
                    eq = false;
                    break;
                }
        }
        add("overlap_readings_agree", true, eq ? 1 : 0, 1);
    }

    auto rv = r_of(v);
    if (lam < lam1)
        add("ineq1_case12", rv.has_value(), r - lam, rv.value_or(0));
    else if (lam > lam1)
        add("ineq1_case34", rv.has_value(), r - lam1, rv.value_or(0));

    switch (jump.label) {
        case JumpCase::I: {
            add("ineq3_case1", true, lam1, n + 2);  // lambda' > n+1
            auto rvl = r_of(v - lam);
            add("ineq2_case12", v > lam && rvl.has_value(), r - lam1, rvl.value_or(0));
            break;
        }
        case JumpCase::II:
            add("ineq3_case234", true, lam, v + 2);  // lambda > v_n+1
            break;
        case JumpCase::III: {
            add("ineq3_case234", true, lam, v + 2);
            auto rnl = r_of(n - lam1);
            add("ineq2_case3", rnl.has_value(), r - lam, rnl.value_or(0));
            break;
        }
        case JumpCase::IV:
            add("ineq3_case234", true, lam, v + 2);
            add("ineq2_case4", rv.has_value(), r - lam, rv.value_or(0));
            break;
        case JumpCase::Degenerate:
            break;
    }
    return audit;
}

/// Per-jump disjointness verdict: true when the second occurrence windows at
/// lengths n_j and n_j+1 do not overlap, i.e. r(n_j+1) - (n_j+1) >= r(n_j).
struct DisjointnessVerdict {
    std::int64_t n = 0;
    bool disjoint = false;
};

inline std::vector<DisjointnessVerdict> disjointness_scan(const std::vector<JumpRecord>& js) {
    std::vector<DisjointnessVerdict> out;
    out.reserve(js.size());
    for (const auto& j : js)
        out.push_back({j.n, j.r_n_plus_1 - (j.n + 1) >= j.r_n});
    return out;
}

}  // namespace wordrep
