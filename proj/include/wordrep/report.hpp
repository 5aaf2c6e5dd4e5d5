#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "wordrep/complexity.hpp"
#include "wordrep/exponents.hpp"
#include "wordrep/repetition.hpp"

namespace wordrep {

// CSV uses comma separation, a header row, and LF line endings.

inline void write_profile_csv(std::ostream& os, const ComplexityProfile& p,
                              const RepetitionProfile& r) {
    os << "n,p_n,r_n,status\n";
    std::size_t N = std::min(p.max_n(), r.max_n());
    for (std::size_t n = 1; n <= N; ++n) {
        os << n << ',' << p.p(n) << ',';
        if (r.exact(n))
            os << r.r(n) << ",exact\n";
        else
            os << ",exceeds-horizon\n";
    }
}

inline void write_jumps_csv(std::ostream& os, Word& x, const RepetitionProfile& profile,
                            const std::vector<JumpRecord>& js) {
    os << "n,r_n,r_n1,lambda,lambda_prime,v_n,case,audit_pass\n";
    for (const auto& j : js) {
        CaseAudit audit = classify_jump(x, profile, j);
        os << j.n << ',' << j.r_n << ',' << j.r_n_plus_1 << ',' << j.lambda << ','
           << j.lambda_prime << ',' << j.v_n << ',' << to_string(j.label) << ','
           << (audit.pass ? "true" : "false") << '\n';
    }
}

inline void write_convergence_csv(std::ostream& os, const ExponentEstimate& est) {
    os << "n_j,rep_ratio,Rep_ratio\n";
    for (const auto& pt : est.sequence)
        os << pt.n << ',' << pt.rep_ratio << ',' << pt.Rep_ratio << '\n';
}

inline nlohmann::json to_json(const BoundReport& b) {
    return {{"id", b.id},      {"input", b.input},   {"lhs", b.lhs},
            {"rhs", b.rhs},    {"margin", b.margin}, {"pass", b.pass},
            {"heuristic", b.heuristic}};
}

inline nlohmann::json to_json(const ApproximationFind& f) {
    nlohmann::json j{{"s", f.s},
                     {"lambda", f.lambda},
                     {"q_magnitude", f.q_magnitude},
                     {"status", f.open ? "open" : "closed"}};
    if (!f.open) {
        j["m"] = f.m;
        j["exponent_est"] = f.exponent_est;
    }
    return j;
}

inline nlohmann::json exponents_report(const std::string& word_spec, std::size_t horizon,
                                       const ExponentEstimate& est,
                                       const std::vector<BoundReport>& bounds,
                                       const std::vector<ApproximationFind>& finds) {
    nlohmann::json j;
    j["word_spec"] = word_spec;
    j["horizon"] = horizon;
    j["rep_est"] = est.rep_est;
    j["Rep_est"] = est.Rep_est;
    j["beta_est"] = est.beta_est;
    j["window"] = {{"n_lo", est.n_lo}, {"n_hi", est.n_hi}, {"samples", est.sample_count}};
    j["bounds"] = nlohmann::json::array();
    for (const auto& b : bounds) j["bounds"].push_back(to_json(b));
    j["approximations"] = nlohmann::json::array();
    for (const auto& f : finds) j["approximations"].push_back(to_json(f));
    return j;
}

}  // namespace wordrep
