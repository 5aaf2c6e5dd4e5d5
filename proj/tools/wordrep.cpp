#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordrep/bruteforce.hpp"
#include "wordrep/complexity.hpp"
#include "wordrep/exponents.hpp"
#include "wordrep/periods.hpp"
#include "wordrep/report.hpp"
#include "wordrep/repetition.hpp"
#include "wordrep/word.hpp"

namespace {

// Exit-code contract: 0 success, 1 usage/parse error, 2 property violation,
// 3 I/O error.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;
constexpr int kIo = 3;

std::size_t horizon_from_env() {
    if (const char* env = std::getenv("WORDREP_HORIZON")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return (std::size_t)v;
        throw std::invalid_argument("WORDREP_HORIZON must be a positive integer");
    }
    return wordrep::kDefaultHorizon;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw wordrep::IoError("cannot open output file: " + path);
    return file;
}

int run_profile(const std::string& spec, std::size_t N, std::size_t L,
                const std::string& format, const std::string& out,
                const std::string& jumps_out) {
    std::size_t horizon = std::max(L, horizon_from_env());
    wordrep::Word word = wordrep::parse_word_spec(spec, horizon);
    L = std::min(L, word.horizon());
    N = std::min(N, L - 1);
    auto complexity = wordrep::complexity_profile(word, N, L);
    auto repetition = wordrep::repetition_profile(word, N, L);

    std::ofstream file;
    std::ostream& os = open_output(file, out);
    if (format == "csv") {
        wordrep::write_profile_csv(os, complexity, repetition);
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t n = 1; n <= N; ++n) {
            nlohmann::json row{{"n", n}, {"p_n", complexity.p(n)}};
            if (repetition.exact(n)) {
                row["r_n"] = repetition.r(n);
                row["status"] = "exact";
            } else {
                row["status"] = "exceeds-horizon";
            }
            rows.push_back(row);
        }
        os << nlohmann::json{{"word_spec", word.spec()}, {"prefix_len", L}, {"rows", rows}}.dump(2)
           << '\n';
    }
    if (!os) throw wordrep::IoError("write failed: " + out);

    if (!jumps_out.empty()) {
        std::ofstream jf(jumps_out, std::ios::binary);
        if (!jf) throw wordrep::IoError("cannot open output file: " + jumps_out);
        auto js = wordrep::jumps(word, repetition);
        wordrep::write_jumps_csv(jf, word, repetition, js);
    }
    return kOk;
}

int run_exponents(const std::string& spec, std::size_t N, std::size_t L, double window,
                  const std::string& out, const std::string& convergence_out) {
    std::size_t horizon = std::max(L, horizon_from_env());
    wordrep::Word word = wordrep::parse_word_spec(spec, horizon);
    L = std::min(L, word.horizon());
    if (N == 0) N = L / 2;
    N = std::min(N, L - 1);

    std::size_t complexity_n = std::min<std::size_t>(N, 512);
    auto complexity = wordrep::complexity_profile(word, complexity_n, L);
    if (wordrep::is_ultimately_periodic_on_prefix(complexity) ==
        wordrep::PeriodicityVerdict::PeriodicConsistent)
        throw std::invalid_argument("word is periodic-consistent on this prefix: no jumps");

    auto profile = wordrep::repetition_profile(word, N, L);
    auto js = wordrep::jumps(word, profile);
    auto est = wordrep::estimate_exponents(js, window);

    std::vector<wordrep::BoundReport> bounds;
    bounds.push_back(wordrep::make_bound_report(
        "Rep_vs_new_bound", est.rep_est, est.Rep_est, wordrep::bound_rrep(est.rep_est),
        wordrep::kEmpiricalTol));
    bounds.push_back(wordrep::make_bound_report(
        "Rep_vs_old_bound", est.rep_est, est.Rep_est, wordrep::bound_old_rrep(est.rep_est),
        wordrep::kEmpiricalTol));
    bounds.push_back(wordrep::make_bound_report(
        "beta_vs_bound", est.rep_est, est.beta_est, wordrep::bound_beta(est.rep_est),
        wordrep::kEmpiricalTol));
    {
        double min_pn = std::numeric_limits<double>::infinity();
        for (std::size_t n = complexity_n / 2; n <= complexity_n; ++n)
            min_pn = std::min(min_pn, double(complexity.p(n)) / double(n));
        bounds.push_back(wordrep::make_bound_report("liminf_p_over_n", est.rep_est, min_pn,
                                                    wordrep::bound_liminf_p(est.rep_est),
                                                    wordrep::kEmpiricalTol, true));
    }
    {
        std::int64_t worst = std::numeric_limits<std::int64_t>::max();
        for (std::size_t n = 1; n <= complexity_n; ++n)
            if (auto r = profile.r_opt(n)) worst = std::min(worst, complexity.p(n) - (*r - (std::int64_t)n));
        bounds.push_back(
            wordrep::make_bound_report("p_ge_r_minus_n", 0.0, (double)worst, 0.0, 0.0));
    }

    auto finds = wordrep::mine_approximations(word, js, L);

    std::ofstream file;
    std::ostream& os = open_output(file, out);
    os << wordrep::exponents_report(word.spec(), word.horizon(), est, bounds, finds).dump(2)
       << '\n';
    if (!os) throw wordrep::IoError("write failed: " + out);

    if (!convergence_out.empty()) {
        std::ofstream cf(convergence_out, std::ios::binary);
        if (!cf) throw wordrep::IoError("cannot open output file: " + convergence_out);
        wordrep::write_convergence_csv(cf, est);
    }
    for (const auto& b : bounds)
        if (!b.pass && !b.heuristic) return kViolation;
    return kOk;
}

struct VerifyState {
    int checked = 0;
    int failed = 0;
    void require(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            std::cerr << "FAIL: " << what << '\n';
        }
    }
};

void verify_one_word(wordrep::Word word, std::size_t L, std::size_t max_n, VerifyState& st,
                     std::mt19937& rng) {
    auto text = word.prefix(L);
    std::size_t N = std::min(max_n, L - 1);
    auto fast = wordrep::repetition_profile(word, N, L);
    auto hashed = wordrep::repetition_profile_hashed(word, N, L);
    for (std::size_t n = 1; n <= N; ++n) {
        auto naive = wordrep::bruteforce::naive_r(text, n);
        st.require(fast.r_opt(n) == naive && hashed.r_opt(n) == naive,
                   "optimized r == naive oracle at n=" + std::to_string(n));
    }
    auto complexity = wordrep::complexity_profile(word, N, L);
    for (std::size_t n = 1; n <= N; ++n)
        if (auto r = fast.r_opt(n))
            st.require(complexity.p(n) >= *r - (std::int64_t)n,
                       "p(n) >= r(n) - n at n=" + std::to_string(n));

    // sampled factors: period set vs definition, Fine-Wilf, the period-to-r bridge
    std::uniform_int_distribution<std::size_t> startd(1, L / 2);
    for (int t = 0; t < 8; ++t) {
        std::size_t n = startd(rng);
        std::size_t m = n + 1 + startd(rng) % (L - n);
        m = std::min(m, L);
        if (m <= n) continue;
        auto factor = text.subspan(n - 1, m - n + 1);
        auto lambda_set = wordrep::period_set(factor);
        auto naive = wordrep::bruteforce::naive_periods(factor);
        st.require(lambda_set.periods == naive, "period_set == brute force");
        for (std::size_t h : lambda_set.periods)
            for (std::size_t k : lambda_set.periods) {
                auto v = wordrep::fine_wilf_check(factor, h, k);  // throws on violation
                (void)v;
            }
        for (std::size_t lambda : lambda_set.periods) {
            if (m - n + 1 <= lambda) continue;
            std::size_t bound = wordrep::lemma_lll_bound(word, n, m, lambda);
            std::size_t target = m - n + 1 - lambda;
            if (target <= N)
                if (auto r = fast.r_opt(target))
                    st.require(*r <= (std::int64_t)bound,
                               "lemma 2.5: r(m-n+1-lambda) <= m");
        }
        ++st.checked;
    }

    // jump audits
    auto js = wordrep::jumps(word, fast);
    for (const auto& j : js) {
        auto audit = wordrep::classify_jump(word, fast, j);
        st.require(audit.pass, "case audit at jump n=" + std::to_string(j.n));
        if (j.v_n >= 1)
            st.require(j.lambda != j.lambda_prime,
                       "lambda != lambda' at jump n=" + std::to_string(j.n));
    }

    // every aperiodic-witnessed word must exhibit r(n) >= 2n+1 somewhere
    if (N >= 2 && wordrep::is_ultimately_periodic_on_prefix(complexity) ==
                      wordrep::PeriodicityVerdict::AperiodicWitnessed) {
        bool witnessed = false;
        for (std::size_t n = 1; n <= N && !witnessed; ++n)
            if (auto r = fast.r_opt(n))
                witnessed = *r >= (std::int64_t)(2 * n + 1);
        st.require(witnessed, "aperiodic word has some n with r(n) >= 2n+1");
    }
}

int run_verify(const std::string& spec, int random_words, std::size_t max_len,
               std::uint32_t seed, int jump_count, bool golden_r) {
    VerifyState st;
    std::mt19937 rng(seed);

    for (int w = 0; w < random_words; ++w) {
        std::uniform_int_distribution<std::size_t> lend(32, max_len);
        std::size_t L = lend(rng);
        std::vector<std::uint8_t> symbols(L);
        std::uniform_int_distribution<int> bit(0, 1);
        for (auto& s : symbols) s = (std::uint8_t)bit(rng);
        wordrep::Word word(wordrep::Alphabet(2), L,
                           [symbols](std::vector<std::uint8_t>& buf, std::size_t) {
                               buf = symbols;
                           },
                           "random");
        verify_one_word(std::move(word), L, 64, st, rng);
    }

    if (!spec.empty()) {
        std::size_t horizon = horizon_from_env();
        wordrep::Word word = wordrep::parse_word_spec(spec, horizon);
        std::size_t L = std::min<std::size_t>(horizon, std::size_t{1} << 17);
        auto profile = wordrep::repetition_profile(word, L / 2, L);
        auto js = wordrep::jumps(word, profile);
        int audited = 0;
        for (const auto& j : js) {
            if (jump_count > 0 && audited >= jump_count) break;
            auto audit = wordrep::classify_jump(word, profile, j);
            st.require(audit.pass, "case audit at jump n=" + std::to_string(j.n));
            ++audited;
        }
        if (jump_count > 0)
            st.require(audited >= jump_count,
                       "requested " + std::to_string(jump_count) + " jumps, found " +
                           std::to_string(audited));

        if (golden_r) {
            // Fibonacci closed forms: r(F_k-2) = F_{k+1}-2, r(F_k-1) = 2F_k-1,
            // r(F_k+h) = 2F_k+h for h = -1..F_{k-1}-2.
            std::vector<std::int64_t> F{1, 2};
            while (F.back() <= (std::int64_t)L) F.push_back(F[F.size() - 1] + F[F.size() - 2]);
            for (std::size_t k = 3; k < F.size(); ++k) {
                std::int64_t Fk = F[k - 1], Fk1 = F[k], Fkm = F[k - 2];
                if (Fk > (std::int64_t)profile.max_n()) break;
                st.require(profile.r_opt(Fk - 2) == std::optional<std::int64_t>(Fk1 - 2),
                           "r(F_k-2) at k=" + std::to_string(k));
                if (Fk - 1 <= (std::int64_t)profile.max_n())
                    st.require(profile.r_opt(Fk - 1) == std::optional<std::int64_t>(2 * Fk - 1),
                               "r(F_k-1) at k=" + std::to_string(k));
                for (std::int64_t h = -1; h <= Fkm - 2; ++h) {
                    if (Fk + h > (std::int64_t)profile.max_n() ||
                        !profile.r_opt(Fk + h))
                        break;
                    st.require(profile.r_opt(Fk + h) ==
                                   std::optional<std::int64_t>(2 * Fk + h),
                               "r(F_k+h) at k=" + std::to_string(k) +
                                   ", h=" + std::to_string(h));
                }
            }
        }
    }

    std::cout << "checks: " << st.checked << ", failures: " << st.failed << '\n';
    return st.failed == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subword complexity, repetition profiles and exponent bounds for infinite words"};
    app.require_subcommand(1);

    std::string spec, format = "csv", out, jumps_out, convergence_out;
    std::size_t N = 512, L = std::size_t{1} << 17;
    double window = wordrep::kDefaultWindowFraction;
    int random_words = 0, jump_count = 0;
    std::size_t max_len = 1500;
    std::uint32_t seed = 42;
    bool golden_r = false;

    auto* profile = app.add_subcommand("profile", "emit p(n), r(n) rows for a word");
    profile->add_option("--word", spec, "word spec")->required();
    profile->add_option("--n", N, "max n");
    profile->add_option("--len", L, "prefix length");
    profile->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    profile->add_option("--out", out, "output path (default stdout)");
    profile->add_option("--jumps-out", jumps_out, "also write the jump report CSV here");

    std::size_t expN = 0;
    auto* exponents = app.add_subcommand("exponents", "estimate rep/Rep/beta and audit bounds");
    exponents->add_option("--word", spec, "word spec")->required();
    exponents->add_option("--len", L, "prefix length");
    exponents->add_option("--n", expN, "max n (default len/2)");
    exponents->add_option("--window", window, "tail fraction of jump indices");
    exponents->add_option("--out", out, "output path (default stdout)");
    exponents->add_option("--convergence-out", convergence_out, "convergence CSV path");

    auto* verify = app.add_subcommand("verify", "run the property suite against brute force");
    verify->add_option("--random-words", random_words, "number of random binary words");
    verify->add_option("--max-len", max_len, "max random word length");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--word", spec, "word spec to audit");
    verify->add_option("--jumps", jump_count, "number of jumps to audit on --word");
    verify->add_flag("--golden-r", golden_r, "check the Fibonacci closed-form r table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (profile->parsed()) return run_profile(spec, N, L, format, out, jumps_out);
        if (exponents->parsed()) return run_exponents(spec, expN, L, window, out, convergence_out);
        return run_verify(spec, random_words, max_len, seed, jump_count, golden_r);
    } catch (const wordrep::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
