#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "wordrep/bruteforce.hpp"
#include "wordrep/periods.hpp"
#include "wordrep/repetition.hpp"

using namespace wordrep;

TEST_CASE("first repetition lengths of the fibonacci word") {
    Word f = fibonacci_word();
    auto profile = repetition_profile(f, 16, 256);
    const std::int64_t expected[] = {3, 5, 6, 9, 10, 11, 15};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(profile.r(n) == expected[n - 1]);
    // between jumps r increases by exactly one
    CHECK(profile.r(8) == 16);
    CHECK(profile.r(11) == 19);
    // next jump: r(12) = 12 + 13, the shifts walking up the Fibonacci numbers
    CHECK(profile.r(12) == 25);
}

TEST_CASE("constant word has r(n) = n + 1") {
    Word zeros = periodic_word({}, {0});
    auto profile = repetition_profile(zeros, 40, 100);
    for (std::size_t n = 1; n <= 40; ++n) CHECK(profile.r(n) == (std::int64_t)n + 1);
}

TEST_CASE("all three r routes agree with each other and the definition") {
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        std::uniform_int_distribution<std::size_t> len(8, 600);
        std::size_t L = len(rng);
        Word w = testing::random_binary_word(rng, L);
        auto text = w.prefix(L);
        std::size_t N = L - 1;
        auto full = repetition_profile(w, N, L);
        auto hashed = repetition_profile_hashed(w, N, L);
        for (std::size_t n = 1; n <= N; ++n) {
            auto ref = bruteforce::naive_r(text, n);
            REQUIRE(full.r_opt(n) == ref);
            REQUIRE(hashed.r_opt(n) == ref);
        }
    }
}

TEST_CASE("exceeds-horizon entries are flagged, not faked") {
    // 01 has no repeated factor of length 1 inside it
    Word w = testing::fixed_word({0, 1});
    auto profile = repetition_profile(w, 1, 2);
    CHECK_FALSE(profile.exact(1));
    CHECK_FALSE(profile.r_opt(1).has_value());
    CHECK_THROWS_AS(profile.r(1), std::logic_error);
    CHECK_THROWS_AS(profile.r(0), std::out_of_range);
    CHECK_THROWS_AS(profile.r(2), std::out_of_range);

    // on a de Bruijn-ish aperiodic stretch large n exceed the horizon
    std::mt19937 rng(3);
    Word v = testing::random_binary_word(rng, 64);
    auto p = repetition_profile(v, 63, 64);
    CHECK_FALSE(p.exact(63));  // would need two occurrences of a length-63 word in 64 symbols
}

TEST_CASE("fibonacci jumps are at n = F_k - 2") {
    Word f = fibonacci_word();
    auto profile = repetition_profile(f, 1001, std::size_t{1} << 13);
    auto js = jumps(f, profile);
    std::vector<std::int64_t> ns;
    for (const auto& j : js) ns.push_back(j.n);
    CHECK(ns == std::vector<std::int64_t>{1, 3, 6, 11, 19, 32, 53, 87, 142, 231, 375, 608, 985});
}

TEST_CASE("fibonacci jump at n = 3 in full detail") {
    Word f = fibonacci_word();
    auto profile = repetition_profile(f, 16, 256);
    auto js = jumps(f, profile);
    REQUIRE(js.size() >= 2);
    const auto& j = js[1];
    CHECK(j.n == 3);
    CHECK(j.r_n == 6);
    CHECK(j.r_n_plus_1 == 9);
    CHECK(j.lambda == 3);
    CHECK(j.lambda_prime == 5);
    CHECK(j.v_n == 1);
    CHECK(j.overlap == std::vector<std::uint8_t>{0});
    CHECK(j.label == JumpCase::I);

    auto audit = classify_jump(f, profile, j);
    CHECK(audit.overlap_nonempty);
    CHECK(audit.pass);

    // the next jump, n = 6: lambda = 5, lambda' = 8, v = 3, still case i
    const auto& j2 = js[2];
    CHECK(j2.n == 6);
    CHECK(j2.lambda == 5);
    CHECK(j2.lambda_prime == 8);
    CHECK(j2.v_n == 3);
    CHECK(j2.label == JumpCase::I);
    CHECK(classify_jump(f, profile, j2).pass);
}

TEST_CASE("audits pass on random words") {
    std::mt19937 rng(23);
    std::size_t audited = 0, overlapping = 0;
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<std::size_t> len(64, 1200);
        std::size_t L = len(rng);
        Word w = testing::random_binary_word(rng, L);
        auto profile = repetition_profile(w, L / 2, L);
        for (const auto& j : jumps(w, profile)) {
            auto audit = classify_jump(w, profile, j);
            REQUIRE(audit.pass);
            ++audited;
            if (audit.overlap_nonempty) {
                REQUIRE(j.lambda != j.lambda_prime);
                ++overlapping;
            }
        }
    }
    CHECK(audited > 100);
    CHECK(overlapping > 0);
}

TEST_CASE("lambda is the minimal period of the doubled-occurrence factor") {
    std::mt19937 rng(29);
    for (int t = 0; t < 20; ++t) {
        Word w = testing::random_binary_word(rng, 800);
        auto profile = repetition_profile(w, 400, 800);
        auto text = w.prefix(800);
        for (const auto& j : jumps(w, profile)) {
            auto factor = text.subspan((std::size_t)(j.r_n - j.n - j.lambda),
                                       (std::size_t)(j.n + j.lambda));
            REQUIRE(period_set(factor).minimal() == (std::size_t)j.lambda);
        }
    }
}

TEST_CASE("overlap word readings coincide") {
    Word f = fibonacci_word();
    auto profile = repetition_profile(f, 600, std::size_t{1} << 13);
    auto text = f.prefix(std::size_t{1} << 13);
    for (const auto& j : jumps(f, profile)) {
        if (j.v_n < 1) continue;
        // V_n read at its place, shifted back by lambda, and by lambda'
        for (std::int64_t d : {std::int64_t{0}, j.lambda, j.lambda_prime}) {
            std::int64_t start = j.r_n_plus_1 - j.n - 1 - d;
            REQUIRE(start >= 0);
            for (std::int64_t i = 0; i < j.v_n; ++i)
                REQUIRE(text[(std::size_t)(start + i)] == j.overlap[(std::size_t)i]);
        }
    }
}

TEST_CASE("disjointness scan") {
    Word f = fibonacci_word();
    auto profile = repetition_profile(f, 64, 512);
    auto js = jumps(f, profile);
    auto verdicts = disjointness_scan(js);
    REQUIRE(verdicts.size() == js.size());
    // n = 3: r(4) - 4 = 5 < 6 = r(3), the windows overlap
    CHECK(verdicts[1].n == 3);
    CHECK_FALSE(verdicts[1].disjoint);
    for (std::size_t i = 0; i < js.size(); ++i)
        CHECK(verdicts[i].disjoint == (js[i].v_n <= 0));
}

TEST_CASE("repetition argument validation") {
    Word f = fibonacci_word();
    CHECK_THROWS_AS(repetition_profile(f, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(repetition_profile(f, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(repetition_profile_hashed(f, 0, 10), std::invalid_argument);
}
