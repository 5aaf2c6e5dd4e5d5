// Compares the three r(n) computation routes on a Fibonacci prefix:
// full-profile (suffix structures), per-n rolling hash, and the naive scan.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "wordrep/bruteforce.hpp"
#include "wordrep/repetition.hpp"
#include "wordrep/word.hpp"

int main(int argc, char** argv) {
    std::size_t L = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1 << 14;
    std::size_t N = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 128;
    wordrep::Word word = wordrep::fibonacci_word(L);
    auto text = word.prefix(L);

    auto time = [](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0).count();
    };

    wordrep::RepetitionProfile full, hashed;
    double t_full = time([&] { full = wordrep::repetition_profile(word, N, L); });
    double t_hash = time([&] { hashed = wordrep::repetition_profile_hashed(word, N, L); });
    double t_naive = time([&] {
        for (std::size_t n = 1; n <= N; ++n) {
            auto r = wordrep::bruteforce::naive_r(text, n);
            if (r != full.r_opt(n) || r != hashed.r_opt(n)) {
                std::cerr << "mismatch at n=" << n << '\n';
                std::exit(1);
            }
        }
    });

    std::cout << "L=" << L << " N=" << N << '\n'
              << "full profile (suffix structures): " << t_full << " ms\n"
              << "per-n rolling hash:               " << t_hash << " ms\n"
              << "naive double scan:                " << t_naive << " ms\n";
    return 0;
}
