#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/word.hpp"

namespace testing {

inline std::vector<std::uint8_t> symbols(std::string_view digits) {
    std::vector<std::uint8_t> out;
    for (char c : digits) out.push_back(std::uint8_t(c - '0'));
    return out;
}

inline std::string to_digits(std::span<const std::uint8_t> s) {
    std::string out;
    for (auto c : s) out += char('0' + c);
    return out;
}

/// Fixed finite word exposed through the lazy-prefix interface.
inline wordrep::Word fixed_word(std::vector<std::uint8_t> syms, unsigned alphabet = 2) {
    std::size_t len = syms.size();
    return wordrep::Word(wordrep::Alphabet(alphabet), len,
                         [s = std::move(syms)](std::vector<std::uint8_t>& buf, std::size_t) {
                             buf = s;
                         },
                         "fixed");
}

inline wordrep::Word random_binary_word(std::mt19937& rng, std::size_t len) {
    std::vector<std::uint8_t> s(len);
    std::uniform_int_distribution<int> bit(0, 1);
    for (auto& c : s) c = (std::uint8_t)bit(rng);
    return fixed_word(std::move(s));
}

inline std::vector<std::int64_t> fibonacci_numbers(std::int64_t limit) {
    std::vector<std::int64_t> F{1, 2};  // F_1, F_2
    while (F.back() <= limit) F.push_back(F[F.size() - 1] + F[F.size() - 2]);
    return F;
}

}  // namespace testing
