#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace wordrep::detail {

// Polynomial rolling hash mod 2^61-1. Collisions are resolved by direct
// comparison wherever exact answers are required, so the hash is only a
// bucketing device.
class RollingHash {
public:
    static constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
    static constexpr std::uint64_t kBase = 1'000'003;

    static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
        unsigned __int128 p = (unsigned __int128)a * b;
        std::uint64_t lo = (std::uint64_t)(p & kMod);
        std::uint64_t hi = (std::uint64_t)(p >> 61);
        std::uint64_t s = lo + hi;
        if (s >= kMod) s -= kMod;
        return s;
    }

    explicit RollingHash(std::size_t window) : window_(window), top_(1) {
        for (std::size_t i = 0; i + 1 < window; ++i) top_ = mulmod(top_, kBase);
    }

    // Hash of the first window.
    std::uint64_t init(std::span<const std::uint8_t> s) {
        std::uint64_t h = 0;
        for (std::size_t i = 0; i < window_; ++i)
            h = (mulmod(h, kBase) + s[i] + 1) % kMod;
        return h;
    }

    // Slide: drop `out`, append `in`.
    std::uint64_t roll(std::uint64_t h, std::uint8_t out, std::uint8_t in) const {
        std::uint64_t drop = mulmod(top_, out + 1);
        h = (h + kMod - drop) % kMod;
        return (mulmod(h, kBase) + in + 1) % kMod;
    }

private:
    std::size_t window_;
    std::uint64_t top_;
};

inline bool window_equal(std::span<const std::uint8_t> text, std::size_t a, std::size_t b,
                         std::size_t n) {
    return std::memcmp(text.data() + a, text.data() + b, n) == 0;
}

}  // namespace wordrep::detail
