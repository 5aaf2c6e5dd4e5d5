#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordrep {

inline constexpr std::size_t kDefaultHorizon = std::size_t{1} << 20;

/// Thrown for filesystem-level failures (missing digit files etc.).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Alphabet {
    unsigned size;

    explicit Alphabet(unsigned s) : size(s) {
        if (s < 2) throw std::invalid_argument("alphabet size must be >= 2");
    }
};

/// A finite or lazily extendable symbol sequence with a materialized prefix.
/// Extension is deterministic: materializing the same length twice yields the
/// same symbols. Symbols are 0..alphabet.size-1.
class Word {
public:
    // Grows the buffer so that it holds at least `target` symbols (it may
    // overshoot; the caller slices).
    using Extender = std::function<void(std::vector<std::uint8_t>&, std::size_t)>;

    Word(Alphabet alphabet, std::size_t horizon, Extender extend, std::string spec = {})
        : alphabet_(alphabet), horizon_(horizon), extend_(std::move(extend)),
          spec_(std::move(spec)) {
        if (horizon_ == 0) throw std::invalid_argument("horizon must be positive");
    }

    Alphabet alphabet() const { return alphabet_; }
    std::size_t horizon() const { return horizon_; }
    const std::string& spec() const { return spec_; }
    std::size_t materialized() const { return buf_.size(); }

    /// Materializes (if needed) and returns the prefix of length `len`.
    /// The returned span is invalidated by further extension.
    std::span<const std::uint8_t> prefix(std::size_t len) {
        if (len > horizon_)
            throw std::length_error("requested prefix exceeds horizon");
        if (buf_.size() < len) {
            std::size_t old = buf_.size();
            extend_(buf_, len);
            if (buf_.size() > horizon_) buf_.resize(horizon_);
            if (buf_.size() < len)
                throw std::length_error("generator exhausted before requested length");
            for (std::size_t i = old; i < buf_.size(); ++i)
                if (buf_[i] >= alphabet_.size)
                    throw std::logic_error("generator emitted symbol outside alphabet");
        }
        return {buf_.data(), len};
    }

    /// 1-based symbol access, materializing as needed.
    std::uint8_t at1(std::size_t pos) {
        if (pos == 0) throw std::out_of_range("positions are 1-based");
        return prefix(pos)[pos - 1];
    }

private:
    Alphabet alphabet_;
    std::size_t horizon_;
    Extender extend_;
    std::string spec_;
    std::vector<std::uint8_t> buf_;
};

/// Fibonacci word: limit of f1=0, f2=01, f_{j+2}=f_{j+1}f_j.
inline Word fibonacci_word(std::size_t horizon = kDefaultHorizon) {
    auto extend = [](std::vector<std::uint8_t>& buf, std::size_t target) {
        std::vector<std::uint8_t> prev{0};     // f_1
        std::vector<std::uint8_t> cur{0, 1};   // f_2
        while (cur.size() < target) {
            std::vector<std::uint8_t> next = cur;
            next.insert(next.end(), prev.begin(), prev.end());
            prev = std::move(cur);
            cur = std::move(next);
        }
        buf = std::move(cur);
    };
    return Word(Alphabet(2), horizon, extend, "fib");
}

/// Characteristic Sturmian word of the slope with the given continued-fraction
/// partial quotients, via the standard-word recursion
///   t_{-1}=1, t_0=0, t_1 = t_0^{a_1-1} t_{-1}, t_k = t_{k-1}^{a_k} t_{k-2}.
/// When `cycle` is false the last quotient repeats forever; when true the whole
/// list cycles.
inline Word sturmian_word(std::vector<unsigned> quotients, bool cycle = false,
                          std::size_t horizon = kDefaultHorizon) {
    if (quotients.empty())
        throw std::invalid_argument("sturmian word needs at least one partial quotient");
    for (unsigned q : quotients)
        if (q < 1) throw std::invalid_argument("partial quotients must be positive");

    std::string spec = "sturm:cf=[";
    for (std::size_t i = 0; i < quotients.size(); ++i)
        spec += (i ? "," : "") + std::to_string(quotients[i]);
    if (cycle) spec += ",...";
    spec += "]";

    auto extend = [qs = std::move(quotients), cycle](std::vector<std::uint8_t>& buf,
                                                     std::size_t target) {
        auto quotient = [&](std::size_t k) -> unsigned {  // k >= 1
            if (k <= qs.size()) return qs[k - 1];
            return cycle ? qs[(k - 1) % qs.size()] : qs.back();
        };
        std::vector<std::uint8_t> prev{1};  // t_{-1}
        std::vector<std::uint8_t> cur{0};   // t_0
        for (std::size_t k = 1; k == 1 || cur.size() < target; ++k) {
            unsigned reps = quotient(k) - (k == 1 ? 1 : 0);
            std::vector<std::uint8_t> next;
            next.reserve(cur.size() * reps + prev.size());
            for (unsigned i = 0; i < reps; ++i)
                next.insert(next.end(), cur.begin(), cur.end());
            next.insert(next.end(), prev.begin(), prev.end());
            prev = std::move(cur);
            cur = std::move(next);
        }
        buf = std::move(cur);
    };
    return Word(Alphabet(2), horizon, extend, spec);
}

/// preperiod . period . period . ...
inline Word periodic_word(std::vector<std::uint8_t> preperiod, std::vector<std::uint8_t> period,
                          std::size_t horizon = kDefaultHorizon) {
    if (period.empty()) throw std::invalid_argument("period must be non-empty");
    unsigned maxsym = 0;
    for (std::uint8_t c : preperiod) maxsym = std::max<unsigned>(maxsym, c);
    for (std::uint8_t c : period) maxsym = std::max<unsigned>(maxsym, c);
    Alphabet a(std::max(2u, maxsym + 1));

    std::string spec = "periodic:pre=";
    for (auto c : preperiod) spec += char('0' + c);
    spec += ",per=";
    for (auto c : period) spec += char('0' + c);

    auto extend = [pre = std::move(preperiod), per = std::move(period)](
                      std::vector<std::uint8_t>& buf, std::size_t target) {
        buf = pre;
        while (buf.size() < target)
            buf.insert(buf.end(), per.begin(), per.end());
    };
    return Word(a, horizon, extend, spec);
}

/// Symbol at 1-based position i is 1 iff i is a power of `exponent_base`.
inline Word lacunary_word(Alphabet base, unsigned exponent_base,
                          std::size_t horizon = kDefaultHorizon) {
    if (exponent_base < 2) throw std::invalid_argument("exponent base must be >= 2");
    std::string spec = "lacunary:base=" + std::to_string(base.size) +
                       ",ebase=" + std::to_string(exponent_base);
    auto extend = [e = exponent_base](std::vector<std::uint8_t>& buf, std::size_t target) {
        buf.assign(target, 0);
        for (std::size_t p = 1; p <= target; ) {
            buf[p - 1] = 1;
            if (p > target / e) break;
            p *= e;
        }
    };
    return Word(base, horizon, extend, spec);
}

/// Digit stream read from a file, one ASCII digit per byte, newline-tolerant.
/// The word's horizon is the number of digits in the file (capped at `horizon`).
inline Word file_word(unsigned base, const std::string& path,
                      std::size_t horizon = kDefaultHorizon) {
    Alphabet a(base);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open digit file: " + path);
    std::vector<std::uint8_t> digits;
    char c;
    while (in.get(c)) {
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("non-digit byte in ") + path);
        unsigned d = unsigned(c - '0');
        if (d >= base)
            throw std::invalid_argument("digit out of alphabet range in " + path);
        digits.push_back(std::uint8_t(d));
        if (digits.size() >= horizon) break;
    }
    if (digits.empty()) throw std::invalid_argument("empty digit file: " + path);
    std::size_t len = digits.size();
    auto extend = [d = std::move(digits)](std::vector<std::uint8_t>& buf, std::size_t) {
        buf = d;
    };
    return Word(a, len, extend, "file:base=" + std::to_string(base) + ",path=" + path);
}

namespace detail {

inline std::vector<std::uint8_t> parse_digits(std::string_view s) {
    std::vector<std::uint8_t> out;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("digit string expects characters 0-9");
        out.push_back(std::uint8_t(c - '0'));
    }
    return out;
}

inline unsigned parse_uint(std::string_view s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty number");
    unsigned v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string(what) + ": not a number");
        v = v * 10 + unsigned(c - '0');
    }
    return v;
}

// Splits "key1=v1,key2=v2" respecting that the last value may contain commas
// only for bracketed lists.
inline std::string_view field(std::string_view body, std::string_view key) {
    std::string pat = std::string(key) + "=";
    std::size_t pos = body.find(pat);
    if (pos != 0) {
        pat = "," + pat;
        pos = body.find(pat);
        if (pos == std::string_view::npos)
            throw std::invalid_argument("word spec missing field: " + std::string(key));
        pos += 1;
    }
    std::size_t start = pos + key.size() + 1;
    std::size_t end;
    if (start < body.size() && body[start] == '[') {
        end = body.find(']', start);
        if (end == std::string_view::npos)
            throw std::invalid_argument("unterminated list in word spec");
        ++end;
    } else {
        end = body.find(',', start);
        if (end == std::string_view::npos) end = body.size();
    }
    return body.substr(start, end - start);
}

}  // namespace detail

/// Word-spec mini-language:
///   fib
///   sturm:cf=[a1,a2,...]      (trailing "..." makes the list a cycle)
///   periodic:pre=<digits>,per=<digits>
///   lacunary:base=<b>,ebase=<e>
///   file:base=<b>,path=<p>
inline Word parse_word_spec(std::string_view spec, std::size_t horizon = kDefaultHorizon) {
    if (spec == "fib") return fibonacci_word(horizon);

    std::size_t colon = spec.find(':');
    std::string_view head = spec.substr(0, colon);
    std::string_view body = colon == std::string_view::npos ? std::string_view{}
                                                            : spec.substr(colon + 1);
    if (head == "sturm") {
        std::string_view cf = detail::field(body, "cf");
        if (cf.size() < 3 || cf.front() != '[' || cf.back() != ']')
            throw std::invalid_argument("sturm spec expects cf=[...]");
        cf = cf.substr(1, cf.size() - 2);
        bool cycle = false;
        if (cf.ends_with(",...")) {
            cycle = true;
            cf = cf.substr(0, cf.size() - 4);
        }
        std::vector<unsigned> qs;
        while (!cf.empty()) {
            std::size_t comma = cf.find(',');
            qs.push_back(detail::parse_uint(cf.substr(0, comma), "cf quotient"));
            if (comma == std::string_view::npos) break;
            cf = cf.substr(comma + 1);
        }
        return sturmian_word(std::move(qs), cycle, horizon);
    }
    if (head == "periodic") {
        std::vector<std::uint8_t> pre;  // preperiod may be omitted
        if (body.find("pre=") != std::string_view::npos)
            pre = detail::parse_digits(detail::field(body, "pre"));
        auto per = detail::parse_digits(detail::field(body, "per"));
        return periodic_word(std::move(pre), std::move(per), horizon);
    }
    if (head == "lacunary") {
        unsigned b = detail::parse_uint(detail::field(body, "base"), "base");
        unsigned e = detail::parse_uint(detail::field(body, "ebase"), "ebase");
        return lacunary_word(Alphabet(b), e, horizon);
    }
    if (head == "file") {
        unsigned b = detail::parse_uint(detail::field(body, "base"), "base");
        std::string path(detail::field(body, "path"));
        return file_word(b, path, horizon);
    }
    throw std::invalid_argument("unknown word generator: " + std::string(head));
}

}  // namespace wordrep
