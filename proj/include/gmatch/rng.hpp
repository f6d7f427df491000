#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace gmatch {

// Counter-based splittable RNG. A seed is a 64-bit master plus a hierarchical
// stream label; identical (master, label) always yields the identical byte
// stream, independent of platform and of what other streams were drawn.
// Streams are derived by hashing the label path into the master, so adding a
// consumer never shifts another consumer's stream.

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 0xCBF29CE484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

} // namespace detail

class RngStream {
public:
    explicit RngStream(std::uint64_t state) : state_(state) {}

    std::uint64_t next_u64() { return detail::splitmix64(state_); }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Unbiased uniform integer in [0, bound) via rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Geometric skip: number of failures before the next success of a
    // Bernoulli(p) sequence. Used for sparse edge sampling.
    std::uint64_t geometric_skip(double p) {
        if (p >= 1.0) return 0;
        double u = next_double();
        while (u <= 0.0) u = next_double();
        return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p)));
    }

private:
    std::uint64_t state_;
};

class RngSeed {
public:
    RngSeed() = default;
    explicit RngSeed(std::uint64_t master, std::string path = "") : master_(master), path_(std::move(path)) {}

    RngSeed child(std::string_view label) const {
        std::string p = path_;
        p += '/';
        p += label;
        return RngSeed(master_, std::move(p));
    }
    RngSeed child(std::uint64_t index) const { return child(std::to_string(index)); }

    RngStream stream() const {
        std::uint64_t s = master_ ^ detail::fnv1a(path_);
        // A couple of mixing rounds so that similar labels decorrelate.
        detail::splitmix64(s);
        detail::splitmix64(s);
        return RngStream(s);
    }

    std::uint64_t master() const { return master_; }
    const std::string& path() const { return path_; }

private:
    std::uint64_t master_ = 0;
    std::string path_;
};

} // namespace gmatch
