#pragma once

#include <cstdint>

namespace ljb {

// Counter-based deterministic generator. The k-th draw (k = 1, 2, ...) for
// seed s is the splitmix64 finalizer applied to s + k * 0x9E3779B97F4A7C15,
// so the stream is a pure function of (seed, k): identical across platforms,
// languages, and runs, and cheap to re-create mid-stream. Uniform doubles
// take the top 53 bits; gaussians are Box-Muller over two uniforms (their
// bit pattern additionally depends on the platform's libm log/cos/sin,
// which is fixed for any given machine, so reports stay byte-reproducible).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    // Derives an independent stream: used to give each sampling site its own
    // seed so adding a draw in one place does not shift another's stream.
    CounterRng fork(std::uint64_t stream) const {
        return CounterRng(mix(seed_ ^ mix(stream + 0x517CC1B727220A95ull)));
    }

    std::uint64_t next_u64() { return mix(seed_ + (++counter_) * GOLDEN); }

    // Uniform in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n), by rejection-free scaling (n is tiny here; modulo
    // bias at n << 2^64 is far below anything observable).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller. Consumes two counters per value; the
    // pair's second value is not cached so the stream position stays a pure
    // function of the number of calls.
    double gaussian();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace ljb
