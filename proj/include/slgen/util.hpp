#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace slgen {

// Thrown when a requested computation exceeds the configured desk-scale
// enumeration limits.
class limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Deterministic RNG. All randomized routines draw through this wrapper so
// that results are byte-identical across platforms for a fixed seed
// (std::uniform_int_distribution is implementation-defined, so we avoid it).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // Unbiased uniform draw from [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t r = eng_();
            if (r < lim) return r % n;
        }
    }

    // Independent sub-stream for per-worker or per-trial use.
    Rng fork() { return Rng(u64() ^ 0x9e3779b97f4a7c15ull); }

  private:
    std::mt19937_64 eng_;
};

} // namespace slgen
