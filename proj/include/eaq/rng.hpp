#ifndef EAQ_RNG_HPP
#define EAQ_RNG_HPP

#include <cstdint>

namespace eaq {

// Deterministic 64-bit generator (splitmix64). Used everywhere instead of
// std:: distributions so that results are identical across standard library
// implementations for a given seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in {0, ..., n-1} (n <= 2^32; rejection-free modulo bias is
    // negligible at the ranges used here, but we reject anyway).
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Derives an independent stream, e.g. one per Monte Carlo trial.
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        Rng r(master ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
        return r.next_u64();
    }

  private:
    std::uint64_t state_;
};

} // namespace eaq

#endif
