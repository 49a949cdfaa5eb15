#ifndef CONREAL_RNG_HPP
#define CONREAL_RNG_HPP

#include <cstdint>
#include <random>

namespace conreal {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

// Thin wrapper so every randomized fallback in the library draws from the
// same reproducible stream type and records its seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return gen_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) {
        std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
        return d(gen_);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace conreal

#endif
