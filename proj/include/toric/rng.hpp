#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace toric {

/// Seeded generator with platform-stable bounded draws (mt19937_64 is
/// bit-exact per the standard; std::uniform_int_distribution is not, so
/// bounds are applied by hand).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

    /// t distinct positions in [0, n), ascending.
    std::vector<std::size_t> distinct_positions(std::size_t n, std::size_t t);

  private:
    std::mt19937_64 eng_;
};

/// Decorrelates per-trial streams from a base seed (splitmix64 steps).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace toric
