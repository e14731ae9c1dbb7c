#include "toric/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toric {

std::vector<std::size_t> Rng::distinct_positions(std::size_t n, std::size_t t) {
    if (t > n) throw std::invalid_argument("more positions requested than available");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < t; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(below(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(t);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace toric
