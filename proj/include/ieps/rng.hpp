#ifndef IEPS_RNG_HPP
#define IEPS_RNG_HPP

#include <cstdint>
#include <random>

namespace ieps {

// splitmix64 step; used to derive independent per-task seeds from a root seed.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t root, uint64_t index) {
    uint64_t s = root ^ (0x632be59bd9b4e019ULL * (index + 1));
    return splitmix64(s);
}

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

} // namespace ieps

#endif
