#pragma once

// Seeding and uniform variate generation built on the SplitMix64 mixing
// function (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014).  Everything here is a pure function of
// (seed, counter), so replications can be generated in any order, on any
// number of threads, with bit-identical results.

#include <cstdint>

namespace cvarsens {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer: a 64-bit avalanche permutation.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Random access into the SplitMix64 output stream seeded by `seed`.
constexpr std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGoldenGamma);
}

// Child-stream derivation: derive(s, a) and derive(s, b) are statistically
// independent streams for a != b.  Chain calls to key on tuples.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
    return mix64(mix64(seed + kGoldenGamma) ^ (key * 0xbf58476d1ce4e5b9ULL + kGoldenGamma));
}

// Maps 64 random bits onto the midpoint grid {(i+1/2)*2^-52}, which lies
// strictly inside (0,1).  Coordinates can therefore never be exactly 0 or 1.
constexpr double bits_to_open_unit(std::uint64_t bits) {
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t operator()() { return mix64(state_ += kGoldenGamma); }

    double next_open_unit() { return bits_to_open_unit((*this)()); }

  private:
    std::uint64_t state_;
};

}  // namespace cvarsens
