#pragma once

// Randomizations of digital nets in base 2.
//
// scramble_nested: Owen's recursive digit scrambling.  The permutation of
// digit k is keyed by the k-1 preceding digits of the unrandomized point, so
// points sharing a digit prefix are permuted consistently; in base 2 each
// permutation is a coin-flip XOR.  Digits beyond the net's m are all zero on
// input and pick up fresh uniform bits from the permutation tree.
//
// scramble_linear: Matousek's linear scramble; a random lower-triangular bit
// matrix with unit diagonal per coordinate, followed by a random digital
// shift.
//
// Both preserve the (t,m,d)-net property and make every point marginally
// uniform on (0,1)^d.  A coordinate that randomizes to exactly 0 (probability
// 2^-32) is re-drawn from a dedicated stream, so outputs stay strictly inside
// the open cube.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cvarsens/digital_net.hpp"
#include "cvarsens/pointset.hpp"
#include "cvarsens/rng.hpp"

namespace cvarsens {

struct LinearScramble {
    // rows[k] is the bit mask of matrix row k: output digit k+1 is the parity
    // of (digits & rows[k]), with the diagonal bit (digit k+1) always set.
    std::array<std::uint32_t, 32> rows{};
    std::uint32_t shift = 0;

    static LinearScramble identity() {
        LinearScramble s;
        for (int k = 0; k < 32; ++k) s.rows[static_cast<std::size_t>(k)] = 1u << (31 - k);
        return s;
    }

    std::uint32_t apply(std::uint32_t digits) const {
        std::uint32_t out = 0;
        for (int k = 0; k < 32; ++k)
            out |= static_cast<std::uint32_t>(std::popcount(digits & rows[static_cast<std::size_t>(k)]) & 1)
                   << (31 - k);
        return out ^ shift;
    }
};

namespace detail {

constexpr std::uint64_t kRedrawTag = 0x7264726177ULL;   // "rdraw"
constexpr std::uint64_t kMatrixTag = 0x6d617472ULL;     // "matr"

// Nonzero 32-digit word for coordinate (i, j), drawn from its own stream.
inline std::uint32_t redraw_nonzero(std::uint64_t seed, int i, int j, int dim) {
    const std::uint64_t key =
        derive_seed(derive_seed(seed, kRedrawTag), static_cast<std::uint64_t>(i) * dim + j);
    for (std::uint64_t c = 0;; ++c) {
        const auto w = static_cast<std::uint32_t>(splitmix_at(key, c) >> 32);
        if (w != 0) return w;
    }
}

}  // namespace detail

inline std::vector<LinearScramble> make_linear_scramble(int dim, std::uint64_t seed) {
    std::vector<LinearScramble> out(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        SplitMix64 rng(derive_seed(derive_seed(seed, detail::kMatrixTag), static_cast<std::uint64_t>(j)));
        LinearScramble& s = out[static_cast<std::size_t>(j)];
        for (int k = 0; k < 32; ++k) {
            const auto r = static_cast<std::uint32_t>(rng() >> 32);
            const std::uint32_t below = k == 0 ? 0u : (0xFFFFFFFFu << (32 - k));
            s.rows[static_cast<std::size_t>(k)] = (r & below) | (1u << (31 - k));
        }
        s.shift = static_cast<std::uint32_t>(rng() >> 32);
    }
    return out;
}

inline PointSet apply_linear_scramble(const DigitalNet& net,
                                      std::span<const LinearScramble> scrambles,
                                      std::uint64_t seed) {
    if (net.base != 2) throw std::invalid_argument("scramble: base must be 2");
    if (static_cast<int>(scrambles.size()) != net.dim)
        throw std::invalid_argument("scramble: one LinearScramble per coordinate required");
    PointSet ps;
    ps.n = net.n();
    ps.dim = net.dim;
    ps.provenance = Provenance::scrambled_sobol_linear;
    ps.seed = seed;
    ps.values.resize(static_cast<std::size_t>(ps.n) * ps.dim);
    for (int i = 0; i < ps.n; ++i) {
        for (int j = 0; j < net.dim; ++j) {
            std::uint32_t w = scrambles[static_cast<std::size_t>(j)].apply(net.digit_word(i, j));
            if (w == 0) w = detail::redraw_nonzero(seed, i, j, net.dim);
            ps.values[static_cast<std::size_t>(i) * net.dim + j] = w * 0x1.0p-32;
        }
    }
    return ps;
}

inline PointSet scramble_linear(const DigitalNet& net, std::uint64_t seed) {
    return apply_linear_scramble(net, make_linear_scramble(net.dim, seed), seed);
}

// One output digit word of Owen scrambling: flips are read from the node
// stream keyed by (coordinate, digit position, digit prefix).
inline std::uint32_t owen_scramble_word(std::uint32_t word, std::uint64_t coord_key) {
    std::uint32_t out = 0;
    for (int k = 1; k <= 32; ++k) {
        const std::uint32_t prefix = k == 1 ? 0u : (word >> (33 - k));
        const std::uint64_t node = (static_cast<std::uint64_t>(k) << 32) | prefix;
        const std::uint32_t flip = static_cast<std::uint32_t>(splitmix_at(coord_key, node) >> 63);
        const std::uint32_t bit = ((word >> (32 - k)) & 1u) ^ flip;
        out |= bit << (32 - k);
    }
    return out;
}

inline PointSet scramble_nested(const DigitalNet& net, std::uint64_t seed) {
    if (net.base != 2) throw std::invalid_argument("scramble: base must be 2");
    PointSet ps;
    ps.n = net.n();
    ps.dim = net.dim;
    ps.provenance = Provenance::scrambled_sobol_nested;
    ps.seed = seed;
    ps.values.resize(static_cast<std::size_t>(ps.n) * ps.dim);
    std::vector<std::uint64_t> keys(static_cast<std::size_t>(net.dim));
    for (int j = 0; j < net.dim; ++j) keys[static_cast<std::size_t>(j)] = derive_seed(seed, static_cast<std::uint64_t>(j));
    for (int i = 0; i < ps.n; ++i) {
        for (int j = 0; j < net.dim; ++j) {
            std::uint32_t w = owen_scramble_word(net.digit_word(i, j), keys[static_cast<std::size_t>(j)]);
            if (w == 0) w = detail::redraw_nonzero(seed, i, j, net.dim);
            ps.values[static_cast<std::size_t>(i) * net.dim + j] = w * 0x1.0p-32;
        }
    }
    return ps;
}

}  // namespace cvarsens
