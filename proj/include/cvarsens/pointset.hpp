#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvarsens/io.hpp"
#include "cvarsens/rng.hpp"

namespace cvarsens {

enum class Provenance { monte_carlo, scrambled_sobol_linear, scrambled_sobol_nested };

inline const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::monte_carlo: return "monte-carlo";
        case Provenance::scrambled_sobol_linear: return "scrambled-sobol-linear";
        case Provenance::scrambled_sobol_nested: return "scrambled-sobol-nested";
    }
    return "?";
}

// n x d sample in the open unit cube.  Immutable after construction; rows are
// stored contiguously so a point is a span over the value array.
struct PointSet {
    int n = 0;
    int dim = 0;
    Provenance provenance = Provenance::monte_carlo;
    std::uint64_t seed = 0;
    std::vector<double> values;  // row-major, n * dim

    std::span<const double> row(int i) const {
        return {values.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
    }

    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * dim + j]; }

    // Every coordinate must lie strictly inside (0,1).
    void check_open_cube() const {
        for (double v : values)
            if (!(v > 0.0 && v < 1.0))
                throw std::logic_error("point set violates the open-cube invariant");
    }

    void write_csv(std::ostream& out) const {
        out << "row";
        for (int j = 1; j <= dim; ++j) out << ",u" << j;
        out << '\n';
        for (int i = 0; i < n; ++i) {
            out << (i + 1);
            for (int j = 0; j < dim; ++j) out << ',' << format_sig17(at(i, j));
            out << '\n';
        }
    }
};

// i.i.d. uniforms on (0,1)^d from the SplitMix64 stream keyed by `seed`.
// Coordinate (i,j) is a pure function of (seed, i*d + j).
inline PointSet mc_points(int n, int dim, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("mc_points: n must be >= 1");
    if (dim < 1) throw std::invalid_argument("mc_points: d must be >= 1");
    PointSet ps;
    ps.n = n;
    ps.dim = dim;
    ps.provenance = Provenance::monte_carlo;
    ps.seed = seed;
    ps.values.resize(static_cast<std::size_t>(n) * dim);
    for (std::size_t k = 0; k < ps.values.size(); ++k)
        ps.values[k] = bits_to_open_unit(splitmix_at(seed, k));
    return ps;
}

}  // namespace cvarsens
