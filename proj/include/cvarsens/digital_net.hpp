#pragma once

// Sobol' digital nets in base 2 and the (t,m,d)-net property check.
//
// A point's coordinate is stored as a 32-digit binary fraction in a uint32
// (most significant bit = first digit), so the real value is digits * 2^-32.
// The first 2^m Sobol' points only populate the leading m digits; the
// scramblers in scramble.hpp randomize all 32.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cvarsens/direction_numbers.hpp"
#include "cvarsens/pointset.hpp"

namespace cvarsens {

struct DigitalNet {
    int base = 2;
    int m = 0;
    int dim = 0;
    std::optional<int> t;             // quality parameter, known (0) for dim <= 2
    std::vector<std::uint32_t> digits;  // row-major, n * dim

    int n() const { return 1 << m; }

    std::uint32_t digit_word(int i, int j) const {
        return digits[static_cast<std::size_t>(i) * dim + j];
    }

    double value(int i, int j) const { return digit_word(i, j) * 0x1.0p-32; }
};

namespace detail {

// 32 direction integers for one Sobol' dimension, scaled so that integer k
// occupies bits 31..(31-k).
inline void sobol_direction_integers(int dimension, const DirectionNumberTable& table,
                                     std::uint32_t v[32]) {
    if (dimension == 1) {
        for (int k = 0; k < 32; ++k) v[k] = 1u << (31 - k);
        return;
    }
    const DirectionNumberRecord& rec = table.record(dimension);
    const int s = rec.degree;
    for (int k = 0; k < s && k < 32; ++k) v[k] = rec.m[static_cast<std::size_t>(k)] << (31 - k);
    for (int k = s; k < 32; ++k) {
        std::uint32_t x = v[k - s] ^ (v[k - s] >> s);
        for (int i = 1; i < s; ++i)
            if ((rec.poly_coeff >> (s - 1 - i)) & 1u) x ^= v[k - i];
        v[k] = x;
    }
}

// Visits every composition (k_1..k_d) of `total` into d nonnegative parts.
inline void for_each_composition(int d, int total, const std::function<void(std::span<const int>)>& visit) {
    std::vector<int> k(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == d - 1) {
            k[static_cast<std::size_t>(pos)] = remaining;
            visit(k);
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            k[static_cast<std::size_t>(pos)] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    rec(rec, 0, total);
}

inline std::uint64_t ipow(int b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(b);
    return r;
}

}  // namespace detail

// The first 2^m points of the Sobol' sequence, in Gray-code order (point 1 is
// the origin).  Requires the table to cover dimensions 2..d.
inline DigitalNet sobol_net(int m, int dim, const DirectionNumberTable& table) {
    if (dim < 1) throw std::invalid_argument("sobol_net: d must be >= 1");
    if (m < 0 || m > 31) throw std::invalid_argument("sobol_net: m must be in [0, 31]");
    if (dim > table.max_dimension())
        throw std::runtime_error("sobol_net: direction-number table covers dimensions up to " +
                                 std::to_string(table.max_dimension()) + ", requested d=" +
                                 std::to_string(dim));
    DigitalNet net;
    net.m = m;
    net.dim = dim;
    net.t = dim <= 2 ? std::optional<int>(0) : std::nullopt;
    const std::uint32_t n = 1u << m;
    net.digits.assign(static_cast<std::size_t>(n) * dim, 0);
    std::uint32_t v[32];
    for (int j = 0; j < dim; ++j) {
        detail::sobol_direction_integers(j + 1, table, v);
        std::uint32_t x = 0;
        for (std::uint32_t i = 1; i < n; ++i) {
            x ^= v[std::countr_zero(i)];
            net.digits[static_cast<std::size_t>(i) * dim + j] = x;
        }
    }
    return net;
}

// True iff every base-b elementary interval of volume b^(t-m) contains
// exactly b^t of the points.  `coord(i, j)` must return values in [0,1).
inline bool check_net_property_impl(int n_points, int d,
                                    const std::function<double(int, int)>& coord, int t, int m,
                                    int b) {
    if (t < 0 || t > m) throw std::invalid_argument("check_net_property: need 0 <= t <= m");
    if (b < 2) throw std::invalid_argument("check_net_property: base must be >= 2");
    if (n_points != static_cast<int>(detail::ipow(b, m)))
        throw std::invalid_argument("check_net_property: point count must equal b^m");

    const int target = static_cast<int>(detail::ipow(b, t));
    const std::uint64_t boxes = detail::ipow(b, m - t);
    bool ok = true;
    std::vector<int> count(boxes);
    detail::for_each_composition(d, m - t, [&](std::span<const int> k) {
        if (!ok) return;
        std::fill(count.begin(), count.end(), 0);
        for (int i = 0; i < n_points; ++i) {
            std::uint64_t idx = 0;
            for (int j = 0; j < d; ++j) {
                const double scaled = coord(i, j) * static_cast<double>(detail::ipow(b, k[j]));
                idx = idx * detail::ipow(b, k[j]) + static_cast<std::uint64_t>(scaled);
            }
            ++count[idx];
        }
        for (std::uint64_t c = 0; c < boxes; ++c)
            if (count[c] != target) { ok = false; return; }
    });
    return ok;
}

inline bool check_net_property(const PointSet& points, int t, int m, int d, int b = 2) {
    if (points.dim != d) throw std::invalid_argument("check_net_property: dimension mismatch");
    if (points.n != static_cast<int>(detail::ipow(b, m)))
        throw std::invalid_argument("check_net_property: point set must have exactly b^m rows");
    return check_net_property_impl(points.n, d, [&](int i, int j) { return points.at(i, j); }, t,
                                   m, b);
}

inline bool check_net_property(const DigitalNet& net, int t) {
    return check_net_property_impl(net.n(), net.dim,
                                   [&](int i, int j) { return net.value(i, j); }, t, net.m, 2);
}

}  // namespace cvarsens
