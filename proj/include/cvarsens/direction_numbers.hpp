#pragma once

// Joe-Kuo direction numbers for Sobol' sequence construction.  The text
// format is one record per line, `d s a m_1 ... m_s`, optionally preceded by
// a header line (detected by a non-numeric first token):
//   d  -- dimension index (>= 2; dimension 1 is the implicit van der Corput
//         sequence and has no record),
//   s  -- degree of the primitive polynomial,
//   a  -- encoded middle coefficients of the polynomial,
//   m_j -- initial direction integers, odd and < 2^j.

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvarsens {

struct DirectionNumberRecord {
    int dimension = 0;
    int degree = 0;
    std::uint32_t poly_coeff = 0;
    std::vector<std::uint32_t> m;
};

class DirectionNumberTable {
  public:
    DirectionNumberTable() = default;

    explicit DirectionNumberTable(std::vector<DirectionNumberRecord> records)
        : records_(std::move(records)) {
        for (std::size_t i = 0; i < records_.size(); ++i) {
            if (records_[i].dimension != static_cast<int>(i) + 2)
                throw std::invalid_argument(
                    "direction numbers: records must cover dimensions 2.. with no gaps");
        }
    }

    // Highest dimension covered, counting the implicit dimension 1.
    int max_dimension() const { return static_cast<int>(records_.size()) + 1; }

    const DirectionNumberRecord& record(int dimension) const {
        if (dimension < 2 || dimension > max_dimension())
            throw std::out_of_range("direction numbers: no record for dimension " +
                                    std::to_string(dimension));
        return records_[static_cast<std::size_t>(dimension) - 2];
    }

  private:
    std::vector<DirectionNumberRecord> records_;
};

inline DirectionNumberTable load_direction_numbers(std::istream& in) {
    std::vector<DirectionNumberRecord> records;
    std::string line;
    int line_no = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first_content_line &&
            !(std::isdigit(static_cast<unsigned char>(first[0])) || first[0] == '-')) {
            first_content_line = false;  // header line
            continue;
        }
        first_content_line = false;

        auto fail = [&](const std::string& what) -> std::runtime_error {
            return std::runtime_error("direction numbers: line " + std::to_string(line_no) +
                                      ": " + what);
        };

        long long d = 0, s = 0, a = 0;
        try {
            d = std::stoll(first);
        } catch (const std::exception&) {
            throw fail("expected dimension index, got '" + first + "'");
        }
        if (!(ls >> s >> a)) throw fail("expected `d s a m_1 ... m_s`");
        if (d < 2) throw fail("dimension must be >= 2");
        if (s < 1 || s > 31) throw fail("polynomial degree out of range");
        if (a < 0) throw fail("polynomial coefficient must be nonnegative");

        DirectionNumberRecord rec;
        rec.dimension = static_cast<int>(d);
        rec.degree = static_cast<int>(s);
        rec.poly_coeff = static_cast<std::uint32_t>(a);
        for (int j = 1; j <= s; ++j) {
            long long m = 0;
            if (!(ls >> m)) throw fail("expected " + std::to_string(s) + " direction integers");
            if (m <= 0 || m % 2 == 0)
                throw fail("direction integer m_" + std::to_string(j) + " must be odd");
            if (m >= (1LL << j))
                throw fail("direction integer m_" + std::to_string(j) + " must be < 2^" +
                           std::to_string(j));
            rec.m.push_back(static_cast<std::uint32_t>(m));
        }
        long long extra;
        if (ls >> extra) throw fail("trailing tokens after m_" + std::to_string(s));

        int expected = records.empty() ? 2 : records.back().dimension + 1;
        if (rec.dimension != expected)
            throw fail("expected dimension " + std::to_string(expected) + ", got " +
                       std::to_string(rec.dimension));
        records.push_back(std::move(rec));
    }
    return DirectionNumberTable(std::move(records));
}

inline DirectionNumberTable load_direction_numbers_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open direction-number file: " + path.string());
    return load_direction_numbers(in);
}

namespace detail {
// The first 63 records of the Joe-Kuo "new-joe-kuo-6" table, enough for all
// bundled experiments.  Larger tables in the same format can be loaded from
// a file (see data/new-joe-kuo-6.txt for the shipped copy of this one).
inline constexpr const char* kJoeKuoD6Text = R"(d       s       a       m_i
2 1 0 1
3 2 1 1 3
4 3 1 1 3 1
5 3 2 1 1 1
6 4 1 1 1 3 3
7 4 4 1 3 5 13
8 5 2 1 1 5 5 17
9 5 4 1 1 5 5 5
10 5 7 1 1 7 11 19
11 5 11 1 1 5 1 1
12 5 13 1 1 1 3 11
13 5 14 1 3 5 5 31
14 6 1 1 3 3 9 7 49
15 6 13 1 1 1 15 21 21
16 6 16 1 3 1 13 27 49
17 6 19 1 1 1 15 7 5
18 6 22 1 3 1 15 13 25
19 6 25 1 1 5 5 19 61
20 7 1 1 3 7 11 23 15 103
21 7 4 1 3 7 13 13 15 69
22 7 7 1 1 3 13 7 35 63
23 7 8 1 3 5 9 1 25 53
24 7 14 1 3 1 13 9 35 107
25 7 19 1 3 1 5 27 61 31
26 7 21 1 1 5 11 19 41 61
27 7 28 1 3 5 3 3 13 69
28 7 31 1 1 7 13 1 19 1
29 7 32 1 3 7 5 13 19 59
30 7 37 1 1 3 9 25 29 41
31 7 41 1 3 5 13 23 1 55
32 7 42 1 3 7 3 13 59 17
33 7 50 1 3 1 3 5 53 69
34 7 55 1 1 5 5 23 33 13
35 7 56 1 1 7 7 1 61 123
36 7 59 1 1 7 9 13 61 49
37 7 62 1 3 3 5 3 55 33
38 8 14 1 3 1 15 31 13 49 245
39 8 21 1 3 5 15 31 59 63 97
40 8 22 1 3 1 11 11 11 77 249
41 8 38 1 3 1 11 27 43 71 9
42 8 47 1 1 7 15 21 11 81 45
43 8 49 1 3 7 3 25 31 65 79
44 8 50 1 3 1 1 19 11 3 205
45 8 52 1 1 5 9 19 21 29 157
46 8 56 1 3 7 11 1 33 89 185
47 8 67 1 3 3 3 15 9 79 71
48 8 70 1 3 7 11 15 39 119 27
49 8 84 1 1 3 1 11 31 97 225
50 8 97 1 1 1 3 23 43 57 177
51 8 103 1 3 7 7 17 17 37 71
52 8 115 1 3 1 5 27 63 123 213
53 8 122 1 1 3 5 11 43 53 133
54 9 8 1 3 5 5 29 17 47 173 479
55 9 13 1 3 3 11 3 1 109 9 69
56 9 16 1 1 1 5 17 39 23 5 343
57 9 22 1 3 1 5 25 15 31 103 499
58 9 25 1 1 1 11 11 17 63 105 183
59 9 44 1 1 5 11 9 29 97 231 363
60 9 47 1 1 5 15 19 45 41 7 383
61 9 52 1 3 7 7 31 19 83 137 221
62 9 55 1 1 1 3 23 15 111 223 83
63 9 59 1 1 5 13 31 15 55 25 161
64 9 62 1 1 3 13 25 47 39 87 257
)";
}  // namespace detail

// Table embedded for convenience; identical to data/new-joe-kuo-6.txt.
inline const DirectionNumberTable& builtin_direction_numbers() {
    static const DirectionNumberTable table = [] {
        std::istringstream in(detail::kJoeKuoD6Text);
        return load_direction_numbers(in);
    }();
    return table;
}

}  // namespace cvarsens
