#include "opdl/linalg.hpp"

#include <stdexcept>

namespace opdl {

namespace {

// echelonize in place, returning the rank
std::size_t echelonize(RationalMatrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw std::invalid_argument("echelonize: ragged matrix");
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = rank; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            const std::size_t bits = m[i][col].bit_size();
            if (pivot == rows || bits < best_bits) {
                pivot = i;
                best_bits = bits;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const Rational inv = m[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j)
            if (!m[rank][j].is_zero()) m[rank][j] *= inv;
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (m[rank][j].is_zero()) continue;
                m[i][j] -= f * m[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rational_rank(RationalMatrix m) {
    return echelonize(m);
}

bool row_space_contains(const RationalMatrix& a, const std::vector<Rational>& v) {
    RationalMatrix m = a;
    const std::size_t base = echelonize(m);
    m.resize(base);
    m.push_back(v);
    return echelonize(m) == base;
}

bool row_spaces_equal(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix stacked = a;
    for (const auto& r : b) stacked.push_back(r);
    const std::size_t ra = rational_rank(a);
    const std::size_t rb = rational_rank(b);
    return ra == rb && rational_rank(std::move(stacked)) == ra;
}

}  // namespace opdl
