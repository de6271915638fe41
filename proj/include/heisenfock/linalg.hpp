#pragma once

#include "heisenfock/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace heisenfock {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank over Q by fraction-exact Gaussian elimination. Rows may be ragged-free only.
inline std::size_t rank(RationalMatrix m) {
    std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace heisenfock
