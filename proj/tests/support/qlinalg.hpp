#pragma once

#include <vector>

#include "nullfil/scalar.hpp"

// Exact rank of a rational matrix by Gaussian elimination. Test-only helper
// for the linear-independence checks.

namespace testsupport {

inline std::size_t rank_over_q(std::vector<std::vector<nullfil::Rational>> rows) {
    using nullfil::Rational;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        Rational inv = Rational(1) / rows[rank][col];
        for (std::size_t c = col; c < cols; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace testsupport
