#pragma once

#include <optional>
#include <vector>

#include "ecsum/field.hpp"

namespace ecsum {

using Matrix = std::vector<std::vector<FieldValue>>;

// Division-free Laplace expansion along the first row. Works for any ring
// element with +, -, * (field values, polynomials). Exponential in the
// dimension; intended for dim <= 4.
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& rows) {
    const size_t n = rows.size();
    if (n == 1) return rows[0][0];
    std::optional<T> acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<T>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            row.reserve(n - 1);
            for (size_t jj = 0; jj < n; ++jj) {
                if (jj != j) row.push_back(rows[i][jj]);
            }
            minor.push_back(std::move(row));
        }
        T term = rows[0][j] * cofactor_det(minor);
        if (!acc) {
            acc = std::move(term);
        } else if (j % 2 == 0) {
            acc = *acc + term;
        } else {
            acc = *acc - term;
        }
    }
    return *acc;
}

// Exact determinant: cofactor expansion for dim <= 4, fraction-free
// (Bareiss) elimination with row pivoting above that. The Bareiss recurrence
// keeps intermediate rational entries from outgrowing the naive elimination.
FieldValue det_exact(const Matrix& rows);

}  // namespace ecsum
