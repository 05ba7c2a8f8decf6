#include "ecsum/linalg.hpp"

namespace ecsum {

FieldValue det_exact(const Matrix& rows) {
    if (rows.empty()) {
        throw Error("determinant of an empty matrix");
    }
    const size_t n = rows.size();
    const Field& f = rows[0][0].field();
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw Error("determinant of a non-square matrix");
        }
        for (const auto& entry : row) {
            if (entry.field() != f) {
                throw FieldMismatchError("matrix entries from different fields");
            }
        }
    }

    if (n <= 4) return cofactor_det(rows);

    Matrix m = rows;
    bool negate = false;
    FieldValue prev = f.one();
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return f.zero();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = f.zero();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace ecsum
