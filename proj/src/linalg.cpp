#include "freecert/linalg.hpp"

#include <cstddef>

namespace freecert {

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<int> rref(std::vector<RowVec>& rows, int cols) {
    std::vector<int> pivot_cols;
    std::size_t pivot_row = 0;
    for (int col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t found = pivot_row;
        while (found < rows.size() && is_zero(rows[found][col])) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        Rational p = rows[pivot_row][col];
        for (int c = col; c < cols; ++c) rows[pivot_row][c] /= p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row) continue;
            Rational f = rows[r][col];
            if (is_zero(f)) continue;
            for (int c = col; c < cols; ++c) rows[r][c] -= f * rows[pivot_row][c];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    return pivot_cols;
}

}  // namespace

int rank_of_rows(std::vector<RowVec> rows) {
    if (rows.empty()) return 0;
    int cols = static_cast<int>(rows[0].size());
    return static_cast<int>(rref(rows, cols).size());
}

std::vector<RowVec> right_nullspace(const std::vector<RowVec>& rows_in, int cols) {
    std::vector<RowVec> rows = rows_in;
    std::vector<int> pivots = rref(rows, cols);

    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<RowVec> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        RowVec v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace freecert
