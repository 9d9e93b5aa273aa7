#pragma once

#include <vector>

#include "freecert/rational.hpp"

namespace freecert {

using RowVec = std::vector<Rational>;

/// Exact rank of a rectangular row list over the rationals.
int rank_of_rows(std::vector<RowVec> rows);

/// Basis of the right kernel {x : A x = 0} of the rectangular matrix whose
/// rows are given. Each basis vector has `cols` entries.
std::vector<RowVec> right_nullspace(const std::vector<RowVec>& rows, int cols);

}  // namespace freecert
