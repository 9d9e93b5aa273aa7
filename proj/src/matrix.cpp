#include "freecert/matrix.hpp"

#include <sstream>
#include <utility>

namespace freecert {

namespace {

// Row-reduces a working copy, returning (determinant, inverse?) depending on
// what the caller asked for. Plain exact Gaussian elimination with the first
// nonzero pivot; entries stay canonical rationals throughout.
struct Elimination {
    Rational det;
    bool singular = false;
    std::vector<Rational> inv;  // row-major, filled when wanted
};

Elimination eliminate(const MatQ& m, bool want_inverse) {
    const int n = m.dim();
    std::vector<Rational> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);

    std::vector<Rational> inv;
    if (want_inverse) {
        inv.assign(static_cast<std::size_t>(n) * n, Rational(0));
        for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + i] = 1;
    }

    auto A = [&](int r, int c) -> Rational& { return a[static_cast<std::size_t>(r) * n + c]; };
    auto B = [&](int r, int c) -> Rational& { return inv[static_cast<std::size_t>(r) * n + c]; };

    Elimination result;
    result.det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(A(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) {
            result.det = 0;
            result.singular = true;
            return result;
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(A(pivot, c), A(col, c));
                if (want_inverse) std::swap(B(pivot, c), B(col, c));
            }
            result.det = -result.det;
        }
        Rational p = A(col, col);
        result.det *= p;
        for (int c = 0; c < n; ++c) {
            A(col, c) /= p;
            if (want_inverse) B(col, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational factor = A(r, col);
            if (is_zero(factor)) continue;
            for (int c = 0; c < n; ++c) {
                A(r, c) -= factor * A(col, c);
                if (want_inverse) B(r, c) -= factor * B(col, c);
            }
        }
    }
    result.inv = std::move(inv);
    return result;
}

}  // namespace

Rational determinant(const MatQ& m) { return eliminate(m, false).det; }

MatQ inverse(const MatQ& m) {
    Elimination e = eliminate(m, true);
    if (e.singular) throw SingularMatrix("matrix is not invertible");
    MatQ out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            out.at(i, j) = e.inv[static_cast<std::size_t>(i) * m.dim() + j];
    return out;
}

MatL to_laurent(const MatQ& m) {
    MatL out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!is_zero(m.at(i, j))) out.at(i, j) = LaurentPoly(m.at(i, j));
    return out;
}

std::string matrix_str(const MatQ& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.dim(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m.at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace freecert
