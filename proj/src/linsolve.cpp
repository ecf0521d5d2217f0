#include "haarbvp/linsolve.hpp"

#include <cmath>
#include <utility>

namespace haarbvp {

double inf_norm(const DenseMatrix& a) {
    double norm = 0.0;
    for (int r = 0; r < a.n; ++r) {
        double row = 0.0;
        for (int c = 0; c < a.n; ++c) row += std::abs(a(r, c));
        if (row > norm) norm = row;
    }
    return norm;
}

std::vector<double> solve(DenseMatrix a, std::vector<double> b) {
    const int n = a.n;
    if (n < 1 || static_cast<int>(b.size()) != n)
        throw Error("solve: dimension mismatch");

    const double pivot_floor = 1e-13 * inf_norm(a);

    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best > pivot_floor))
            throw SingularMatrix("pivot " + std::to_string(best) + " below threshold at column " +
                                 std::to_string(col));
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(a(piv, c), a(col, c));
            std::swap(b[piv], b[col]);
        }
        const double inv = 1.0 / a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = a(r, col) * inv;
            if (f == 0.0) continue;
            a(r, col) = 0.0;
            for (int c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }

    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
        x[r] = s / a(r, r);
        if (!std::isfinite(x[r])) throw NonFinite("solve: non-finite solution component");
    }
    return x;
}

}  // namespace haarbvp
