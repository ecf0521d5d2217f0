#pragma once

#include <vector>

#include "haarbvp/errors.hpp"

namespace haarbvp {

// Square dense matrix, row-major.
struct DenseMatrix {
    int n = 0;
    std::vector<double> entries;

    DenseMatrix() = default;
    explicit DenseMatrix(int dim) : n(dim), entries(static_cast<size_t>(dim) * dim, 0.0) {}

    double& operator()(int r, int c) { return entries[static_cast<size_t>(r) * n + c]; }
    double operator()(int r, int c) const { return entries[static_cast<size_t>(r) * n + c]; }
};

double inf_norm(const DenseMatrix& a);

// LU factorization with partial pivoting. Throws SingularMatrix when a pivot
// magnitude drops below 1e-13 * ||A||_inf.
std::vector<double> solve(DenseMatrix a, std::vector<double> b);

}  // namespace haarbvp
