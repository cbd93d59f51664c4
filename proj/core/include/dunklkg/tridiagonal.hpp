#pragma once

#include <vector>

namespace dunklkg::specfun {

// Real symmetric tridiagonal matrix: diag has n entries, offdiag n-1.
struct TridiagonalMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag;

    int size() const { return int(diag.size()); }
    void validate() const;
};

struct TridiagonalEigenResult {
    std::vector<double> eigenvalues;        // ascending
    std::vector<double> first_components;   // row 0 of the orthonormal eigenvector matrix
};

// All eigenvalues (ascending) by implicit-shift QL.  When
// want_first_components is set, also accumulates the first component of each
// normalized eigenvector (the quantity Golub-Welsch quadrature needs).
TridiagonalEigenResult symmetric_tridiagonal_eigen(const TridiagonalMatrix& T,
                                                   bool want_first_components = false);

// The k smallest eigenvalues by Sturm-count bisection.  O(n k) per bisection
// sweep, so it stays cheap for the large matrices the grid oracle builds.
std::vector<double> tridiagonal_smallest_eigenvalues(const TridiagonalMatrix& T, int k);

} // namespace dunklkg::specfun
