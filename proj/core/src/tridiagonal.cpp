#include "dunklkg/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dunklkg::specfun {

void TridiagonalMatrix::validate() const {
    if (diag.empty())
        throw std::domain_error("TridiagonalMatrix: empty diagonal");
    if (offdiag.size() + 1 != diag.size())
        throw std::domain_error("TridiagonalMatrix: offdiag must have size n-1");
}

TridiagonalEigenResult symmetric_tridiagonal_eigen(const TridiagonalMatrix& T,
                                                   bool want_first_components) {
    T.validate();
    const int n = T.size();
    std::vector<double> d = T.diag;
    std::vector<double> e = T.offdiag;
    e.push_back(0.0);
    std::vector<double> z;
    if (want_first_components) {
        z.assign(n, 0.0);
        z[0] = 1.0;
    }

    const double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                if (iter++ == 50)
                    throw std::runtime_error("symmetric_tridiagonal_eigen: QL did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (want_first_components) {
                        f = z[i + 1];
                        z[i + 1] = s * z[i] + c * f;
                        z[i] = c * z[i] - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

    TridiagonalEigenResult result;
    result.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) result.eigenvalues[i] = d[order[i]];
    if (want_first_components) {
        result.first_components.resize(n);
        for (int i = 0; i < n; ++i) result.first_components[i] = z[order[i]];
    }
    return result;
}

namespace {

// Number of eigenvalues of T at or below lambda (Sturm pivot count). A pivot
// of exactly zero means lambda is an eigenvalue of a leading submatrix; it
// must be counted as negative, matching the -pivmin it becomes for the next
// division, or the count dips by one exactly at such lambdas and bisection
// can stall there (integer-entry matrices hit this on dyadic midpoints).
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double lambda) {
    const double pivmin = std::numeric_limits<double>::min() /
                          std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = d[0] - lambda;
    if (q <= 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (std::fabs(q) < pivmin) q = std::copysign(pivmin, q == 0.0 ? -1.0 : q);
        q = d[i] - lambda - e[i - 1] * e[i - 1] / q;
        if (q <= 0.0) ++count;
    }
    return count;
}

} // namespace

std::vector<double> tridiagonal_smallest_eigenvalues(const TridiagonalMatrix& T, int k) {
    T.validate();
    const int n = T.size();
    if (k < 1 || k > n)
        throw std::domain_error("tridiagonal_smallest_eigenvalues: k out of range");

    // Gershgorin bounds.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        double r = (i > 0 ? std::fabs(T.offdiag[i - 1]) : 0.0) +
                   (i < n - 1 ? std::fabs(T.offdiag[i]) : 0.0);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    std::vector<double> result(k);
    for (int j = 0; j < k; ++j) {
        double a = lo, b = hi;
        // Resolve to local relative precision: Gershgorin ranges are huge for
        // fine grids and a range-based cutoff would swamp small eigenvalues.
        for (int iter = 0; iter < 120; ++iter) {
            double local = std::max({std::fabs(a), std::fabs(b), 1.0});
            if (b - a <= 1e-15 * local) break;
            double mid = 0.5 * (a + b);
            if (sturm_count(T.diag, T.offdiag, mid) > j)
                b = mid;
            else
                a = mid;
        }
        result[j] = 0.5 * (a + b);
    }
    return result;
}

} // namespace dunklkg::specfun
