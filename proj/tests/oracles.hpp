#pragma once

// Self-contained reference implementations used to compute expected values
// independently of the library under test: explicit series where the library
// uses recurrences, brute-force bisection where it uses Sturm counting,
// trapezoid sums where it uses Gaussian rules.  Clarity over speed.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace testoracle {

inline double lg(double x) { return std::lgamma(x); }

// L_n^alpha(x) = sum_{k=0}^n binom(n+alpha, n-k) (-x)^k / k!
// The alternating terms can dwarf the result, so the sum is only accurate to
// ~eps * sum|term|; abs_sum reports that scale for tolerance choices.
inline double laguerre_series(int n, double alpha, double x, double* abs_sum = nullptr) {
    double acc = 0.0;
    double mag = 0.0;
    double sign = 1.0;
    double xk = 1.0;
    for (int k = 0; k <= n; ++k) {
        double binom = std::exp(lg(n + alpha + 1.0) - lg(k + alpha + 1.0) -
                                lg(double(n - k + 1)));
        double term = binom * xk / std::exp(lg(double(k + 1)));
        acc += sign * term;
        mag += std::fabs(term);
        sign = -sign;
        xk *= x;
    }
    if (abs_sum) *abs_sum = mag;
    return acc;
}

// P_n^{(a,b)}(x) = Gamma(a+n+1)/(n! Gamma(a+b+n+1))
//                  * sum_k C(n,k) Gamma(a+b+n+k+1)/Gamma(a+k+1) ((x-1)/2)^k
// Same cancellation caveat as laguerre_series; abs_sum carries sum|term|.
inline double jacobi_series(int n, double a, double b, double x,
                            double* abs_sum = nullptr) {
    double acc = 0.0;
    double mag = 0.0;
    double zk = 1.0;
    for (int k = 0; k <= n; ++k) {
        double term = std::exp(lg(double(n + 1)) - lg(double(k + 1)) -
                               lg(double(n - k + 1)) + lg(a + b + n + k + 1.0) -
                               lg(a + k + 1.0));
        acc += term * zk;
        mag += std::fabs(term * zk);
        zk *= (x - 1.0) / 2.0;
    }
    double pre = std::exp(lg(a + n + 1.0) - lg(double(n + 1)) - lg(a + b + n + 1.0));
    if (abs_sum) *abs_sum = mag * pre;
    return acc * pre;
}

// int_{-1}^{1} (1-z)^a (1+z)^b z^k dz. Integrating z^k against
// d[(1-z)^{a+1}(1+z)^{b+1}] gives the stable two-term recurrence
//   m_{k+1} = [(b-a) m_k + k m_{k-1}] / (a+b+2+k),
// seeded by the beta integral m_0 = 2^{a+b+1} B(a+1, b+1); a binomial
// expansion would cancel like 3^k and is useless past k ~ 15.
inline double jacobi_moment(double a, double b, int k) {
    double m0 = std::pow(2.0, a + b + 1.0) *
                std::exp(lg(a + 1.0) + lg(b + 1.0) - lg(a + b + 2.0));
    if (k == 0) return m0;
    double prev = m0;
    double cur = (b - a) / (a + b + 2.0) * m0;
    for (int j = 1; j < k; ++j) {
        double next = ((b - a) * cur + double(j) * prev) / (a + b + 2.0 + j);
        prev = cur;
        cur = next;
    }
    return cur;
}

inline double trapezoid(const std::vector<double>& xs, const std::vector<double>& ys) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        acc += 0.5 * (ys[i] + ys[i + 1]) * (xs[i + 1] - xs[i]);
    return acc;
}

inline double trapezoid_fn(const std::function<double(double)>& f, double a, double b,
                           int panels) {
    double h = (b - a) / panels;
    double acc = 0.5 * (f(a) + f(b));
    for (int i = 1; i < panels; ++i) acc += f(a + i * h);
    return acc * h;
}

// All eigenvalues of a small symmetric tridiagonal matrix: bisection on the
// characteristic-determinant recursion over a fine bracket scan.
inline std::vector<double> tridiag_eigen_bruteforce(const std::vector<double>& diag,
                                                    const std::vector<double>& off) {
    auto det = [&](double lambda) {
        double pm1 = 1.0, p = diag[0] - lambda;
        for (std::size_t k = 1; k < diag.size(); ++k) {
            double next = (diag[k] - lambda) * p - off[k - 1] * off[k - 1] * pm1;
            pm1 = p;
            p = next;
        }
        return p;
    };
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(off[i - 1]);
        if (i < off.size()) r += std::fabs(off[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    lo -= 1.0;
    hi += 1.0;
    const int scan = 200000;
    std::vector<double> roots;
    double a = lo, fa = det(a);
    for (int i = 1; i <= scan; ++i) {
        double b = lo + (hi - lo) * i / scan;
        double fb = det(b);
        if (fa == 0.0) roots.push_back(a);
        else if (fa * fb < 0.0) {
            double x = a, y = b, fx = fa;
            for (int it = 0; it < 100; ++it) {
                double m = 0.5 * (x + y), fm = det(m);
                if (fx * fm <= 0.0) y = m;
                else {
                    x = m;
                    fx = fm;
                }
            }
            roots.push_back(0.5 * (x + y));
        }
        a = b;
        fa = fb;
    }
    if (roots.size() != diag.size())
        throw std::runtime_error("bracket scan missed an eigenvalue");
    return roots;
}

// Dense polynomials with exact coefficient arithmetic, for symbolic Dunkl
// calculus on the test side.
struct Poly {
    std::vector<double> c; // c[k] multiplies x^k

    double operator()(double x) const {
        double acc = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
};

inline Poly derive(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.c.size(); ++k) d.c.push_back(double(k) * p.c[k]);
    return d;
}

inline Poly reflect_poly(const Poly& p) {
    Poly r = p;
    for (std::size_t k = 1; k < r.c.size(); k += 2) r.c[k] = -r.c[k];
    return r;
}

// D x^k = (k + mu (1 - (-1)^k)) x^{k-1}: exact coefficient-level Dunkl derivative.
inline Poly dunkl_poly(const Poly& p, double mu) {
    Poly d;
    if (p.c.size() <= 1) return d;
    d.c.assign(p.c.size() - 1, 0.0);
    for (std::size_t k = 1; k < p.c.size(); ++k) {
        double factor = double(k) + (k % 2 == 1 ? 2.0 * mu : 0.0);
        d.c[k - 1] = factor * p.c[k];
    }
    return d;
}

inline Poly multiply(const Poly& a, const Poly& b) {
    Poly p;
    if (a.c.empty() || b.c.empty()) return p;
    p.c.assign(a.c.size() + b.c.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
    return p;
}

} // namespace testoracle
