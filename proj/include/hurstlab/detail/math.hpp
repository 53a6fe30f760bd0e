#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hurstlab/error.hpp"

namespace hurstlab::detail {

/// Neumaier-compensated sum. Keeps shift/scale invariance tests honest at
/// the 1e-10 level without resorting to long double accumulation.
inline double sum(std::span<const double> values) {
    double s = 0.0;
    double comp = 0.0;
    for (double v : values) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            comp += (s - t) + v;
        else
            comp += (v - t) + s;
        s = t;
    }
    return s + comp;
}

inline double mean(std::span<const double> values) {
    return sum(values) / static_cast<double>(values.size());
}

inline void require_finite(std::span<const double> values, const char* what) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i]))
            throw DomainError(std::string(what) + ": non-finite value at index " +
                              std::to_string(i));
}

/// Solves A x = b in place for a small dense symmetric system (n <= 4 here).
/// Gaussian elimination with partial pivoting; returns false if singular.
inline bool solve_dense(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (a[pivot * n + col] == 0.0) return false;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
            std::swap(b[col], b[pivot]);
        }
        const double diag = a[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / diag;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i * n + c] * b[c];
        b[i] = acc / a[i * n + i];
    }
    return true;
}

/// Sum of squared residuals of the least-squares polynomial of degree
/// `order` fitted to y over equally spaced abscissae 0..y.size()-1.
/// The fit is done in index coordinates centered on the block midpoint,
/// which keeps the normal equations well conditioned up to order 3.
inline double poly_detrend_ssr(std::span<const double> y, int order) {
    const std::size_t m = y.size();
    const std::size_t dim = static_cast<std::size_t>(order) + 1;
    const double mid = 0.5 * static_cast<double>(m - 1);

    // Normal equations in powers of the centered index u = i - mid.
    std::vector<double> gram(dim * dim, 0.0);
    std::vector<double> rhs(dim, 0.0);
    std::vector<double> pow_u(2 * dim - 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double u = static_cast<double>(i) - mid;
        double p = 1.0;
        for (std::size_t k = 0; k < 2 * dim - 1; ++k) {
            pow_u[k] = p;
            p *= u;
        }
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) gram[r * dim + c] += pow_u[r + c];
            rhs[r] += pow_u[r] * y[i];
        }
    }
    if (!solve_dense(gram, rhs, dim))
        throw NumericalError("singular normal equations in polynomial detrending");

    double ssr = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double u = static_cast<double>(i) - mid;
        double fit = 0.0;
        double p = 1.0;
        for (std::size_t k = 0; k < dim; ++k) {
            fit += rhs[k] * p;
            p *= u;
        }
        const double res = y[i] - fit;
        ssr += res * res;
    }
    return ssr;
}

}  // namespace hurstlab::detail
