#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace netrobust::detail {

/// Cyclic Jacobi for a small dense symmetric matrix (row-major, k x k).
/// On return `values` holds the eigenvalues and column j of `vectors` the
/// eigenvector for values[j]. The input matrix is overwritten.
inline void jacobiEigen(std::vector<double> &a, std::size_t k, std::vector<double> &values,
                        std::vector<double> &vectors) {
    vectors.assign(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        vectors[i * k + i] = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                const double v = a[i * k + j] * a[i * k + j];
                total += v;
                if (i != j)
                    off += v;
            }
        if (off <= 1e-30 * total || off == 0.0)
            break;

        for (std::size_t p = 0; p + 1 < k; ++p) {
            for (std::size_t q = p + 1; q < k; ++q) {
                const double apq = a[p * k + q];
                if (apq == 0.0)
                    continue;
                const double app = a[p * k + p];
                const double aqq = a[q * k + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0)
                                 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t r = 0; r < k; ++r) {
                    const double arp = a[r * k + p];
                    const double arq = a[r * k + q];
                    a[r * k + p] = c * arp - s * arq;
                    a[r * k + q] = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < k; ++r) {
                    const double apr = a[p * k + r];
                    const double aqr = a[q * k + r];
                    a[p * k + r] = c * apr - s * aqr;
                    a[q * k + r] = s * apr + c * aqr;
                }
                for (std::size_t r = 0; r < k; ++r) {
                    const double vrp = vectors[r * k + p];
                    const double vrq = vectors[r * k + q];
                    vectors[r * k + p] = c * vrp - s * vrq;
                    vectors[r * k + q] = s * vrp + c * vrq;
                }
            }
        }
    }
    values.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        values[i] = a[i * k + i];
}

} // namespace netrobust::detail
