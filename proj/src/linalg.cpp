#include "vsum/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vsum {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

SvdResult svd(const Mat& input) {
    const int m = input.rows, n = input.cols;
    Mat g = input;
    Mat v = Mat::identity(n);

    // Hestenes one-sided Jacobi: rotate column pairs until all are
    // mutually orthogonal relative to their norms.
    const double tol = 1e-15;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                for (int i = 0; i < m; ++i) {
                    double gp = g.at(i, p), gq = g.at(i, q);
                    alpha += gp * gp;
                    beta += gq * gq;
                    gamma += gp * gq;
                }
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::fabs(gamma) <= tol * std::sqrt(alpha * beta)) continue;
                rotated = true;

                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;

                for (int i = 0; i < m; ++i) {
                    double gp = g.at(i, p), gq = g.at(i, q);
                    g.at(i, p) = c * gp - s * gq;
                    g.at(i, q) = s * gp + c * gq;
                }
                for (int i = 0; i < n; ++i) {
                    double vp = v.at(i, p), vq = v.at(i, q);
                    v.at(i, p) = c * vp - s * vq;
                    v.at(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        for (int i = 0; i < m; ++i) sum += g.at(i, j) * g.at(i, j);
        sigma[j] = std::sqrt(sum);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return sigma[x] > sigma[y]; });

    SvdResult result;
    result.singular_values.resize(n);
    result.right_vectors = Mat(n, n);
    for (int k = 0; k < n; ++k) {
        result.singular_values[k] = sigma[order[k]];
        for (int i = 0; i < n; ++i) result.right_vectors.at(i, k) = v.at(i, order[k]);
    }
    return result;
}

}  // namespace vsum
