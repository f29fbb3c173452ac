#pragma once

#include <vector>

namespace vsum {

// Minimal dense row-major matrix for the small decompositions this
// project needs; not a general linear-algebra type.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n);
};

struct SvdResult {
    // Descending; ties keep the lower original column first.
    std::vector<double> singular_values;
    // cols x cols; column k is the right singular vector paired with
    // singular_values[k].
    Mat right_vectors;
};

// One-sided Jacobi SVD of an arbitrary m x n dense matrix. Accurate to
// near machine precision for the small matrices used here; cost is
// O(m n^2) per sweep.
SvdResult svd(const Mat& a);

}  // namespace vsum
