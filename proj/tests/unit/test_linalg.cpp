#include <doctest.h>

#include <cmath>

#include "vsum/linalg.hpp"

using namespace vsum;

namespace {

Mat from_rows(int rows, int cols, std::initializer_list<double> vals) {
    Mat m(rows, cols);
    int i = 0;
    for (double v : vals) m.a[i++] = v;
    return m;
}

// ||A v_k|| must equal sigma_k; columns of V must be orthonormal.
void check_svd_invariants(const Mat& a, const SvdResult& dec) {
    const int n = a.cols;
    for (int k = 0; k < n; ++k) {
        double norm_sq = 0.0;
        for (int r = 0; r < a.rows; ++r) {
            double dot = 0.0;
            for (int c = 0; c < n; ++c) dot += a.at(r, c) * dec.right_vectors.at(c, k);
            norm_sq += dot * dot;
        }
        CHECK(std::sqrt(norm_sq) == doctest::Approx(dec.singular_values[k]).epsilon(1e-10));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r)
                dot += dec.right_vectors.at(r, i) * dec.right_vectors.at(r, j);
            CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
        }
}

}  // namespace

TEST_CASE("svd of a 3x3 matrix matches reference singular values") {
    Mat a = from_rows(3, 3, {2, 0, 1, 0, 3, 1, 1, 1, 1});
    SvdResult dec = svd(a);
    REQUIRE(dec.singular_values.size() == 3);
    CHECK(dec.singular_values[0] == doctest::Approx(3.532088886237956).epsilon(1e-12));
    CHECK(dec.singular_values[1] == doctest::Approx(2.347296355333861).epsilon(1e-12));
    CHECK(dec.singular_values[2] == doctest::Approx(0.12061475842818319).epsilon(1e-9));
    check_svd_invariants(a, dec);
}

TEST_CASE("svd of a tall 5x4 matrix matches reference singular values") {
    Mat a = from_rows(5, 4,
                      {1, 0, 2, 0,
                       3, 1, 0, 1,
                       0, 2, 1, 0,
                       1, 1, 0, 2,
                       0, 0, 1, 1});
    SvdResult dec = svd(a);
    REQUIRE(dec.singular_values.size() == 4);
    CHECK(dec.singular_values[0] == doctest::Approx(4.147456102668012).epsilon(1e-12));
    CHECK(dec.singular_values[1] == doctest::Approx(2.367961173129409).epsilon(1e-12));
    CHECK(dec.singular_values[2] == doctest::Approx(1.896814146834248).epsilon(1e-12));
    CHECK(dec.singular_values[3] == doctest::Approx(1.6104235006242678).epsilon(1e-12));
    check_svd_invariants(a, dec);
}

TEST_CASE("svd of the identity gives unit singular values") {
    Mat a = Mat::identity(4);
    SvdResult dec = svd(a);
    for (double s : dec.singular_values) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    check_svd_invariants(a, dec);
}

TEST_CASE("svd singular values come out in descending order") {
    Mat a = from_rows(4, 4,
                      {3, 1, 0, 0,
                       1, 2, 0, 0,
                       0, 0, 1, 1,
                       0, 0, 2, 1});
    SvdResult dec = svd(a);
    CHECK(dec.singular_values[0] == doctest::Approx(3.6180339887498953).epsilon(1e-12));
    CHECK(dec.singular_values[1] == doctest::Approx(2.6180339887498945).epsilon(1e-12));
    CHECK(dec.singular_values[2] == doctest::Approx(1.3819660112501049).epsilon(1e-12));
    CHECK(dec.singular_values[3] == doctest::Approx(0.38196601125010504).epsilon(1e-9));
    for (size_t i = 1; i < dec.singular_values.size(); ++i)
        CHECK(dec.singular_values[i - 1] >= dec.singular_values[i]);
    check_svd_invariants(a, dec);

    // block structure: topic 0 loads only the first two sentences,
    // topic 1 only the last two
    CHECK(std::fabs(dec.right_vectors.at(0, 0)) == doctest::Approx(0.850650808).epsilon(1e-8));
    CHECK(std::fabs(dec.right_vectors.at(1, 0)) == doctest::Approx(0.525731112).epsilon(1e-8));
    CHECK(std::fabs(dec.right_vectors.at(2, 0)) < 1e-10);
    CHECK(std::fabs(dec.right_vectors.at(3, 0)) < 1e-10);
    CHECK(std::fabs(dec.right_vectors.at(0, 1)) < 1e-10);
    CHECK(std::fabs(dec.right_vectors.at(2, 1)) == doctest::Approx(0.850650808).epsilon(1e-8));
    CHECK(std::fabs(dec.right_vectors.at(3, 1)) == doctest::Approx(0.525731112).epsilon(1e-8));
}

TEST_CASE("svd handles a rank-deficient matrix") {
    // second column is twice the first
    Mat a = from_rows(3, 2, {1, 2, 2, 4, 3, 6});
    SvdResult dec = svd(a);
    CHECK(dec.singular_values[0] == doctest::Approx(std::sqrt(70.0)).epsilon(1e-12));
    CHECK(dec.singular_values[1] == doctest::Approx(0.0).epsilon(1e-10));
    check_svd_invariants(a, dec);
}
