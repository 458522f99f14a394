#include <doctest.h>

#include <cmath>

#include "eswap/states.hpp"

using namespace eswap;

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace

TEST_CASE("DensityMatrix validation") {
    Matrix ok = Matrix::Identity(3, 3) / 3.0;
    CHECK_NOTHROW(DensityMatrix{ok});

    Matrix bad_trace = Matrix::Identity(3, 3);
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::invalid_argument);

    Matrix not_herm = ok;
    not_herm(0, 1) = Complex(0.1, 0.0);
    CHECK_THROWS_AS(DensityMatrix{not_herm}, std::invalid_argument);

    Matrix not_psd = Matrix::Zero(2, 2);
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix{not_psd}, std::invalid_argument);
}

TEST_CASE("induced states are states; mean is maximally mixed") {
    RngStream g(3);
    const int n = 4, sdim = 5, reps = 300;
    Matrix mean = Matrix::Zero(n, n);
    for (int r = 0; r < reps; ++r) {
        const auto rho = induced_state(n, sdim, g);
        CHECK(rho.dimension() == n);
        CHECK(std::abs(rho.matrix().trace().real() - 1.0) < 1e-12);
        mean += rho.matrix();
    }
    mean /= reps;
    CHECK((mean - Matrix::Identity(n, n) / double(n)).cwiseAbs().maxCoeff() < 0.03);
}

TEST_CASE("partial trace of a product splits") {
    RngStream g(8);
    const auto a = induced_state(2, 3, g).matrix();
    const auto b = induced_state(3, 3, g).matrix();
    const Matrix ab = kron(a, b);
    CHECK((partial_trace(ab, 2, 3, TraceSide::B) - a).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((partial_trace(ab, 2, 3, TraceSide::A) - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial transpose is a trace-preserving involution") {
    RngStream g(15);
    const auto rho = induced_state(6, 7, g).matrix();
    const Matrix pt = partial_transpose(rho, 2, 3);
    CHECK(std::abs(pt.trace().real() - 1.0) < 1e-12);
    CHECK((partial_transpose(pt, 2, 3) - rho).cwiseAbs().maxCoeff() < 1e-14);
    // on a product it transposes the B factor only
    const auto a = induced_state(2, 2, g).matrix();
    const auto b = induced_state(3, 3, g).matrix();
    CHECK((partial_transpose(kron(a, b), 2, 3) - kron(a, b.transpose()))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
}

TEST_CASE("PPT detects the maximally entangled state, passes products") {
    for (int d : {2, 3}) {
        const auto phi = maximally_entangled_state(d);
        CHECK_FALSE(is_ppt(phi, d, d));
        CHECK(std::abs(fidelity_with_max_entangled(phi, d) - 1.0) < 1e-12);
    }
    RngStream g(19);
    const auto a = induced_state(2, 4, g).matrix();
    const auto b = induced_state(2, 4, g).matrix();
    CHECK(is_ppt(DensityMatrix(kron(a, b)), 2, 2));
    // maximally mixed is PPT
    CHECK(is_ppt(DensityMatrix(Matrix::Identity(4, 4) / 4.0), 2, 2));
}

TEST_CASE("swapping two maximally entangled states returns one") {
    for (int d : {2, 3}) {
        const auto phi = maximally_entangled_state(d);
        const auto out = swap_states(phi, phi, d, d);
        CHECK(out.dimension() == d * d);
        REQUIRE(out.bipartition().has_value());
        CHECK(out.bipartition()->dA == d);
        CHECK(out.bipartition()->dB == d);
        CHECK(fidelity_with_max_entangled(out, d) >= 1.0 - 1e-10);
    }
}

TEST_CASE("swapping product states yields a product (PPT) state") {
    RngStream g(27);
    const int d1 = 2, d2 = 2;
    const auto a1 = induced_state(d1, 4, g).matrix();
    const auto b1 = induced_state(d2, 4, g).matrix();
    const auto a2 = induced_state(d1, 4, g).matrix();
    const auto b2 = induced_state(d2, 4, g).matrix();
    const auto out = swap_states(DensityMatrix(kron(a1, b1)),
                                 DensityMatrix(kron(a2, b2)), d1, d2);
    // contracting the product legs cannot create entanglement
    CHECK(is_ppt(out, d2, d2));
}

TEST_CASE("ppt scan is deterministic with monotone fractions") {
    const std::vector<int> svals{2, 64};
    const auto pts = ppt_scan(2, svals, 60, 101);
    REQUIRE(pts.size() == 2);
    for (const auto& pt : pts) {
        CHECK(pt.d == 2);
        CHECK(pt.samples == 60);
        CHECK(pt.ppt_fraction >= 0.0);
        CHECK(pt.ppt_fraction <= 1.0);
        CHECK(pt.ci_halfwidth >= 0.0);
    }
    CHECK(pts[0].s == 2);
    CHECK(pts[1].s == 64);
    CHECK(pts[1].ppt_fraction > pts[0].ppt_fraction);

    const auto again = ppt_scan(2, svals, 60, 101);
    CHECK(again[0].ppt_fraction == pts[0].ppt_fraction);
    CHECK(again[1].ppt_fraction == pts[1].ppt_fraction);
}
