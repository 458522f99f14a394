#include <doctest.h>

#include <cmath>

#include "eswap/sampling.hpp"
#include "eswap/spectrum.hpp"
#include "eswap/swap.hpp"

using namespace eswap;

TEST_CASE("RngStream determinism and stream separation") {
    RngStream a(7, 3, 1), b(7, 3, 1);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStream c(7, 3, 1), d(7, 3, 2), e(7, 4, 1), f(8, 3, 1);
    CHECK(c.next_u64() != d.next_u64());
    RngStream c2(7, 3, 1);
    CHECK(c2.next_u64() != e.next_u64());
    RngStream c3(7, 3, 1);
    CHECK(c3.next_u64() != f.next_u64());
}

TEST_CASE("uniform and normal sample statistics") {
    RngStream g(11);
    const int n = 200000;
    double su = 0, su2 = 0;
    for (int i = 0; i < n; ++i) {
        const double u = g.next_uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        su += u;
        su2 += u * u;
    }
    CHECK(std::abs(su / n - 0.5) < 0.005);
    CHECK(std::abs(su2 / n - 1.0 / 3.0) < 0.005);

    double sn = 0, sn2 = 0, sn4 = 0;
    for (int i = 0; i < n; ++i) {
        const double x = g.next_normal();
        sn += x;
        sn2 += x * x;
        sn4 += x * x * x * x;
    }
    CHECK(std::abs(sn / n) < 0.01);
    CHECK(std::abs(sn2 / n - 1.0) < 0.02);
    CHECK(std::abs(sn4 / n - 3.0) < 0.1);
}

TEST_CASE("gaussian factor normalization E|g|^2 = 1") {
    RngStream g(5);
    const auto f = sample_gaussian(60, 60, g);
    CHECK(f.rows() == 60);
    CHECK(f.cols() == 60);
    const double mean_sq = f.entries.squaredNorm() / (60.0 * 60.0);
    CHECK(std::abs(mean_sq - 1.0) < 0.05);
    // real and imaginary parts carry equal variance
    const double re_var = f.entries.real().squaredNorm() / (60.0 * 60.0);
    CHECK(std::abs(re_var - 0.5) < 0.05);
}

TEST_CASE("wishart matrices are PSD with the right mean trace") {
    RngStream g(9);
    const int n = 6, sdim = 4, reps = 200;
    double mean_tr = 0;
    for (int r = 0; r < reps; ++r) {
        const auto w = wishart(n, sdim, g);
        CHECK(w.dimension() == n);
        const auto eigs = eigenvalues(w);
        CHECK(eigs.front() >= -1e-10);
        // rank <= s: the n - s smallest eigenvalues vanish
        for (int i = 0; i < n - sdim; ++i) CHECK(std::abs(eigs[size_t(i)]) < 1e-10);
        mean_tr += w.trace_real();
    }
    mean_tr /= reps;
    CHECK(std::abs(mean_tr - n * sdim) < 0.05 * n * sdim);
}

TEST_CASE("HermitianMatrix rejects non-Hermitian input") {
    Matrix m(2, 2);
    m << Complex(1, 0), Complex(0, 1), Complex(0, 1), Complex(2, 0);
    CHECK_THROWS_AS(HermitianMatrix{m}, std::invalid_argument);
    m(1, 0) = Complex(0, -1);
    CHECK_NOTHROW(HermitianMatrix{m});
}

TEST_CASE("bell projection: P^2 = d P, trace d") {
    for (int d : {2, 3, 4}) {
        const auto p = bell_projection(d).matrix();
        CHECK((p * p - double(d) * p).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(p.trace().real() - d) < 1e-12);
        CHECK(std::abs(p(0 * d + 0, 1 * d + 1).real() - 1.0) < 1e-15);
        CHECK(std::abs(p(0 * d + 1, 0 * d + 1)) < 1e-15);
    }
}

TEST_CASE("swap_direct equals swap_tensor") {
    RngStream g(21);
    for (int d1 : {1, 2, 3})
        for (int d2 : {1, 2, 3})
            for (int sdim : {1, 2, 3}) {
                const auto g1 = sample_gaussian(d1 * d2, sdim, g);
                const auto g2 = sample_gaussian(d1 * d2, sdim, g);
                const auto direct = swap_direct(g1, g2, d1, d2, sdim);
                const auto w1 = HermitianMatrix(g1.entries * g1.entries.adjoint());
                const auto w2 = HermitianMatrix(g2.entries * g2.entries.adjoint());
                const auto tensor = swap_tensor(w1, w2, d1, d2);
                const double scale = direct.matrix().cwiseAbs().maxCoeff();
                CHECK((direct.matrix() - tensor.matrix()).cwiseAbs().maxCoeff() <
                      1e-10 * (1.0 + scale));
            }
}

TEST_CASE("d1 = 1 swap is the blown-up product of the factors") {
    // With no traced leg, W[(k,k'),(l,l')] = W1[k,l] W2[k',l'].
    RngStream g(33);
    const int d2 = 3, sdim = 2;
    const auto g1 = sample_gaussian(d2, sdim, g);
    const auto g2 = sample_gaussian(d2, sdim, g);
    const auto w = swap_direct(g1, g2, 1, d2, sdim).matrix();
    const Matrix w1 = g1.entries * g1.entries.adjoint();
    const Matrix w2 = g2.entries * g2.entries.adjoint();
    for (int k = 0; k < d2; ++k)
        for (int kp = 0; kp < d2; ++kp)
            for (int l = 0; l < d2; ++l)
                for (int lp = 0; lp < d2; ++lp)
                    CHECK(std::abs(w(k * d2 + kp, l * d2 + lp) -
                                   w1(k, l) * w2(kp, lp)) < 1e-10);
}

TEST_CASE("rescale_z trace identity") {
    // Tr Z = Tr W / (d2 s) - d2 s.
    RngStream g(13);
    const int d1 = 2, d2 = 3, sdim = 4;
    const auto g1 = sample_gaussian(d1 * d2, sdim, g);
    const auto g2 = sample_gaussian(d1 * d2, sdim, g);
    const auto w = swap_direct(g1, g2, d1, d2, sdim);
    const auto z = rescale_z(w, d2, sdim);
    CHECK(z.dimension() == d2 * d2);
    CHECK(std::abs(z.trace_real() -
                   (w.trace_real() / (d2 * sdim) - double(d2) * sdim)) < 1e-9);
}

TEST_CASE("mc moments are deterministic and thread-count independent") {
    const auto one = mc_moments(SwapCase::indep, 3, 2, 2, 3, 40, 77, 1);
    const auto four = mc_moments(SwapCase::indep, 3, 2, 2, 3, 40, 77, 4);
    REQUIRE(one.size() == 3);
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].mean == four[i].mean);
        CHECK(one[i].stderr_ == four[i].stderr_);
    }
    const auto again = mc_moments(SwapCase::indep, 3, 2, 2, 3, 40, 77, 4);
    for (size_t i = 0; i < one.size(); ++i) CHECK(one[i].mean == again[i].mean);
}
