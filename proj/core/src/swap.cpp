#include "eswap/swap.hpp"

#include <cmath>
#include <stdexcept>

namespace eswap {

HermitianMatrix swap_direct(const GaussianFactor& g1, const GaussianFactor& g2,
                            int d1, int d2, int s) {
    if (g1.rows() != static_cast<Eigen::Index>(d1) * d2 || g1.cols() != s ||
        g2.rows() != g1.rows() || g2.cols() != s)
        throw std::invalid_argument("swap_direct: factor shape mismatch");

    // g_{(k,k'),(t,t')} = (1/sqrt(d1)) sum_j G1[(j,k),t] G2[(j,k'),t'].
    // For fixed (t,t') this is the d2 x d2 product A_t^T B_{t'} where A_t is
    // the d1 x d2 reshape of G1's column t (j slow).
    Matrix g(static_cast<Eigen::Index>(d2) * d2, static_cast<Eigen::Index>(s) * s);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d1));
    for (int t = 0; t < s; ++t) {
        Eigen::Map<const Matrix> a(g1.entries.col(t).data(), d2, d1);
        for (int tp = 0; tp < s; ++tp) {
            Eigen::Map<const Matrix> b(g2.entries.col(tp).data(), d2, d1);
            const Matrix block = scale * (a * b.transpose());  // (k, k')
            for (int k = 0; k < d2; ++k)
                for (int kp = 0; kp < d2; ++kp)
                    g(static_cast<Eigen::Index>(k) * d2 + kp,
                      static_cast<Eigen::Index>(t) * s + tp) = block(k, kp);
        }
    }
    Matrix w = g * g.adjoint();
    w = (w + w.adjoint().eval()) / 2.0;
    return HermitianMatrix(std::move(w));
}

HermitianMatrix swap_tensor(const HermitianMatrix& w1, const HermitianMatrix& w2,
                            int d1, int d2) {
    const Eigen::Index n = static_cast<Eigen::Index>(d1) * d2;
    if (w1.dimension() != n || w2.dimension() != n)
        throw std::invalid_argument("swap_tensor: dimension not factorable as d1*d2");

    const auto& m1 = w1.matrix();
    const auto& m2 = w2.matrix();

    // T = W1 (x) W2 with legs regrouped to (a,b,k,k'): the d1 legs of both
    // factors form H1, the d2 legs form H2.
    const Eigen::Index n1 = static_cast<Eigen::Index>(d1) * d1;
    const Eigen::Index n2 = static_cast<Eigen::Index>(d2) * d2;
    Matrix t = Matrix::Zero(n1 * n2, n1 * n2);
    auto row_of = [d1, d2](int a, int b, int k, int kp) {
        return ((static_cast<Eigen::Index>(a) * d1 + b) * d2 + k) * d2 + kp;
    };
    for (int a = 0; a < d1; ++a)
        for (int k = 0; k < d2; ++k)
            for (int b = 0; b < d1; ++b)
                for (int kp = 0; kp < d2; ++kp)
                    for (int c = 0; c < d1; ++c)
                        for (int l = 0; l < d2; ++l)
                            for (int e = 0; e < d1; ++e)
                                for (int lp = 0; lp < d2; ++lp)
                                    t(row_of(a, b, k, kp), row_of(c, e, l, lp)) =
                                        m1(static_cast<Eigen::Index>(a) * d2 + k,
                                           static_cast<Eigen::Index>(c) * d2 + l) *
                                        m2(static_cast<Eigen::Index>(b) * d2 + kp,
                                           static_cast<Eigen::Index>(e) * d2 + lp);

    // (T * (P (x) I)) then partial trace over H1, divided by d1.
    const Matrix p = bell_projection(d1).matrix();
    Matrix prod = Matrix::Zero(n1 * n2, n1 * n2);
    for (Eigen::Index r = 0; r < n1 * n2; ++r)
        for (Eigen::Index h1c = 0; h1c < n1; ++h1c)
            for (Eigen::Index h1m = 0; h1m < n1; ++h1m) {
                const Complex pv = p(h1m, h1c);
                if (pv == Complex(0)) continue;
                for (Eigen::Index h2 = 0; h2 < n2; ++h2)
                    prod(r, h1c * n2 + h2) += t(r, h1m * n2 + h2) * pv;
            }

    Matrix w = Matrix::Zero(n2, n2);
    for (Eigen::Index h1 = 0; h1 < n1; ++h1)
        for (Eigen::Index k = 0; k < n2; ++k)
            for (Eigen::Index l = 0; l < n2; ++l)
                w(k, l) += prod(h1 * n2 + k, h1 * n2 + l);
    w /= static_cast<double>(d1);
    w = (w + w.adjoint().eval()) / 2.0;
    return HermitianMatrix(std::move(w));
}

HermitianMatrix rescale_z(const HermitianMatrix& w, int d2, int s) {
    const Eigen::Index n = static_cast<Eigen::Index>(d2) * d2;
    if (w.dimension() != n)
        throw std::invalid_argument("rescale_z: W must have dimension d2^2");
    const double ds = static_cast<double>(d2) * s;
    Matrix z = ds * (w.matrix() / (ds * ds) -
                     Matrix::Identity(n, n) / static_cast<double>(n));
    return HermitianMatrix(std::move(z));
}

HermitianMatrix bell_projection(int d) {
    if (d < 1) throw std::invalid_argument("bell_projection: d must be >= 1");
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    Matrix p = Matrix::Zero(n, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            p(static_cast<Eigen::Index>(i) * d + i,
              static_cast<Eigen::Index>(j) * d + j) = 1.0;
    return HermitianMatrix(std::move(p));
}

}  // namespace eswap
