#pragma once

#include <Eigen/Dense>
#include <complex>

#include "eswap/rng.hpp"

namespace eswap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Dense complex matrix of i.i.d. standard complex Gaussians
/// (real and imaginary parts each N(0, 1/2), so E|g|^2 = 1).
struct GaussianFactor {
    Matrix entries;

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
};

GaussianFactor sample_gaussian(int rows, int cols, RngStream& stream);

/// Dense square complex matrix asserted Hermitian at construction:
/// max entrywise |M - M*| <= 1e-10 * (1 + max |M|).
class HermitianMatrix {
public:
    explicit HermitianMatrix(Matrix m);

    Eigen::Index dimension() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }

    double trace_real() const { return m_.trace().real(); }

private:
    Matrix m_;
};

/// W = G G* with G an n x s complex Gaussian factor; PSD, rank <= min(n,s).
HermitianMatrix wishart(int n, int s, RngStream& stream);

}  // namespace eswap
