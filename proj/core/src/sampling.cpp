#include "eswap/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eswap {

double RngStream::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_uniform();
    while (u1 <= 0.0) u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

GaussianFactor sample_gaussian(int rows, int cols, RngStream& stream) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("sample_gaussian: rows, cols must be >= 1");
    Matrix m(rows, cols);
    const double scale = std::sqrt(0.5);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = Complex(scale * stream.next_normal(),
                              scale * stream.next_normal());
    return GaussianFactor{std::move(m)};
}

HermitianMatrix::HermitianMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("HermitianMatrix: matrix must be square");
    const double max_abs = m_.cwiseAbs().maxCoeff();
    const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-10 * (1.0 + max_abs))
        throw std::invalid_argument("HermitianMatrix: input is not Hermitian within tolerance");
}

HermitianMatrix wishart(int n, int s, RngStream& stream) {
    const auto g = sample_gaussian(n, s, stream);
    Matrix w = g.entries * g.entries.adjoint();
    w = (w + w.adjoint().eval()) / 2.0;  // kill roundoff asymmetry
    return HermitianMatrix(std::move(w));
}

}  // namespace eswap
