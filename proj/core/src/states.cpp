#include "eswap/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "eswap/spectrum.hpp"

namespace eswap {

DensityMatrix::DensityMatrix(Matrix m, std::optional<Bipartition> parts)
    : m_(std::move(m)), parts_(parts) {
    if (m_.rows() != m_.cols())
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    const double max_abs = m_.cwiseAbs().maxCoeff();
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + max_abs))
        throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
    if (std::abs(m_.trace().real() - 1.0) > 1e-10 ||
        std::abs(m_.trace().imag()) > 1e-10)
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-8)
        throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    if (parts_ && static_cast<Eigen::Index>(parts_->dA) * parts_->dB != m_.rows())
        throw std::invalid_argument("DensityMatrix: bipartition does not factor the dimension");
}

DensityMatrix DensityMatrix::with_bipartition(int dA, int dB) const {
    return DensityMatrix(m_, Bipartition{dA, dB});
}

DensityMatrix induced_state(int n, int s, RngStream& stream) {
    const auto w = wishart(n, s, stream);
    const double tr = w.trace_real();
    if (tr <= 0.0) throw std::runtime_error("induced_state: zero-trace Wishart draw");
    return DensityMatrix(w.matrix() / tr);
}

Matrix partial_trace(const Matrix& m, int dA, int dB, TraceSide side) {
    if (m.rows() != static_cast<Eigen::Index>(dA) * dB || m.rows() != m.cols())
        throw std::invalid_argument("partial_trace: dimension not factorable as dA*dB");
    if (side == TraceSide::A) {
        Matrix out = Matrix::Zero(dB, dB);
        for (int a = 0; a < dA; ++a)
            out += m.block(static_cast<Eigen::Index>(a) * dB,
                           static_cast<Eigen::Index>(a) * dB, dB, dB);
        return out;
    }
    Matrix out = Matrix::Zero(dA, dA);
    for (int a = 0; a < dA; ++a)
        for (int c = 0; c < dA; ++c)
            for (int b = 0; b < dB; ++b)
                out(a, c) += m(static_cast<Eigen::Index>(a) * dB + b,
                               static_cast<Eigen::Index>(c) * dB + b);
    return out;
}

Matrix partial_transpose(const Matrix& m, int dA, int dB) {
    if (m.rows() != static_cast<Eigen::Index>(dA) * dB || m.rows() != m.cols())
        throw std::invalid_argument("partial_transpose: dimension not factorable as dA*dB");
    Matrix out(m.rows(), m.cols());
    for (int a = 0; a < dA; ++a)
        for (int c = 0; c < dA; ++c)
            out.block(static_cast<Eigen::Index>(a) * dB,
                      static_cast<Eigen::Index>(c) * dB, dB, dB) =
                m.block(static_cast<Eigen::Index>(a) * dB,
                        static_cast<Eigen::Index>(c) * dB, dB, dB)
                    .transpose();
    return out;
}

bool is_ppt(const DensityMatrix& rho, int dA, int dB, double tol) {
    const Matrix pt = partial_transpose(rho.matrix(), dA, dB);
    Eigen::SelfAdjointEigenSolver<Matrix> solver((pt + pt.adjoint()) / 2.0,
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

DensityMatrix swap_states(const DensityMatrix& rho1, const DensityMatrix& rho2,
                          int d1, int d2) {
    const auto numerator =
        swap_tensor(HermitianMatrix(rho1.matrix()), HermitianMatrix(rho2.matrix()),
                    d1, d2);
    const double tr = numerator.trace_real();
    if (std::abs(tr) < 1e-300)
        throw std::runtime_error("swap_states: zero-trace numerator");
    return DensityMatrix(numerator.matrix() / tr, Bipartition{d2, d2});
}

DensityMatrix maximally_entangled_state(int d) {
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) phi(static_cast<Eigen::Index>(i) * d + i) = amp;
    return DensityMatrix(phi * phi.adjoint(), Bipartition{d, d});
}

double fidelity_with_max_entangled(const DensityMatrix& rho, int d) {
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    if (rho.dimension() != n)
        throw std::invalid_argument("fidelity: dimension mismatch");
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) phi(static_cast<Eigen::Index>(i) * d + i) = amp;
    return (phi.adjoint() * rho.matrix() * phi)(0, 0).real();
}

std::vector<PptScanPoint> ppt_scan(int d, const std::vector<int>& s_values,
                                   int samples, std::uint64_t seed, double tol) {
    if (d < 2) throw std::invalid_argument("ppt_scan: d must be >= 2");
    if (samples < 1) throw std::invalid_argument("ppt_scan: samples must be >= 1");
    std::vector<PptScanPoint> out;
    const int n = d * d;
    for (size_t si = 0; si < s_values.size(); ++si) {
        const int s = s_values[si];
        int ppt_count = 0;
        for (int k = 0; k < samples; ++k) {
            RngStream stream(seed, static_cast<std::uint64_t>(k),
                             static_cast<std::uint64_t>(si));
            const auto rho = induced_state(n, s, stream);
            if (is_ppt(rho, d, d, tol)) ++ppt_count;
        }
        const double frac = static_cast<double>(ppt_count) / samples;
        const double hw = 1.96 * std::sqrt(frac * (1.0 - frac) / samples);
        out.push_back({d, s, samples, frac, hw});
    }
    return out;
}

}  // namespace eswap
