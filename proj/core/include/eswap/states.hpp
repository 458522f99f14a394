#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eswap/sampling.hpp"
#include "eswap/swap.hpp"

namespace eswap {

/// Bipartition metadata for a composite system C^dA (x) C^dB.
struct Bipartition {
    int dA = 0;
    int dB = 0;
};

/// Unit-trace positive operator. Validated at construction: Hermitian
/// within 1e-10 relative, trace 1 within 1e-10, min eigenvalue >= -1e-8.
/// Operations needing a bipartition fail loudly when none is attached.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix m, std::optional<Bipartition> parts = {});

    Eigen::Index dimension() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    const std::optional<Bipartition>& bipartition() const { return parts_; }

    DensityMatrix with_bipartition(int dA, int dB) const;

private:
    Matrix m_;
    std::optional<Bipartition> parts_;
};

/// Random induced state W(n,s)/Tr: distribution mu_{n,s}.
DensityMatrix induced_state(int n, int s, RngStream& stream);

enum class TraceSide { A, B };

/// Traces out the named factor of an operator on C^dA (x) C^dB.
Matrix partial_trace(const Matrix& m, int dA, int dB, TraceSide side);

/// Blockwise transpose of the B factor. Involution, trace preserving.
Matrix partial_transpose(const Matrix& m, int dA, int dB);

/// True iff the minimum eigenvalue of rho^Gamma is >= -tol.
bool is_ppt(const DensityMatrix& rho, int dA, int dB, double tol = 1e-8);

/// State-level entanglement swap: Bell-contract the two d1 legs of
/// rho1 (x) rho2 and normalize by the trace of the result. Output lives
/// on C^d2 (x) C^d2 with that bipartition attached.
DensityMatrix swap_states(const DensityMatrix& rho1, const DensityMatrix& rho2,
                          int d1, int d2);

/// Maximally entangled state |phi><phi| on C^d (x) C^d.
DensityMatrix maximally_entangled_state(int d);

/// <phi|rho|phi> against the maximally entangled vector (fidelity with a
/// pure target).
double fidelity_with_max_entangled(const DensityMatrix& rho, int d);

struct PptScanPoint {
    int d = 0;
    int s = 0;
    int samples = 0;
    double ppt_fraction = 0.0;
    double ci_halfwidth = 0.0;  // 95% normal-approximation half-width
};

/// PPT fraction of induced states rho_{d^2,s} under the d (x) d bipartition,
/// one point per entry of s_values. Stream per (s index, sample).
std::vector<PptScanPoint> ppt_scan(int d, const std::vector<int>& s_values,
                                   int samples, std::uint64_t seed,
                                   double tol = 1e-8);

}  // namespace eswap
