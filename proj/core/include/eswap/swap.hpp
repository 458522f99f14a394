#pragma once

#include "eswap/sampling.hpp"

namespace eswap {

// Index convention used throughout: a composite (d1*d2)-dimensional leg is
// factored as (j, k) with j in [d1] slow and k in [d2] fast, i.e. row = j*d2 + k.

/// Swapped Wishart matrix from the Gaussian factors directly: builds the
/// d2^2 x s^2 factor G with entries
///   g_{(k,k'),(t,t')} = (1/sqrt(d1)) sum_j G1[(j,k),t] * G2[(j,k'),t']
/// and returns W = G G*. G1, G2 must be (d1*d2) x s.
HermitianMatrix swap_direct(const GaussianFactor& g1, const GaussianFactor& g2,
                            int d1, int d2, int s);

/// Same matrix through the tensor route: forms W1 (x) W2, regroups the legs
/// as (d1 pair) (x) (d2 pair), applies the Bell projection on the d1 pair,
/// partial-traces it and divides by d1. W1, W2 must have dimension d1*d2.
HermitianMatrix swap_tensor(const HermitianMatrix& w1, const HermitianMatrix& w2,
                            int d1, int d2);

/// Z = d2*s * (W / (d2^2 s^2) - I / d2^2); W must have dimension d2^2.
HermitianMatrix rescale_z(const HermitianMatrix& w, int d2, int s);

/// Non-normalized Bell projection on C^d (x) C^d: sum_{i,j} |i><j| (x) |i><j|.
/// P^2 = d*P, trace d.
HermitianMatrix bell_projection(int d);

}  // namespace eswap
