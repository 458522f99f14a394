#pragma once

#include <cstdint>
#include <vector>

#include "eswap/sampling.hpp"
#include "eswap/swap.hpp"

namespace eswap {

/// Full real spectrum, ascending. The input is symmetrized as (M+M*)/2
/// before the dense selfadjoint decomposition.
std::vector<double> eigenvalues(const HermitianMatrix& m);

enum class SwapCase { indep, equal };

/// Sorted eigenvalue sample of one rescaled swap matrix Z, plus the
/// parameters that generated it.
struct EmpiricalSpectrum {
    std::vector<double> eigenvalues;  // ascending, length d2^2
    int d1 = 0, d2 = 0, s = 0;
    std::uint64_t seed = 0;
    SwapCase swap_case = SwapCase::indep;
};

/// One draw of Z for sample index `sample` of the stream (seed, sample).
EmpiricalSpectrum sample_spectrum(SwapCase swap_case, int d1, int d2, int s,
                                  std::uint64_t seed, std::uint64_t sample = 0);

struct MomentEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
};

/// Monte Carlo estimates of (1/d2^2) Tr[Z^p] for p = 1..p_max.
/// Deterministic given the seed: sample i always uses stream (seed, i),
/// independent of the thread count.
std::vector<MomentEstimate> mc_moments(SwapCase swap_case, int p_max, int d1,
                                       int d2, int s, int samples,
                                       std::uint64_t seed, int threads = 1);

/// Monte Carlo estimates of the raw Tr[W^p] for p = 1..p_max (the
/// un-rescaled swapped Wishart matrix).
std::vector<MomentEstimate> mc_w_moments(SwapCase swap_case, int p_max, int d1,
                                         int d2, int s, int samples,
                                         std::uint64_t seed, int threads = 1);

/// Sample variance of (1/d2^2) Tr[Z^2] over `samples` draws.
double mc_variance_tr_z2(SwapCase swap_case, int d1, int d2, int s, int samples,
                         std::uint64_t seed, int threads = 1);

}  // namespace eswap
