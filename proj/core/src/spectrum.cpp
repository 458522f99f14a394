#include "eswap/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace eswap {

std::vector<double> eigenvalues(const HermitianMatrix& m) {
    Matrix sym = (m.matrix() + m.matrix().adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: decomposition failed");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

namespace {

HermitianMatrix draw_w(SwapCase swap_case, int d1, int d2, int s,
                       std::uint64_t seed, std::uint64_t sample) {
    const int n = d1 * d2;
    RngStream s1(seed, sample, 0);
    const auto g1 = sample_gaussian(n, s, s1);
    if (swap_case == SwapCase::equal) return swap_direct(g1, g1, d1, d2, s);
    RngStream s2(seed, sample, 1);
    const auto g2 = sample_gaussian(n, s, s2);
    return swap_direct(g1, g2, d1, d2, s);
}

/// Per-sample power sums (1/norm) * sum_i lambda_i^p, p = 1..p_max.
std::vector<std::vector<double>> per_sample_power_sums(
    SwapCase swap_case, int p_max, int d1, int d2, int s, int samples,
    std::uint64_t seed, int threads, bool rescaled) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (p_max < 1) throw std::invalid_argument("p_max must be >= 1");
    std::vector<std::vector<double>> rows(static_cast<size_t>(samples));
    const double norm = rescaled ? static_cast<double>(d2) * d2 : 1.0;

    auto run_one = [&](int idx) {
        HermitianMatrix w = draw_w(swap_case, d1, d2, s, seed,
                                   static_cast<std::uint64_t>(idx));
        const HermitianMatrix m = rescaled ? rescale_z(w, d2, s) : std::move(w);
        const auto eigs = eigenvalues(m);
        std::vector<double> sums(static_cast<size_t>(p_max), 0.0);
        for (double lam : eigs) {
            double acc = 1.0;
            for (int p = 1; p <= p_max; ++p) {
                acc *= lam;
                sums[static_cast<size_t>(p - 1)] += acc;
            }
        }
        for (double& v : sums) v /= norm;
        rows[static_cast<size_t>(idx)] = std::move(sums);
    };

    if (threads <= 1) {
        for (int i = 0; i < samples; ++i) run_one(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (int i = next.fetch_add(1); i < samples; i = next.fetch_add(1))
                    run_one(i);
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::vector<MomentEstimate> reduce(const std::vector<std::vector<double>>& rows,
                                   int p_max) {
    const int n = static_cast<int>(rows.size());
    std::vector<MomentEstimate> out(static_cast<size_t>(p_max));
    for (int p = 0; p < p_max; ++p) {
        double mean = 0.0;
        for (const auto& r : rows) mean += r[static_cast<size_t>(p)];
        mean /= n;
        double var = 0.0;
        for (const auto& r : rows) {
            const double d = r[static_cast<size_t>(p)] - mean;
            var += d * d;
        }
        var = (n > 1) ? var / (n - 1) : 0.0;
        out[static_cast<size_t>(p)] = {mean, std::sqrt(var / n)};
    }
    return out;
}

}  // namespace

EmpiricalSpectrum sample_spectrum(SwapCase swap_case, int d1, int d2, int s,
                                  std::uint64_t seed, std::uint64_t sample) {
    const auto w = draw_w(swap_case, d1, d2, s, seed, sample);
    EmpiricalSpectrum spec;
    spec.eigenvalues = eigenvalues(rescale_z(w, d2, s));
    spec.d1 = d1;
    spec.d2 = d2;
    spec.s = s;
    spec.seed = seed;
    spec.swap_case = swap_case;
    return spec;
}

std::vector<MomentEstimate> mc_moments(SwapCase swap_case, int p_max, int d1,
                                       int d2, int s, int samples,
                                       std::uint64_t seed, int threads) {
    return reduce(per_sample_power_sums(swap_case, p_max, d1, d2, s, samples,
                                        seed, threads, /*rescaled=*/true),
                  p_max);
}

std::vector<MomentEstimate> mc_w_moments(SwapCase swap_case, int p_max, int d1,
                                         int d2, int s, int samples,
                                         std::uint64_t seed, int threads) {
    return reduce(per_sample_power_sums(swap_case, p_max, d1, d2, s, samples,
                                        seed, threads, /*rescaled=*/false),
                  p_max);
}

double mc_variance_tr_z2(SwapCase swap_case, int d1, int d2, int s, int samples,
                         std::uint64_t seed, int threads) {
    const auto rows = per_sample_power_sums(swap_case, 2, d1, d2, s, samples,
                                            seed, threads, /*rescaled=*/true);
    double mean = 0.0;
    for (const auto& r : rows) mean += r[1];
    mean /= static_cast<double>(rows.size());
    double var = 0.0;
    for (const auto& r : rows) {
        const double d = r[1] - mean;
        var += d * d;
    }
    return var / static_cast<double>(rows.size() - 1);
}

}  // namespace eswap
