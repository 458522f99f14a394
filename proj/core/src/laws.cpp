#include "eswap/laws.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace eswap {

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-9) {
    if (b <= a) return 0.0;
    // Seed the recursion with 7 panels. An odd panel count breaks the
    // symmetries that can make the first two Simpson estimates of an even
    // integrand agree while both are wrong (e.g. sin^6 t cos^2 t).
    const int panels = 7;
    double acc = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double pa = a + (b - a) * k / panels;
        const double pb = a + (b - a) * (k + 1) / panels;
        const double fa = f(pa), fb = f(pb), fm = f(0.5 * (pa + pb));
        const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
        acc += adaptive_simpson(f, pa, pb, fa, fm, fb, whole, tol / panels, 40);
    }
    return acc;
}

}  // namespace

double semicircle_density(double x) {
    if (x <= -2.0 || x >= 2.0) return 0.0;
    return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double mp_density(double x, double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("mp_density: lambda must be > 0");
    const double lo = (std::sqrt(lambda) - 1.0) * (std::sqrt(lambda) - 1.0);
    const double hi = (std::sqrt(lambda) + 1.0) * (std::sqrt(lambda) + 1.0);
    if (x <= lo || x >= hi || x <= 0.0) return 0.0;
    const double arg = 4.0 * lambda - (x - 1.0 - lambda) * (x - 1.0 - lambda);
    if (arg <= 0.0) return 0.0;
    return std::sqrt(arg) / (2.0 * std::numbers::pi * x);
}

double mp_atom(double lambda) { return std::max(0.0, 1.0 - lambda); }

double z_limit_density(double x, double c) {
    if (c <= 0.0) throw std::invalid_argument("z_limit_density: c must be > 0");
    return c * mp_density(c * x + c * c, c * c);
}

LimitLaw::LimitLaw(Kind kind, double param) : kind_(kind), param_(param) {
    switch (kind_) {
        case Kind::semicircle:
            lo_ = -2.0;
            hi_ = 2.0;
            break;
        case Kind::mp: {
            const double r = std::sqrt(param_);
            lo_ = (r - 1.0) * (r - 1.0);
            hi_ = (r + 1.0) * (r + 1.0);
            atom_pos_ = 0.0;
            atom_mass_ = mp_atom(param_);
            break;
        }
        case Kind::z_limit:
            lo_ = 1.0 / param_ - 2.0;
            hi_ = 1.0 / param_ + 2.0;
            atom_pos_ = -param_;
            atom_mass_ = std::max(0.0, 1.0 - param_ * param_);
            break;
    }
}

LimitLaw LimitLaw::semicircle() { return LimitLaw(Kind::semicircle, 0.0); }

LimitLaw LimitLaw::mp(double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("LimitLaw::mp: lambda must be > 0");
    return LimitLaw(Kind::mp, lambda);
}

LimitLaw LimitLaw::z_limit(double c) {
    if (c <= 0.0) throw std::invalid_argument("LimitLaw::z_limit: c must be > 0");
    return LimitLaw(Kind::z_limit, c);
}

double LimitLaw::density(double x) const {
    switch (kind_) {
        case Kind::semicircle: return semicircle_density(x);
        case Kind::mp: return mp_density(x, param_);
        case Kind::z_limit: return z_limit_density(x, param_);
    }
    return 0.0;
}

namespace {

/// Integral of a density with square-root edge factors over [lo, x],
/// through the substitution u = m + r*sin(t) which makes the integrand
/// smooth at the support endpoints.
double edge_integral(const LimitLaw& law, double lo, double hi, double x) {
    if (x <= lo) return 0.0;
    const double m = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    const double upper = std::min(x, hi);
    const double t1 = std::asin(std::clamp((upper - m) / r, -1.0, 1.0));
    return integrate(
        [&](double t) { return law.density(m + r * std::sin(t)) * r * std::cos(t); },
        -std::numbers::pi / 2.0, t1);
}

}  // namespace

double LimitLaw::cdf(double x) const {
    double acc = edge_integral(*this, lo_, hi_, x);
    if (atom_mass_ > 0.0 && x >= atom_pos_) acc += atom_mass_;
    return std::clamp(acc, 0.0, 1.0);
}

double LimitLaw::moment(int p) const {
    const double m = 0.5 * (lo_ + hi_), r = 0.5 * (hi_ - lo_);
    double acc = integrate(
        [&](double t) {
            const double x = m + r * std::sin(t);
            return std::pow(x, p) * density(x) * r * std::cos(t);
        },
        -std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    if (atom_mass_ > 0.0) acc += atom_mass_ * std::pow(atom_pos_, p);
    return acc;
}

double ks_distance(const std::vector<double>& sorted_sample, const LimitLaw& law) {
    if (sorted_sample.empty())
        throw std::invalid_argument("ks_distance: empty sample");
    const double n = static_cast<double>(sorted_sample.size());
    double ks = 0.0;
    for (size_t i = 0; i < sorted_sample.size(); ++i) {
        const double f = law.cdf(sorted_sample[i]);
        ks = std::max(ks, std::abs(static_cast<double>(i + 1) / n - f));
        ks = std::max(ks, std::abs(static_cast<double>(i) / n - f));
    }
    return ks;
}

std::vector<HistogramBin> histogram(const std::vector<double>& data,
                                    int bin_count) {
    if (bin_count < 1) throw std::invalid_argument("histogram: bin_count must be >= 1");
    if (data.empty()) throw std::invalid_argument("histogram: empty data");
    const auto [mn_it, mx_it] = std::minmax_element(data.begin(), data.end());
    double lo = *mn_it, hi = *mx_it;
    if (hi <= lo) {  // degenerate sample: one unit-width bar of area 1
        lo -= 0.5;
        hi = lo + 1.0;
    }
    const double width = (hi - lo) / bin_count;
    std::vector<double> counts(static_cast<size_t>(bin_count), 0.0);
    for (double v : data) {
        int b = static_cast<int>((v - lo) / width);
        b = std::clamp(b, 0, bin_count - 1);
        counts[static_cast<size_t>(b)] += 1.0;
    }
    std::vector<HistogramBin> out(static_cast<size_t>(bin_count));
    const double norm = static_cast<double>(data.size()) * width;
    for (int b = 0; b < bin_count; ++b)
        out[static_cast<size_t>(b)] = {lo + (b + 0.5) * width,
                                       counts[static_cast<size_t>(b)] / norm};
    return out;
}

}  // namespace eswap
