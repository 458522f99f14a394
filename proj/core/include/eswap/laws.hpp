#pragma once

#include <vector>

namespace eswap {

/// Reference limit law: a continuous density on a compact support plus an
/// optional atom. Continuous part + atom mass integrate to 1.
class LimitLaw {
public:
    enum class Kind { semicircle, mp, z_limit };

    static LimitLaw semicircle();
    /// Free Poisson / Marchenko-Pastur with rate lambda; atom of mass
    /// max(0, 1-lambda) at 0 when lambda < 1.
    static LimitLaw mp(double lambda);
    /// Law of (Y - c^2)/c with Y ~ free Poisson(c^2); support
    /// [1/c - 2, 1/c + 2], atom of mass max(0, 1-c^2) at -c.
    static LimitLaw z_limit(double c);

    Kind kind() const { return kind_; }
    double parameter() const { return param_; }
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    bool has_atom() const { return atom_mass_ > 0.0; }
    double atom_position() const { return atom_pos_; }
    double atom_mass() const { return atom_mass_; }

    /// Continuous density; zero outside the support. The atom is not
    /// part of this value.
    double density(double x) const;

    double cdf(double x) const;

    /// p-th moment by quadrature, atom included.
    double moment(int p) const;

private:
    LimitLaw(Kind kind, double param);

    Kind kind_;
    double param_;
    double lo_ = 0.0, hi_ = 0.0;
    double atom_pos_ = 0.0, atom_mass_ = 0.0;
};

double semicircle_density(double x);
double mp_density(double x, double lambda);
double mp_atom(double lambda);
double z_limit_density(double x, double c);

/// sup_x |empirical CDF - law CDF| evaluated at the sample points
/// (both one-sided limits).
double ks_distance(const std::vector<double>& sorted_sample, const LimitLaw& law);

struct HistogramBin {
    double center = 0.0;
    double height = 0.0;  // density estimate; sum(width*height) = 1
};

std::vector<HistogramBin> histogram(const std::vector<double>& data,
                                    int bin_count);

}  // namespace eswap
