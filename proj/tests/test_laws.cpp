#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "eswap/laws.hpp"
#include "eswap/moments.hpp"
#include "eswap/set_partition.hpp"

using namespace eswap;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("pointwise density values") {
    CHECK(semicircle_density(0.0) == doctest::Approx(1.0 / pi).epsilon(1e-12));
    CHECK(semicircle_density(2.0) == doctest::Approx(0.0));
    CHECK(semicircle_density(2.5) == 0.0);
    CHECK(semicircle_density(-2.5) == 0.0);

    // MP(1): density 1/(2 pi x) sqrt(x (4 - x)) on (0, 4]; at x = 2 this
    // is 1/(2 pi) * sqrt(4)/2 = 1/(2 pi).
    CHECK(mp_density(2.0, 1.0) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-12));
    CHECK(mp_density(5.0, 1.0) == 0.0);
    CHECK(mp_atom(0.25) == doctest::Approx(0.75));
    CHECK(mp_atom(1.0) == 0.0);
    CHECK(mp_atom(4.0) == 0.0);

    // z_limit(c) is the MP(c^2) curve pushed through x -> (x - c^2)/c.
    for (double c : {0.5, 1.0, 2.0})
        for (double x : {-0.4, 0.1, 0.9, 1.7})
            CHECK(z_limit_density(x, c) ==
                  doctest::Approx(c * mp_density(c * x + c * c, c * c))
                      .epsilon(1e-12));
}

TEST_CASE("supports and atoms") {
    const auto sc = LimitLaw::semicircle();
    CHECK(sc.support_lo() == doctest::Approx(-2.0));
    CHECK(sc.support_hi() == doctest::Approx(2.0));
    CHECK_FALSE(sc.has_atom());

    const auto mp_half = LimitLaw::mp(0.5);
    CHECK(mp_half.has_atom());
    CHECK(mp_half.atom_position() == 0.0);
    CHECK(mp_half.atom_mass() == doctest::Approx(0.5));

    for (double c : {0.5, 1.0, 2.0}) {
        const auto z = LimitLaw::z_limit(c);
        CHECK(z.support_lo() == doctest::Approx(1.0 / c - 2.0));
        CHECK(z.support_hi() == doctest::Approx(1.0 / c + 2.0));
        if (c < 1.0) {
            CHECK(z.has_atom());
            CHECK(z.atom_position() == doctest::Approx(-c));
            CHECK(z.atom_mass() == doctest::Approx(1.0 - c * c));
        } else {
            CHECK_FALSE(z.has_atom());
        }
    }
}

TEST_CASE("total mass and CDF limits") {
    for (const auto& law :
         {LimitLaw::semicircle(), LimitLaw::mp(0.5), LimitLaw::mp(1.0),
          LimitLaw::mp(2.0), LimitLaw::z_limit(0.5), LimitLaw::z_limit(1.0),
          LimitLaw::z_limit(2.0)}) {
        CHECK(law.cdf(law.support_lo() - 10.0) == 0.0);
        CHECK(law.cdf(law.support_hi() + 10.0) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(law.moment(0) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("quadrature moments match exact combinatorial moments") {
    const auto sc = LimitLaw::semicircle();
    for (int p = 0; p <= 8; ++p)
        CHECK(sc.moment(p) ==
              doctest::Approx(static_cast<double>(semicircle_moment(p)))
                  .epsilon(1e-6));

    // MP(lambda) p-th moment = sum over NC(p) of lambda^{#blocks}
    for (double lambda : {0.5, 1.0, 2.0}) {
        const auto law = LimitLaw::mp(lambda);
        for (int p = 1; p <= 5; ++p) {
            double exact = 0.0;
            for (const auto& piece : enumerate_nc(p))
                exact += std::pow(lambda, piece.block_count());
            CHECK(law.moment(p) == doctest::Approx(exact).epsilon(1e-5));
        }
    }

    const std::pair<double, Rational> cs[] = {
        {0.5, Rational(1, 2)}, {1.0, Rational(1)}, {2.0, Rational(2)}};
    for (const auto& [c, cr] : cs) {
        const auto z = LimitLaw::z_limit(c);
        for (int p = 1; p <= 6; ++p) {
            const double exact =
                static_cast<double>(limit_moment(p).evaluate(cr));
            CHECK(std::abs(z.moment(p) - exact) < 1e-4);
        }
    }
}

TEST_CASE("ks distance") {
    // quantile sample of the semicircle law itself: small KS
    const auto sc = LimitLaw::semicircle();
    const int n = 400, gridn = 2000;
    std::vector<double> grid(gridn + 1), cdf(gridn + 1);
    for (int i = 0; i <= gridn; ++i) {
        grid[size_t(i)] = -2.0 + 4.0 * i / gridn;
        cdf[size_t(i)] = sc.cdf(grid[size_t(i)]);
    }
    std::vector<double> sample;
    size_t j = 0;
    for (int k = 1; k <= n; ++k) {
        const double target = (k - 0.5) / n;
        while (j < size_t(gridn) && cdf[j] < target) ++j;
        sample.push_back(grid[j]);
    }
    CHECK(ks_distance(sample, sc) < 0.01);

    // shifted sample: KS large
    std::vector<double> shifted;
    for (double x : sample) shifted.push_back(x + 1.0);
    CHECK(ks_distance(shifted, sc) > 0.2);
}

TEST_CASE("histogram normalization") {
    std::vector<double> data;
    for (int i = 0; i < 1000; ++i) data.push_back(std::sin(i * 0.7));
    const auto bins = histogram(data, 20);
    REQUIRE(bins.size() == 20);
    const double width = bins[1].center - bins[0].center;
    double area = 0.0;
    for (const auto& b : bins) {
        CHECK(b.height >= 0.0);
        area += b.height * width;
    }
    CHECK(area == doctest::Approx(1.0).epsilon(1e-9));

    const auto degenerate = histogram(std::vector<double>(5, 3.0), 4);
    double darea = 0.0;
    for (size_t i = 0; i < degenerate.size(); ++i) darea += degenerate[i].height;
    CHECK(darea > 0.0);
}
