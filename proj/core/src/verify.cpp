#include "eswap/verify.hpp"

#include <algorithm>
#include <sstream>

#include "eswap/moments.hpp"
#include "eswap/permutation.hpp"
#include "eswap/rng.hpp"
#include "eswap/set_partition.hpp"
#include "eswap/spectrum.hpp"
#include "eswap/swap.hpp"

namespace eswap {

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool ok,
         const std::string& detail = "") {
    out.push_back({name, ok, detail});
}

bool blocks_split(const Permutation& pi, int p, Permutation& pi1, Permutation& pi2) {
    std::vector<int> a(static_cast<size_t>(p)), b(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) {
        if (pi(i) >= p || pi(p + i) < p) return false;
        a[static_cast<size_t>(i)] = pi(i);
        b[static_cast<size_t>(i)] = pi(p + i) - p;
    }
    pi1 = Permutation(a);
    pi2 = Permutation(b);
    return true;
}

}  // namespace

std::vector<CheckResult> run_verification(int pmax) {
    std::vector<CheckResult> out;
    pmax = std::clamp(pmax, 2, 8);

    // cycle count + length = degree
    {
        bool ok = true;
        for (int p = 1; p <= std::min(pmax, 6) && ok; ++p)
            for (const auto& sigma : enumerate_symmetric_group(p))
                if (sigma.cycle_count() + sigma.length() != p) { ok = false; break; }
        add(out, "cycle-length identity (#s + |s| = p)", ok);
    }

    // triangle inequality, exhaustive
    {
        bool ok = true;
        const int p = std::min(pmax, 4);
        const auto sp = enumerate_symmetric_group(p);
        for (const auto& s : sp)
            for (const auto& t : sp)
                for (const auto& q : sp)
                    if (cayley_distance(s, t) + cayley_distance(t, q) <
                        cayley_distance(s, q))
                        ok = false;
        add(out, "Cayley triangle inequality (exhaustive p=4)", ok);
    }

    // parity of lengths along triples
    {
        bool ok = true;
        const int p = std::min(pmax, 4);
        const auto sp = enumerate_symmetric_group(p);
        for (const auto& s : sp)
            for (const auto& t : sp)
                for (const auto& q : sp)
                    if ((cayley_distance(s, t) + cayley_distance(t, q)) % 2 !=
                        cayley_distance(s, q) % 2)
                        ok = false;
        add(out, "length parity (exhaustive p=4)", ok);
    }

    // geodesic permutation count = Catalan
    {
        bool ok = true;
        std::ostringstream detail;
        for (int p = 2; p <= std::min(pmax, 7); ++p) {
            const auto id = Permutation::identity(p);
            const auto gamma = Permutation::full_cycle(p);
            long count = 0;
            for (const auto& pi : enumerate_symmetric_group(p))
                if (is_geodesic(id, pi, gamma)) ++count;
            if (BigInt(count) != catalan(p)) {
                ok = false;
                detail << "p=" << p << " count=" << count;
            }
        }
        add(out, "geodesic count = Catalan(p)", ok, detail.str());
    }

    // Biane bijection: NC(p) maps onto the geodesic set, blocks = cycles
    {
        bool ok = true;
        for (int p = 2; p <= std::min(pmax, 6); ++p) {
            const auto id = Permutation::identity(p);
            const auto gamma = Permutation::full_cycle(p);
            std::vector<Permutation> image;
            for (const auto& pi : enumerate_nc(p)) {
                auto perm = partition_to_permutation(pi);
                if (perm.cycle_count() != pi.block_count()) ok = false;
                if (!is_geodesic(id, perm, gamma)) ok = false;
                image.push_back(std::move(perm));
            }
            std::sort(image.begin(), image.end(),
                      [](const auto& a, const auto& b) { return a.images() < b.images(); });
            if (std::adjacent_find(image.begin(), image.end()) != image.end())
                ok = false;  // not injective
            long geodesics = 0;
            for (const auto& pi : enumerate_symmetric_group(p))
                if (is_geodesic(id, pi, gamma)) ++geodesics;
            if (geodesics != static_cast<long>(image.size())) ok = false;
        }
        add(out, "Biane bijection NC(p) <-> geodesic permutations", ok);
    }

    // geodesics to delta split blockwise with matching cycle counts
    {
        bool ok = true;
        for (int p = 2; p <= std::min(pmax, 4); ++p) {
            const auto id2p = Permutation::identity(2 * p);
            const auto delta = Permutation::delta(p);
            const auto beta_inv = Permutation::beta(p).inverse();
            for (const auto& pi : enumerate_symmetric_group(2 * p)) {
                if (!is_geodesic(id2p, pi, delta)) continue;
                Permutation pi1 = Permutation::identity(p), pi2 = pi1;
                if (!blocks_split(pi, p, pi1, pi2)) { ok = false; continue; }
                if (compose(beta_inv, pi).cycle_count() !=
                    compose(pi1, pi2).cycle_count())
                    ok = false;
            }
        }
        add(out, "geodesic-to-delta decomposition and cycle identity", ok);
    }

    // |NC(p)| = Catalan(p), pair partitions of NC0(2n)
    {
        bool ok = true;
        for (int p = 1; p <= pmax; ++p)
            if (BigInt(enumerate_nc(p).size()) != catalan(p)) ok = false;
        for (int n = 1; n <= std::min(pmax / 2, 4); ++n) {
            long pairs = 0;
            for (const auto& pi : enumerate_nc0(2 * n))
                if (pi.block_count() == n) ++pairs;
            if (BigInt(pairs) != catalan(n)) ok = false;
        }
        add(out, "non-crossing partition counts (Catalan)", ok);
    }

    // alternating subset sum equals the singleton-free sum
    {
        bool ok = true;
        for (int p = 1; p <= pmax; ++p)
            if (!(limit_moment(p) == limit_moment_via_inclusion_exclusion(p)))
                ok = false;
        add(out, "inclusion-exclusion identity for limit moments", ok);
    }

    // free-Poisson route matches the limit moments at random rational c
    {
        bool ok = true;
        RngStream rng(12345);
        for (int k = 0; k < 20; ++k) {
            const long num = 1 + static_cast<long>(rng.next_u64() % 40);
            const long den = 1 + static_cast<long>(rng.next_u64() % 10);
            const Rational c(num, den);
            for (int p = 1; p <= pmax; ++p)
                if (limit_moment(p).evaluate(c) != free_poisson_centered_moment(p, c))
                    ok = false;
        }
        add(out, "free-Poisson cumulant route matches limit moments", ok);
    }

    // constant term = Catalan, all other exponents negative
    {
        bool ok = true;
        for (int p = 1; p <= pmax; ++p) {
            const auto lm = limit_moment(p);
            if (lm.coefficient(0) != semicircle_moment(p)) ok = false;
            for (const auto& [e, a] : lm.terms())
                if (e > 0) ok = false;
        }
        add(out, "semicircle constant term of limit moments", ok);
    }

    // the two swap constructions build the same matrix
    {
        bool ok = true;
        double worst = 0.0;
        int idx = 0;
        for (int d1 : {1, 2, 3, 4})
            for (int d2 : {1, 2, 3})
                for (int s : {1, 2, 3}) {
                    RngStream s1(999, static_cast<std::uint64_t>(idx), 0);
                    RngStream s2(999, static_cast<std::uint64_t>(idx), 1);
                    ++idx;
                    const auto g1 = sample_gaussian(d1 * d2, s, s1);
                    const auto g2 = sample_gaussian(d1 * d2, s, s2);
                    const auto direct = swap_direct(g1, g2, d1, d2, s);
                    const auto w1 = HermitianMatrix(
                        (g1.entries * g1.entries.adjoint()).eval());
                    const auto w2 = HermitianMatrix(
                        (g2.entries * g2.entries.adjoint()).eval());
                    const auto tensor = swap_tensor(w1, w2, d1, d2);
                    const double scale = direct.matrix().cwiseAbs().maxCoeff();
                    const double dev =
                        (direct.matrix() - tensor.matrix()).cwiseAbs().maxCoeff() /
                        scale;
                    worst = std::max(worst, dev);
                    if (dev > 1e-8) ok = false;
                }
        std::ostringstream detail;
        detail << "max relative deviation " << worst;
        add(out, "swap_direct / swap_tensor equivalence", ok, detail.str());
    }

    return out;
}

}  // namespace eswap
