#include "eswap/moments.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "eswap/permutation.hpp"
#include "eswap/set_partition.hpp"

namespace eswap {

Rational rational_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (q == 0) throw std::domain_error("rational_pow: 0 to a negative power");
        return 1 / rational_pow(q, -e);
    }
    Rational base = q, acc = 1;
    for (long n = e; n > 0; n >>= 1) {
        if (n & 1) acc *= base;
        if (n > 1) base *= base;
    }
    return acc;
}

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: n < 0");
    BigInt num = 1, den = 1;
    for (int k = 1; k <= n; ++k) {
        num *= (n + k);
        den *= k;
    }
    return num / den / (n + 1);
}

LaurentPoly LaurentPoly::constant(Rational v) { return monomial(std::move(v), 0); }

LaurentPoly LaurentPoly::monomial(Rational coeff, long exponent) {
    LaurentPoly q;
    q.add_term(exponent, coeff);
    return q;
}

void LaurentPoly::add_term(long exponent, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational LaurentPoly::coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::evaluate(const Rational& c) const {
    Rational acc = 0;
    for (const auto& [e, a] : terms_) acc += a * rational_pow(c, e);
    return acc;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, a] : other.terms_) add_term(e, a);
    return *this;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, a] : terms_) {
        Rational mag = a < 0 ? Rational(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "c";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

void check_moment_args(int p, long d1, long d2, long s) {
    if (p < 1) throw std::invalid_argument("moment order p must be >= 1");
    if (d1 < 1 || d2 < 1 || s < 1)
        throw std::invalid_argument("dimensions d1, d2, s must be >= 1");
}

}  // namespace

Rational exact_moment_indep(int p, long d1, long d2, long s, int max_p) {
    check_moment_args(p, d1, d2, s);
    auto perms = enumerate_symmetric_group(p, max_p);
    const auto gamma_inv = Permutation::full_cycle(p).inverse();
    const size_t n = perms.size();

    std::vector<int> cyc(n), gcyc(n);
    std::vector<const std::vector<int>*> img(n);
    std::vector<std::vector<int>> inv_img(n);
    for (size_t i = 0; i < n; ++i) {
        cyc[i] = perms[i].cycle_count();
        gcyc[i] = compose(gamma_inv, perms[i]).cycle_count();
        img[i] = &perms[i].images();
        inv_img[i] = perms[i].inverse().images();
    }

    // Exponents: d2 in [2, 2p], s in [2, 2p], d1 in [1-p, 0].
    // Bucket counts by exponent triple, then evaluate once per bucket.
    const int w = 2 * p + 1;
    std::vector<std::uint64_t> buckets(static_cast<size_t>(w) * w * (p + 1), 0);
    std::vector<int> scratch(static_cast<size_t>(p));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            // #(pi1^{-1} pi2) without building a Permutation
            const auto& a = inv_img[i];
            const auto& b = *img[j];
            int cycles = 0;
            std::fill(scratch.begin(), scratch.end(), 0);
            for (int k = 0; k < p; ++k) {
                if (scratch[static_cast<size_t>(k)]) continue;
                ++cycles;
                int v = k;
                while (!scratch[static_cast<size_t>(v)]) {
                    scratch[static_cast<size_t>(v)] = 1;
                    v = a[static_cast<size_t>(b[static_cast<size_t>(v)])];
                }
            }
            const int e_d2 = gcyc[i] + gcyc[j];
            const int e_s = cyc[i] + cyc[j];
            const int e_d1 = cycles - p;  // in [1-p, 0]
            ++buckets[(static_cast<size_t>(e_d2) * w + static_cast<size_t>(e_s)) *
                          (p + 1) +
                      static_cast<size_t>(e_d1 + p)];
        }
    }

    Rational total = 0;
    for (int e_d2 = 0; e_d2 < w; ++e_d2)
        for (int e_s = 0; e_s < w; ++e_s)
            for (int e_d1 = -p; e_d1 <= 0; ++e_d1) {
                const auto cnt = buckets[(static_cast<size_t>(e_d2) * w +
                                          static_cast<size_t>(e_s)) *
                                             (p + 1) +
                                         static_cast<size_t>(e_d1 + p)];
                if (cnt == 0) continue;
                total += Rational(cnt) * rational_pow(Rational(d2), e_d2) *
                         rational_pow(Rational(s), e_s) *
                         rational_pow(Rational(d1), e_d1);
            }
    return total;
}

Rational exact_moment_equal(int p, long d1, long d2, long s, int max_p) {
    check_moment_args(p, d1, d2, s);
    if (p > max_p)
        throw bound_error("exact_moment_equal: p exceeds enumeration bound");
    const auto delta_inv = Permutation::delta(p).inverse();
    const auto beta_inv = Permutation::beta(p).inverse();
    Rational total = 0;
    for (const auto& pi : enumerate_symmetric_group(2 * p, 2 * max_p)) {
        const int e_d2 = compose(delta_inv, pi).cycle_count();
        const int e_s = pi.cycle_count();
        const int e_d1 = compose(beta_inv, pi).cycle_count() - p;
        total += rational_pow(Rational(d2), e_d2) * rational_pow(Rational(s), e_s) *
                 rational_pow(Rational(d1), e_d1);
    }
    return total;
}

LaurentPoly limit_moment(int p) {
    if (p < 1) throw std::invalid_argument("limit_moment: p must be >= 1");
    LaurentPoly out;
    for (const auto& pi : enumerate_nc0(p))
        out.add_term(2L * pi.block_count() - p, Rational(1));
    return out;
}

LaurentPoly limit_moment_via_inclusion_exclusion(int p, int max_p) {
    if (p < 1) throw std::invalid_argument("limit moment: p must be >= 1");
    if (p > max_p) throw bound_error("inclusion-exclusion: p exceeds bound");
    // Only the block-count profile of NC(I) matters, so NC(|I|) after
    // relabeling serves for every I of the same size.
    std::vector<std::vector<int>> nc_block_counts(static_cast<size_t>(p) + 1);
    nc_block_counts[0] = {0};  // NC of the empty set: one empty partition
    for (int m = 1; m <= p; ++m)
        for (const auto& pi : enumerate_nc(m))
            nc_block_counts[static_cast<size_t>(m)].push_back(pi.block_count());

    LaurentPoly out;
    for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
        const int sz = __builtin_popcount(mask);
        const Rational sign((p - sz) % 2 == 0 ? 1 : -1);
        for (int nb : nc_block_counts[static_cast<size_t>(sz)])
            out.add_term(p - 2L * sz + 2L * nb, sign);
    }
    return out;
}

Rational semicircle_moment(int p) {
    if (p < 0) throw std::invalid_argument("semicircle_moment: p < 0");
    if (p % 2 != 0) return 0;
    return Rational(catalan(p / 2));
}

Rational free_poisson_centered_moment(int p, const Rational& c) {
    if (p < 1) throw std::invalid_argument("free_poisson_centered_moment: p < 1");
    if (c <= 0) throw std::invalid_argument("free_poisson_centered_moment: c <= 0");
    const Rational c2 = c * c;
    Rational acc = 0;
    for (const auto& pi : enumerate_nc(p)) {
        Rational prod = 1;
        for (const auto& block : pi.blocks())
            prod *= (block.size() == 1) ? Rational(0) : c2;
        acc += prod;
    }
    return acc / rational_pow(c, p);
}

}  // namespace eswap
