#include "eswap/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace eswap {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int p = degree();
    if (p == 0) throw std::invalid_argument("permutation degree must be positive");
    std::vector<char> seen(static_cast<size_t>(p), 0);
    for (int v : images_) {
        if (v < 0 || v >= p || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("images are not a bijection of {0..p-1}");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int p) {
    std::vector<int> img(static_cast<size_t>(p));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::full_cycle(int p) {
    std::vector<int> img(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) img[static_cast<size_t>(i)] = (i + 1) % p;
    return Permutation(std::move(img));
}

Permutation Permutation::delta(int p) {
    return direct_sum(full_cycle(p), full_cycle(p));
}

Permutation Permutation::beta(int p) {
    std::vector<int> img(static_cast<size_t>(2 * p));
    for (int i = 0; i < 2 * p; ++i) img[static_cast<size_t>(i)] = (i + p) % (2 * p);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 0; i < degree(); ++i)
        img[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(img));
}

int Permutation::cycle_count() const {
    const int p = degree();
    std::vector<char> seen(static_cast<size_t>(p), 0);
    int cycles = 0;
    for (int i = 0; i < p; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = images_[static_cast<size_t>(j)])
            seen[static_cast<size_t>(j)] = 1;
    }
    return cycles;
}

int Permutation::length() const { return degree() - cycle_count(); }

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(static_cast<size_t>(sigma.degree()));
    for (int i = 0; i < sigma.degree(); ++i) img[static_cast<size_t>(i)] = sigma(tau(i));
    return Permutation(std::move(img));
}

Permutation direct_sum(const Permutation& pi1, const Permutation& pi2) {
    const int p = pi1.degree(), q = pi2.degree();
    std::vector<int> img(static_cast<size_t>(p + q));
    for (int i = 0; i < p; ++i) img[static_cast<size_t>(i)] = pi1(i);
    for (int i = 0; i < q; ++i) img[static_cast<size_t>(p + i)] = p + pi2(i);
    return Permutation(std::move(img));
}

int cayley_distance(const Permutation& sigma, const Permutation& tau) {
    return compose(sigma.inverse(), tau).length();
}

bool is_geodesic(const Permutation& sigma, const Permutation& tau,
                 const Permutation& pi) {
    return cayley_distance(sigma, tau) + cayley_distance(tau, pi) ==
           cayley_distance(sigma, pi);
}

std::vector<Permutation> enumerate_symmetric_group(int p, int max_p) {
    if (p < 1) throw std::invalid_argument("enumerate_symmetric_group: p < 1");
    if (p > max_p)
        throw bound_error("enumerate_symmetric_group: p=" + std::to_string(p) +
                          " exceeds bound " + std::to_string(max_p));
    std::vector<int> img(static_cast<size_t>(p));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace eswap
