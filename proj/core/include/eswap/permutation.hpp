#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace eswap {

/// Element of the symmetric group S_p in 0-based one-line form:
/// images[i] = sigma(i). Degree is explicit; there is no implicit
/// embedding of S_p into S_q.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int p);

    /// The full cycle i -> i+1 (mod p).
    static Permutation full_cycle(int p);

    /// Direct sum of two full p-cycles, acting on {0..p-1} and {p..2p-1}.
    static Permutation delta(int p);

    /// The involution i <-> i+p on 2p points.
    static Permutation beta(int p);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;

    Permutation inverse() const;

    /// Number of disjoint cycles, fixed points included.
    int cycle_count() const;

    /// Minimal number of transpositions multiplying to this permutation;
    /// equals degree - cycle_count.
    int length() const;

private:
    std::vector<int> images_;
};

/// (sigma . tau)(i) = sigma(tau(i)). Throws on degree mismatch.
Permutation compose(const Permutation& sigma, const Permutation& tau);

/// pi1 on the first block, pi2 shifted onto the second.
Permutation direct_sum(const Permutation& pi1, const Permutation& pi2);

/// Cayley distance d(sigma, tau) = length(sigma^{-1} tau).
int cayley_distance(const Permutation& sigma, const Permutation& tau);

/// d(sigma,tau) + d(tau,pi) == d(sigma,pi).
bool is_geodesic(const Permutation& sigma, const Permutation& tau,
                 const Permutation& pi);

/// All of S_p in lexicographic one-line order. Guarded by max_p
/// (default 8); exceeding it throws bound_error.
std::vector<Permutation> enumerate_symmetric_group(int p, int max_p = 8);

/// Enumeration bound violations (p beyond the configured cap).
class bound_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace eswap
