#pragma once

#include "eswap/laurent.hpp"
#include "eswap/rational.hpp"

namespace eswap {

/// E Tr[W^p] for independent Wishart factors: the exact double sum over
/// S_p x S_p of d2^{#(g^-1 pi1)+#(g^-1 pi2)} s^{#pi1+#pi2} d1^{#(pi1^-1 pi2)-p}.
/// Rational because the d1 exponent can be negative.
Rational exact_moment_indep(int p, long d1, long d2, long s, int max_p = 8);

/// E Tr[W^p] for the equal-factor case: sum over S_{2p} of
/// d2^{#(delta^-1 pi)} s^{#pi} d1^{#(beta^-1 pi)-p}. Costs (2p)!.
/// Caveat: the d1 exponent of this reference formula disagrees with direct
/// simulation of the swap model when d1 > 1 (at p=1 it yields
/// d2^2 s^2 + d1 d2 s, while sampling gives d2^2 s^2 + d2 s); the two
/// agree at d1 = 1 and in the large-dimension limit. Kept as stated.
Rational exact_moment_equal(int p, long d1, long d2, long s, int max_p = 4);

/// Limit of (1/d2^2) E Tr[Z^p]: sum over singleton-free non-crossing
/// partitions of c^{2 #pi - p}. Zero for p = 1.
LaurentPoly limit_moment(int p);

/// Same quantity through the alternating subset sum over NC(I); must agree
/// with limit_moment exactly. Convention: NC of the empty set is a single
/// empty partition with zero blocks.
LaurentPoly limit_moment_via_inclusion_exclusion(int p, int max_p = 8);

/// Catalan(p/2) for even p, 0 for odd.
Rational semicircle_moment(int p);

/// p-th moment of the centered free-Poisson(c^2) law rescaled by 1/c,
/// via the moment/free-cumulant sum over NC(p): first cumulant 0, all
/// higher cumulants c^2.
Rational free_poisson_centered_moment(int p, const Rational& c);

}  // namespace eswap
