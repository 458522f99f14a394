#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>

#include "eswap/permutation.hpp"
#include "eswap/rational.hpp"

using namespace eswap;

namespace {

// Independent length oracle: BFS distance from the identity in the Cayley
// graph generated by all transpositions.
std::map<std::vector<int>, int> bfs_lengths(int p) {
    std::map<std::vector<int>, int> dist;
    const auto id = Permutation::identity(p);
    std::queue<Permutation> q;
    dist[id.images()] = 0;
    q.push(id);
    while (!q.empty()) {
        const auto cur = q.front();
        q.pop();
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) {
                auto img = cur.images();
                std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)]);
                if (dist.count(img)) continue;
                dist[img] = dist[cur.images()] + 1;
                q.push(Permutation(img));
            }
    }
    return dist;
}

}  // namespace

TEST_CASE("compose basics") {
    const Permutation t({1, 0});
    CHECK(compose(t, t) == Permutation::identity(2));

    for (const auto& sigma : enumerate_symmetric_group(4)) {
        CHECK(compose(Permutation::identity(4), sigma) == sigma);
        CHECK(compose(sigma, Permutation::identity(4)) == sigma);
    }

    const auto g3 = Permutation::full_cycle(3);
    CHECK(compose(g3, g3) == Permutation({2, 0, 1}));  // the 3-cycle (0 2 1)

    CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("associativity on random triples in S_5") {
    const auto s5 = enumerate_symmetric_group(5);
    for (size_t i = 0; i < s5.size(); i += 17)
        for (size_t j = 1; j < s5.size(); j += 29)
            for (size_t k = 2; k < s5.size(); k += 31)
                CHECK(compose(compose(s5[i], s5[j]), s5[k]) ==
                      compose(s5[i], compose(s5[j], s5[k])));
}

TEST_CASE("cycle_count and length") {
    CHECK(Permutation::identity(3).cycle_count() == 3);
    CHECK(Permutation({1, 0, 2}).cycle_count() == 2);
    for (int p = 2; p <= 8; ++p) CHECK(Permutation::full_cycle(p).cycle_count() == 1);

    CHECK(Permutation::identity(5).length() == 0);
    CHECK(Permutation({1, 0, 2, 3, 4}).length() == 1);
    CHECK(Permutation::full_cycle(4).length() == 3);
}

TEST_CASE("length equals minimal transposition count (BFS oracle, p<=4)") {
    for (int p = 2; p <= 4; ++p) {
        const auto dist = bfs_lengths(p);
        for (const auto& sigma : enumerate_symmetric_group(p))
            CHECK(sigma.length() == dist.at(sigma.images()));
    }
}

TEST_CASE("cycle-length identity #s + |s| = p, exhaustive p<=6") {
    for (int p = 1; p <= 6; ++p)
        for (const auto& sigma : enumerate_symmetric_group(p))
            CHECK(sigma.cycle_count() + sigma.length() == p);
}

TEST_CASE("Cayley distance") {
    const auto s4 = enumerate_symmetric_group(4);
    for (const auto& sigma : s4) CHECK(cayley_distance(sigma, sigma) == 0);
    for (int p = 2; p <= 6; ++p)
        CHECK(cayley_distance(Permutation::identity(p), Permutation::full_cycle(p)) ==
              p - 1);

    // triangle inequality and parity, exhaustive over S_4^3
    for (const auto& a : s4)
        for (const auto& b : s4)
            for (const auto& c : s4) {
                const int ab = cayley_distance(a, b), bc = cayley_distance(b, c),
                          ac = cayley_distance(a, c);
                CHECK(ab + bc >= ac);
                CHECK((ab + bc) % 2 == ac % 2);
            }
}

TEST_CASE("geodesic predicate and Catalan counts") {
    CHECK(is_geodesic(Permutation::identity(3), Permutation::identity(3),
                      Permutation::full_cycle(3)));
    CHECK(is_geodesic(Permutation::identity(2), Permutation({1, 0}),
                      Permutation::full_cycle(2)));

    for (int p = 3; p <= 7; ++p) {
        const auto id = Permutation::identity(p);
        const auto gamma = Permutation::full_cycle(p);
        long count = 0;
        for (const auto& pi : enumerate_symmetric_group(p))
            if (is_geodesic(id, pi, gamma)) ++count;
        CHECK(BigInt(count) == catalan(p));
    }
}

TEST_CASE("fixed permutations") {
    CHECK(Permutation::beta(1) == Permutation({1, 0}));
    CHECK(Permutation::delta(1) == Permutation::identity(2));
    for (int p = 1; p <= 6; ++p) {
        const auto beta = Permutation::beta(p);
        CHECK(compose(beta, beta) == Permutation::identity(2 * p));
    }
    CHECK(direct_sum(Permutation::full_cycle(2), Permutation::full_cycle(2)) ==
          Permutation::delta(2));
    CHECK(direct_sum(Permutation::identity(3), Permutation::identity(4)) ==
          Permutation::identity(7));
}

TEST_CASE("geodesics to delta decompose blockwise (p<=4)") {
    for (int p = 2; p <= 4; ++p) {
        const auto id = Permutation::identity(2 * p);
        const auto delta = Permutation::delta(p);
        const auto beta_inv = Permutation::beta(p).inverse();
        for (const auto& pi : enumerate_symmetric_group(2 * p)) {
            if (!is_geodesic(id, pi, delta)) continue;
            // blocks are preserved setwise
            std::vector<int> a, b;
            bool split_ok = true;
            for (int i = 0; i < p; ++i) {
                if (pi(i) >= p || pi(p + i) < p) split_ok = false;
            }
            REQUIRE(split_ok);
            for (int i = 0; i < p; ++i) {
                a.push_back(pi(i));
                b.push_back(pi(p + i) - p);
            }
            const Permutation pi1(a), pi2(b);
            CHECK(compose(beta_inv, pi).cycle_count() ==
                  compose(pi1, pi2).cycle_count());
        }
    }
}

TEST_CASE("enumeration bound") {
    CHECK(enumerate_symmetric_group(3).size() == 6);
    CHECK_THROWS_AS(enumerate_symmetric_group(9), bound_error);
    CHECK_THROWS_AS(enumerate_symmetric_group(5, 4), bound_error);
    CHECK(enumerate_symmetric_group(9, 9).size() == 362880);
}

TEST_CASE("invalid permutations rejected") {
    CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}
