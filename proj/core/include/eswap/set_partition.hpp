#pragma once

#include <vector>

#include "eswap/permutation.hpp"

namespace eswap {

/// Partition of {0..p-1} into disjoint nonempty blocks. Canonical form:
/// elements ascending within each block, blocks ordered by minimum element.
class SetPartition {
public:
    SetPartition(std::vector<std::vector<int>> blocks, int p);

    int ground_size() const { return p_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    bool has_singleton() const;

    /// False iff there are a1 < b1 < a2 < b2 with a1 ~ a2 in one block and
    /// b1 ~ b2 in a different one.
    bool is_noncrossing() const;

    bool operator==(const SetPartition&) const = default;

private:
    std::vector<std::vector<int>> blocks_;
    int p_;
};

/// All partitions of {0..p-1}, in restricted-growth-string order.
std::vector<SetPartition> enumerate_partitions(int p);

/// All non-crossing partitions; |NC(p)| = Catalan(p).
std::vector<SetPartition> enumerate_nc(int p);

/// Non-crossing partitions with every block of size >= 2 (empty for p = 1).
std::vector<SetPartition> enumerate_nc0(int p);

/// Each block {i1 < ... < ik} becomes the cycle (i1 i2 ... ik). The image
/// is exactly the set of permutations on a geodesic from id to the full
/// cycle. Throws on crossing input.
Permutation partition_to_permutation(const SetPartition& pi);

}  // namespace eswap
