#include "eswap/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace eswap {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks, int p)
    : blocks_(std::move(blocks)), p_(p) {
    if (p < 0) throw std::invalid_argument("partition ground size must be >= 0");
    std::vector<char> seen(static_cast<size_t>(p), 0);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 0 || v >= p || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("blocks must be disjoint subsets of the ground set");
            seen[static_cast<size_t>(v)] = 1;
            ++covered;
        }
    }
    if (covered != p) throw std::invalid_argument("blocks must cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool SetPartition::has_singleton() const {
    for (const auto& b : blocks_)
        if (b.size() == 1) return true;
    return false;
}

bool SetPartition::is_noncrossing() const {
    // block index per element, then scan all a1<b1<a2<b2 patterns via pairs
    std::vector<int> owner(static_cast<size_t>(p_), -1);
    for (size_t bi = 0; bi < blocks_.size(); ++bi)
        for (int v : blocks_[bi]) owner[static_cast<size_t>(v)] = static_cast<int>(bi);
    for (int a1 = 0; a1 < p_; ++a1)
        for (int b1 = a1 + 1; b1 < p_; ++b1)
            for (int a2 = b1 + 1; a2 < p_; ++a2) {
                if (owner[a1] != owner[a2] || owner[a1] == owner[b1]) continue;
                for (int b2 = a2 + 1; b2 < p_; ++b2)
                    if (owner[b1] == owner[b2]) return false;
            }
    return true;
}

std::vector<SetPartition> enumerate_partitions(int p) {
    std::vector<SetPartition> out;
    if (p == 0) {
        out.emplace_back(std::vector<std::vector<int>>{}, 0);
        return out;
    }
    // restricted growth strings: rgs[0]=0, rgs[i] <= 1 + max(rgs[0..i-1])
    std::vector<int> rgs(static_cast<size_t>(p), 0);
    auto emit = [&]() {
        int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(static_cast<size_t>(nb));
        for (int i = 0; i < p; ++i) blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i);
        out.emplace_back(std::move(blocks), p);
    };
    while (true) {
        emit();
        int i = p - 1;
        for (; i > 0; --i) {
            int mx = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[static_cast<size_t>(i)] <= mx) break;
        }
        if (i == 0) break;
        ++rgs[static_cast<size_t>(i)];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return out;
}

std::vector<SetPartition> enumerate_nc(int p) {
    std::vector<SetPartition> out;
    for (auto& pi : enumerate_partitions(p))
        if (pi.is_noncrossing()) out.push_back(std::move(pi));
    return out;
}

std::vector<SetPartition> enumerate_nc0(int p) {
    std::vector<SetPartition> out;
    for (auto& pi : enumerate_nc(p))
        if (!pi.has_singleton()) out.push_back(std::move(pi));
    return out;
}

Permutation partition_to_permutation(const SetPartition& pi) {
    if (!pi.is_noncrossing())
        throw std::invalid_argument("partition_to_permutation: crossing partition");
    const int p = pi.ground_size();
    std::vector<int> img(static_cast<size_t>(p));
    for (const auto& b : pi.blocks())
        for (size_t i = 0; i < b.size(); ++i)
            img[static_cast<size_t>(b[i])] = b[(i + 1) % b.size()];
    return Permutation(std::move(img));
}

}  // namespace eswap
