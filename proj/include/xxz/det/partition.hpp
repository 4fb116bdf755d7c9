#pragma once

#include <string>
#include <vector>

namespace xxz {

// Parts listed weakly increasing, as the staircase families are written.
struct Partition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    std::vector<int> descending() const;
    std::string str() const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

// lambda(m, r)_i = floor((r + i - 1)/2), i = 1..m
Partition staircase_partition(int m, int r);

// lambda~_i(r) = floor((3i - 3 + r)/2), strictly increasing.
struct StaircaseSeq {
    int r = 0;
    int at(int i) const { return (3 * i - 3 + r) / 2; }
    std::vector<int> first(int m) const;
};

// rho_i = seq_i - i + 1
Partition partition_from_sequence(const std::vector<int>& seq);

}  // namespace xxz
