#include "xxz/det/partition.hpp"

#include "xxz/algebra/errors.hpp"

#include <algorithm>

namespace xxz {

std::vector<int> Partition::descending() const {
    std::vector<int> d = parts;
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

Partition staircase_partition(int m, int r) {
    if (m < 0 || r < 0) throw AlgebraError("staircase_partition: negative argument");
    Partition p;
    for (int i = 1; i <= m; ++i) p.parts.push_back((r + i - 1) / 2);
    return p;
}

std::vector<int> StaircaseSeq::first(int m) const {
    std::vector<int> v;
    for (int i = 1; i <= m; ++i) v.push_back(at(i));
    return v;
}

Partition partition_from_sequence(const std::vector<int>& seq) {
    Partition p;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i && seq[i] <= seq[i - 1]) throw AlgebraError("partition_from_sequence: sequence not increasing");
        p.parts.push_back(seq[i] - static_cast<int>(i));
    }
    if (!p.parts.empty() && p.parts[0] < 0) throw AlgebraError("partition_from_sequence: negative part");
    return p;
}

}  // namespace xxz
