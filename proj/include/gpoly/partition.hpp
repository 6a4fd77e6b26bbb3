#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gpoly {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

Partition normalize_partition(std::vector<int> parts); // sorts descending, rejects non-positive parts
int partition_size(const Partition& p);
int multiplicity(const Partition& p, int part);
Partition concat(const Partition& a, const Partition& b);

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

std::string to_string(const Partition& p); // "3,1,1"

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

} // namespace gpoly
