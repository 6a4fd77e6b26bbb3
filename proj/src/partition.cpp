#include "gpoly/partition.hpp"

#include "gpoly/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gpoly {

Partition normalize_partition(std::vector<int> parts)
{
    for (int x : parts)
        if (x <= 0)
            throw InvalidInput("partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int multiplicity(const Partition& p, int part) { return static_cast<int>(std::count(p.begin(), p.end(), part)); }

Partition concat(const Partition& a, const Partition& b)
{
    Partition out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
    return out;
}

namespace {

void build(int remaining, int max_part, Partition& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        build(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition cur;
    build(n, n, cur, out);
    return out;
}

std::string to_string(const Partition& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int x : p) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace gpoly
