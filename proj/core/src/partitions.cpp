#include "cobord/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cobord {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int v : parts_)
        if (v <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

bool Partition::contains(int value) const
{
    return std::find(parts_.begin(), parts_.end(), value) != parts_.end();
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::strong_ordering canonical_compare(const Partition& a, const Partition& b)
{
    if (auto c = a.weight() <=> b.weight(); c != 0)
        return c;
    if (auto c = a.length() <=> b.length(); c != 0)
        return c;
    // Descending lexicographic: the larger part sequence comes first.
    return b.parts() <=> a.parts();
}

bool CanonicalOrder::operator()(const Partition& a, const Partition& b) const
{
    return canonical_compare(a, b) < 0;
}

Partition unite(const Partition& a, const Partition& b)
{
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

namespace {

// Assign the parts of alpha (largest first) to bins with the given
// remaining capacities. Failed states are memoized on (index, sorted bins).
class RefinementSearch {
public:
    explicit RefinementSearch(const std::vector<int>& parts) : parts_(parts) {}

    bool run(std::size_t index, std::vector<int> bins)
    {
        if (index == parts_.size())
            return std::all_of(bins.begin(), bins.end(), [](int b) { return b == 0; });
        std::sort(bins.begin(), bins.end());
        std::string key = std::to_string(index) + ':';
        for (int b : bins)
            key += std::to_string(b) + ',';
        if (failed_.count(key))
            return false;
        const int part = parts_[index];
        for (std::size_t j = 0; j < bins.size(); ++j) {
            if (bins[j] < part || (j > 0 && bins[j] == bins[j - 1]))
                continue;
            bins[j] -= part;
            bool ok = run(index + 1, bins);
            bins[j] += part;
            if (ok)
                return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

private:
    const std::vector<int>& parts_;
    std::unordered_set<std::string> failed_;
};

}  // namespace

bool refines(const Partition& alpha, const Partition& beta)
{
    if (alpha.weight() != beta.weight() || alpha.length() < beta.length())
        return false;
    if (alpha == beta)
        return true;
    RefinementSearch search(alpha.parts());
    return search.run(0, beta.parts());
}

int pi_q(const Partition& alpha, int q)
{
    if (q < 1)
        throw std::invalid_argument("pi_q requires q >= 1");
    int total = 0;
    for (int part : alpha.parts())
        total += part / q;
    return total;
}

bool in_admissible_class(const Partition& alpha, int p, int r)
{
    if (r <= 1)
        return true;
    std::vector<long long> forbidden;
    long long power = 1;
    for (int i = 1; i <= r - 1; ++i) {
        power *= p;
        forbidden.push_back(power - 1);
    }
    const long long bound = forbidden.back();
    // reachable[s]: some non-empty sub-multiset sums to s.
    std::vector<char> reachable(static_cast<std::size_t>(bound) + 1, 0);
    for (int part : alpha.parts()) {
        if (part > bound)
            continue;
        for (long long s = bound - part; s >= 1; --s)
            if (reachable[s])
                reachable[s + part] = 1;
        reachable[part] = 1;
    }
    return std::none_of(forbidden.begin(), forbidden.end(),
                        [&](long long f) { return reachable[f] != 0; });
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        enumerate(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        return {};
    std::vector<Partition> out;
    std::vector<int> current;
    enumerate(n, n, current, out);
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

std::vector<Partition> partitions_up_to(int n)
{
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w) {
        auto level = partitions_of(w);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

long long partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            long long sign = (k % 2) ? 1 : -1;
            total += sign * p[m - g1];
            if (g2 <= m)
                total += sign * p[m - g2];
        }
        p[m] = total;
    }
    return p[n];
}

}  // namespace cobord
