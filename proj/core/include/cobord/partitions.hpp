#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cobord {

/// A partition: parts sorted non-increasing, all positive. The empty
/// partition is allowed and has weight 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// True if some part equals `value`.
    bool contains(int value) const;

    std::string to_string() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Canonical total order: weight, then increasing length, then
/// lexicographically descending parts. Within a fixed weight this makes
/// the matrix c_alpha(l_beta) lower-triangular.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

std::strong_ordering canonical_compare(const Partition& a, const Partition& b);

/// Multiset union of the parts.
Partition unite(const Partition& a, const Partition& b);

/// True iff the parts of `alpha` can be grouped into blocks whose sums are
/// the parts of `beta` (alpha is a refinement of beta).
bool refines(const Partition& alpha, const Partition& beta);

/// Sum of floor(part / q).
int pi_q(const Partition& alpha, int q);

/// True iff no sub-multiset of the parts sums to p^i - 1 for 1 <= i <= r-1.
bool in_admissible_class(const Partition& alpha, int p, int r);

/// All partitions of weight n in canonical order.
std::vector<Partition> partitions_of(int n);

/// All partitions of weight <= n in canonical order.
std::vector<Partition> partitions_up_to(int n);

/// Number of partitions of n, by Euler's pentagonal recurrence.
long long partition_count(int n);

}  // namespace cobord
