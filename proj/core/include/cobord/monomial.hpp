#pragma once

#include <cstdint>

#include "cobord/partitions.hpp"

namespace cobord {

/// Largest supported truncation weight. Multiplicities are packed five bits
/// per part size, so every part size and every multiplicity must stay <= 31.
inline constexpr int kMaxTruncation = 25;
inline constexpr int kDefaultTruncation = 12;

/// Packed multiplicity vector of a partition of weight <= kMaxTruncation.
/// Multiplying monomials adds the packed words; no carries occur while the
/// total weight stays within kMaxTruncation.
class Monomial {
public:
    using Word = unsigned __int128;

    Monomial() = default;
    static Monomial from(const Partition& alpha);
    /// The single-part monomial of the given part size (part >= 1).
    static Monomial single(int part);

    Partition to_partition() const;
    int weight() const { return weight_; }
    int length() const { return length_; }
    int multiplicity(int part) const;
    Word packed() const { return packed_; }

    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return packed_ == other.packed_; }

private:
    Word packed_ = 0;
    std::uint8_t weight_ = 0;
    std::uint8_t length_ = 0;
};

/// Same order as CanonicalOrder on partitions.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        if (a.weight() != b.weight())
            return a.weight() < b.weight();
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.packed() > b.packed();
    }
};

}  // namespace cobord
