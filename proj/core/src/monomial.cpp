#include "cobord/monomial.hpp"

#include <vector>

#include "cobord/errors.hpp"

namespace cobord {

namespace {
constexpr int kBits = 5;
constexpr Monomial::Word kMask = 0x1f;
}  // namespace

Monomial Monomial::from(const Partition& alpha)
{
    if (alpha.weight() > kMaxTruncation)
        throw TruncationError("partition " + alpha.to_string() + " exceeds the maximal truncation");
    Monomial m;
    for (int part : alpha.parts())
        m.packed_ += Word(1) << (kBits * (part - 1));
    m.weight_ = static_cast<std::uint8_t>(alpha.weight());
    m.length_ = static_cast<std::uint8_t>(alpha.length());
    return m;
}

Monomial Monomial::single(int part)
{
    if (part < 1 || part > kMaxTruncation)
        throw TruncationError("part size out of range: " + std::to_string(part));
    Monomial m;
    m.packed_ = Word(1) << (kBits * (part - 1));
    m.weight_ = static_cast<std::uint8_t>(part);
    m.length_ = 1;
    return m;
}

int Monomial::multiplicity(int part) const
{
    if (part < 1 || part > kMaxTruncation)
        return 0;
    return static_cast<int>((packed_ >> (kBits * (part - 1))) & kMask);
}

Partition Monomial::to_partition() const
{
    std::vector<int> parts;
    parts.reserve(length_);
    for (int part = kMaxTruncation; part >= 1; --part)
        for (int k = multiplicity(part); k > 0; --k)
            parts.push_back(part);
    return Partition(std::move(parts));
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (weight_ + other.weight_ > kMaxTruncation)
        throw TruncationError("monomial product exceeds the maximal truncation");
    Monomial m;
    m.packed_ = packed_ + other.packed_;
    m.weight_ = static_cast<std::uint8_t>(weight_ + other.weight_);
    m.length_ = static_cast<std::uint8_t>(length_ + other.length_);
    return m;
}

}  // namespace cobord
