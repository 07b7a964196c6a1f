#pragma once

#include <optional>
#include <string>

#include "cobord/series.hpp"

namespace cobord {

/// An element of the Lazard ring, held through its Hurewicz image in Z[b].
/// `dim` is the pure dimension when the class is homogeneous.
class CobordismClass {
public:
    CobordismClass() = default;
    explicit CobordismClass(BPoly image, std::optional<int> dim = std::nullopt)
        : image_(std::move(image)), dim_(dim)
    {
    }

    /// The unit class of a point.
    static CobordismClass point(int truncation = kDefaultTruncation)
    {
        return CobordismClass(BPoly::constant(1, truncation), 0);
    }

    const BPoly& image() const { return image_; }
    std::optional<int> dim() const { return dim_; }
    int truncation() const { return image_.truncation(); }
    bool is_zero() const { return image_.is_zero(); }

    /// Chern number c_alpha: the b_alpha coefficient of the image.
    mpz_class chern_number(const Partition& alpha) const { return image_.coefficient(alpha); }

    friend CobordismClass operator+(const CobordismClass& a, const CobordismClass& b)
    {
        return CobordismClass(a.image_ + b.image_, a.dim_ == b.dim_ ? a.dim_ : std::nullopt);
    }
    friend CobordismClass operator-(const CobordismClass& a, const CobordismClass& b)
    {
        return CobordismClass(a.image_ - b.image_, a.dim_ == b.dim_ ? a.dim_ : std::nullopt);
    }
    friend CobordismClass operator*(const CobordismClass& a, const CobordismClass& b)
    {
        std::optional<int> d;
        if (a.dim_ && b.dim_)
            d = *a.dim_ + *b.dim_;
        return CobordismClass(a.image_ * b.image_, d);
    }
    friend CobordismClass operator*(const mpz_class& k, const CobordismClass& a)
    {
        return CobordismClass(a.image_ * k, a.dim_);
    }
    bool operator==(const CobordismClass& o) const { return image_ == o.image_; }

private:
    BPoly image_;
    std::optional<int> dim_;
};

}  // namespace cobord
