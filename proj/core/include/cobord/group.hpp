#pragma once

#include <climits>
#include <string>
#include <string_view>
#include <vector>

namespace cobord {

/// Finite diagonalizable p-group mu_{p^a_1} x ... x mu_{p^a_r}. An empty
/// exponent list is the trivial group (r = 0, q = 1).
class GroupDescriptor {
public:
    GroupDescriptor(int p, std::vector<int> exponents);

    /// Parses a comma-separated exponent list such as "1,1"; "" or "0"
    /// gives the trivial group.
    static GroupDescriptor parse(int p, std::string_view exponents);

    int p() const { return p_; }
    const std::vector<int>& exponents() const { return exponents_; }
    int rank() const { return static_cast<int>(exponents_.size()); }
    /// q = p^(a_1 + ... + a_r).
    long long order() const { return order_; }
    /// The order as an int, saturated; floor(i/q) only needs q beyond any dimension.
    int q() const { return order_ > INT_MAX ? INT_MAX : static_cast<int>(order_); }

    /// "(2;[1,1])".
    std::string to_string() const;
    bool operator==(const GroupDescriptor&) const = default;

private:
    int p_;
    std::vector<int> exponents_;
    long long order_ = 1;
};

}  // namespace cobord
