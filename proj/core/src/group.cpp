#include "cobord/group.hpp"

#include <charconv>
#include <stdexcept>

#include "cobord/errors.hpp"
#include "cobord/lazard.hpp"

namespace cobord {

GroupDescriptor::GroupDescriptor(int p, std::vector<int> exponents) : p_(p), exponents_(std::move(exponents))
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not a prime");
    int total = 0;
    for (int a : exponents_) {
        if (a < 1)
            throw std::invalid_argument("group exponents must be >= 1");
        total += a;
    }
    auto q = bounded_power(p, total);
    if (!q)
        throw std::invalid_argument("group order overflows");
    order_ = *q;
}

GroupDescriptor GroupDescriptor::parse(int p, std::string_view text)
{
    std::vector<int> exponents;
    if (text.empty() || text == "0")
        return GroupDescriptor(p, exponents);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view piece = text.substr(pos, comma - pos);
        int value = 0;
        auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || end != piece.data() + piece.size() || piece.empty())
            throw ParseError("bad group exponent list \"" + std::string(text) + "\"");
        exponents.push_back(value);
        pos = comma + 1;
    }
    return GroupDescriptor(p, exponents);
}

std::string GroupDescriptor::to_string() const
{
    std::string out = "(" + std::to_string(p_) + ";[";
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        out += (i ? "," : "") + std::to_string(exponents_[i]);
    return out + "])";
}

}  // namespace cobord
