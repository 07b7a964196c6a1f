#pragma once

#include <vector>

#include <cobord/lazard.hpp>

namespace test {

/// One context at the default truncation, shared by every test case.
inline const cobord::Lazard& lazard()
{
    static const cobord::Lazard l(cobord::kDefaultTruncation);
    return l;
}

/// Projective spaces, hypersurfaces, complete intersections, Milnor
/// hypersurfaces and pairwise products, all of dimension in 1..max_dim.
inline std::vector<cobord::VarietyExpr> constructor_varieties(int max_dim)
{
    using cobord::VarietyExpr;
    std::vector<VarietyExpr> leaves;
    for (int n = 1; n <= max_dim; ++n) {
        leaves.push_back(VarietyExpr::proj(n));
        for (int d = 2; d <= 4; ++d)
            leaves.push_back(VarietyExpr::hyp(d, n));
        if (n <= 6)
            leaves.push_back(VarietyExpr::comp_int({2, 3}, n));
    }
    for (int m = 0; m <= max_dim; ++m)
        for (int n = std::max(m, 1); m + n - 1 <= max_dim; ++n)
            if (m + n - 1 >= 1)
                leaves.push_back(VarietyExpr::milnor(m, n));
    std::vector<VarietyExpr> out = leaves;
    const std::vector<VarietyExpr> small{VarietyExpr::proj(1), VarietyExpr::proj(2), VarietyExpr::hyp(3, 2),
                                         VarietyExpr::milnor(2, 2)};
    for (const auto& a : small)
        for (const auto& b : leaves)
            if (a.max_dimension() + b.max_dimension() <= max_dim)
                out.push_back(VarietyExpr::product({a, b}));
    return out;
}

}  // namespace test
