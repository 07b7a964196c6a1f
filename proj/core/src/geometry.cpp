#include "cobord/geometry.hpp"

#include <functional>
#include <numeric>

namespace cobord {

namespace {

// P(L) = sum_i b_i c1^i for the line bundle with first Chern class c1.
TruncSeries multiplicative_class(const TruncSeries& c1)
{
    const int cap = c1.total_cap();
    const int wt = c1.weight_truncation();
    std::vector<BPoly> coeffs;
    coeffs.push_back(BPoly::constant(1, wt));
    for (int i = 1; i <= cap; ++i)
        coeffs.push_back(i <= wt ? BPoly::variable(i, wt) : BPoly(wt));
    return TruncSeries::univariate(coeffs, cap).compose(c1);
}

// Hyperplane-class combination sum_j k_j h_j in the given Chow ring layout.
TruncSeries chern_class(const std::vector<int>& multidegree, int nvars, int cap, const Exponent& caps, int wt)
{
    TruncSeries c1(nvars, cap, wt, std::nullopt, caps);
    for (int j = 0; j < nvars; ++j) {
        if (multidegree[j] == 0)
            continue;
        Exponent e{0, 0, 0};
        e[j] = 1;
        c1.add_to(e, BPoly::constant(multidegree[j], wt));
    }
    return c1;
}

}  // namespace

Geometry::Geometry(int truncation) : truncation_(truncation)
{
    if (truncation < 0 || truncation > kMaxTruncation)
        throw TruncationError("unsupported truncation " + std::to_string(truncation));
}

void Geometry::check_dimension(int dim, const std::string& what) const
{
    if (dim > truncation_)
        throw TruncationError(what + " has dimension " + std::to_string(dim) + " beyond truncation " +
                              std::to_string(truncation_));
}

BPoly Geometry::projective_space(int n) const
{
    if (n < 0)
        throw std::invalid_argument("projective space needs n >= 0");
    check_dimension(n, "P^" + std::to_string(n));
    // -T = 1 - (n+1) O(1).
    const Exponent caps{n, 0, 0};
    TruncSeries h = chern_class({1}, 1, n, caps, truncation_);
    TruncSeries class_series = multiplicative_class(h).power(-(n + 1));
    return class_series.coeff(n);
}

BPoly Geometry::complete_intersection(const std::vector<int>& degrees, int n) const
{
    if (degrees.empty())
        throw std::invalid_argument("complete intersection needs at least one degree");
    if (n < 0)
        throw std::invalid_argument("complete intersection needs n >= 0");
    for (int d : degrees)
        if (d < 1)
            throw std::invalid_argument("hypersurface degrees must be >= 1");
    check_dimension(n, "complete intersection");
    const int c = static_cast<int>(degrees.size());
    const int ambient = n + c;
    const Exponent caps{ambient, 0, 0};
    // -T_X = sum_j O(d_j) - (ambient+1) O(1) + 1, restricted from P^ambient;
    // pushing forward multiplies by i_*(1) = prod_j d_j h.
    TruncSeries h = chern_class({1}, 1, ambient, caps, truncation_);
    TruncSeries integrand = multiplicative_class(h).power(-(ambient + 1));
    for (int d : degrees) {
        TruncSeries hd = h.scaled(mpz_class(d));
        integrand = integrand * multiplicative_class(hd) * hd;
    }
    return integrand.coeff(ambient);
}

BPoly Geometry::milnor(int m, int n) const
{
    if (m < 0 || m > n || n < 1)
        throw std::invalid_argument("Milnor hypersurface H_{m,n} needs 0 <= m <= n, n >= 1");
    check_dimension(m + n - 1, "H_{" + std::to_string(m) + "," + std::to_string(n) + "}");
    const Exponent caps{m, n, 0};
    const int cap = m + n;
    TruncSeries h1 = chern_class({1, 0}, 2, cap, caps, truncation_);
    TruncSeries h2 = chern_class({0, 1}, 2, cap, caps, truncation_);
    TruncSeries h12 = chern_class({1, 1}, 2, cap, caps, truncation_);
    // -T_H = O(1,1) - (m+1) O(1,0) - (n+1) O(0,1) + 2; i_*(1) = h1 + h2.
    TruncSeries integrand = multiplicative_class(h1).power(-(m + 1)) * multiplicative_class(h2).power(-(n + 1)) *
                            multiplicative_class(h12) * h12;
    return integrand.coeff(Exponent{m, n, 0});
}

CobordismClass Geometry::evaluate(const VarietyExpr& e) const
{
    const std::string key = e.to_string();
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end())
            return CobordismClass(it->second, e.dimension());
    }
    BPoly image = evaluate_uncached(e);
    {
        std::lock_guard lock(mutex_);
        cache_.emplace(key, image);
    }
    return CobordismClass(std::move(image), e.dimension());
}

BPoly Geometry::evaluate_uncached(const VarietyExpr& e) const
{
    check_dimension(e.max_dimension(), e.to_string());
    return std::visit(
        [&](const auto& node) -> BPoly {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, expr::Point>) {
                return BPoly::constant(1, truncation_);
            } else if constexpr (std::is_same_v<T, expr::Proj>) {
                return projective_space(node.n);
            } else if constexpr (std::is_same_v<T, expr::Hyp>) {
                return hypersurface(node.degree, node.n);
            } else if constexpr (std::is_same_v<T, expr::CompInt>) {
                return complete_intersection(node.degrees, node.n);
            } else if constexpr (std::is_same_v<T, expr::Milnor>) {
                return milnor(node.m, node.n);
            } else if constexpr (std::is_same_v<T, expr::Product>) {
                BPoly acc = BPoly::constant(1, truncation_);
                for (const auto& f : node.factors)
                    acc *= evaluate(f).image();
                return acc;
            } else if constexpr (std::is_same_v<T, expr::DisjointUnion>) {
                BPoly acc(truncation_);
                for (const auto& part : node.parts)
                    acc += evaluate(part).image();
                return acc;
            } else {
                return evaluate(*node.inner).image() * mpz_class(static_cast<long>(node.factor));
            }
        },
        e.node());
}

mpz_class chern_number_of_product(const BPoly& x, const BPoly& y, const Partition& alpha)
{
    // Walk the distinct sub-multisets beta of alpha; gamma is the complement.
    std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
    for (int part : alpha.parts()) {
        if (!groups.empty() && groups.back().first == part)
            ++groups.back().second;
        else
            groups.emplace_back(part, 1);
    }
    mpz_class total = 0;
    std::vector<int> beta, gamma;
    std::function<void(std::size_t)> walk = [&](std::size_t g) {
        if (g == groups.size()) {
            total += x.coefficient(Partition(beta)) * y.coefficient(Partition(gamma));
            return;
        }
        auto [part, mult] = groups[g];
        for (int k = 0; k <= mult; ++k) {
            beta.insert(beta.end(), k, part);
            gamma.insert(gamma.end(), mult - k, part);
            walk(g + 1);
            beta.resize(beta.size() - k);
            gamma.resize(gamma.size() - (mult - k));
        }
    };
    walk(0);
    return total;
}

ChernCheckReport euler_like_checks(const Geometry& geometry, const VarietyExpr& e)
{
    ChernCheckReport report;
    const BPoly image = geometry.evaluate(e).image();
    if (auto dim = e.dimension()) {
        for (const auto& [m, c] : image.terms())
            if (m.weight() != *dim) {
                report.ok = false;
                report.failures.push_back("c_" + m.to_partition().to_string() + " = " + c.get_str() +
                                          " off dimension " + std::to_string(*dim));
            }
    }
    if (const auto* prod = std::get_if<expr::Product>(&e.node()); prod && prod->factors.size() >= 2) {
        // Fold the factors pairwise through the product formula.
        BPoly acc = geometry.evaluate(prod->factors.front()).image();
        for (std::size_t i = 1; i < prod->factors.size(); ++i) {
            const BPoly next = geometry.evaluate(prod->factors[i]).image();
            BPoly folded(geometry.truncation());
            for (const auto& alpha : partitions_up_to(geometry.truncation()))
                folded.add_term(alpha, chern_number_of_product(acc, next, alpha));
            acc = folded;
        }
        if (!(acc == image)) {
            report.ok = false;
            report.failures.push_back("product formula disagrees with direct evaluation");
        }
    }
    return report;
}

}  // namespace cobord
