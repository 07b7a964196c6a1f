#include "cobord/actions.hpp"

#include <algorithm>
#include <functional>

namespace cobord {

int milnor_fixed_dim(int m, int n, int q)
{
    if (m < 0 || m > n || n < 1)
        throw std::invalid_argument("Milnor hypersurface H_{m,n} needs 0 <= m <= n, n >= 1");
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    if (m % q == 0 && n % q == 0)
        return (m + n - 1) / q;
    return m / q + n / q;
}

ActionWitness milnor_action(int m, int n, const GroupDescriptor& group)
{
    return {VarietyExpr::milnor(m, n), group, milnor_fixed_dim(m, n, group.q()), "milnor-hypersurface"};
}

std::pair<ActionWitness, ActionWitness> generator_action(const Lazard& lazard, int i, const GroupDescriptor& group)
{
    const BaseGenerator& gen = lazard.base_generator_data(i);
    std::vector<VarietyExpr> plus, minus;
    std::optional<int> plus_dim, minus_dim;
    for (const auto& term : gen.terms) {
        const mpz_class copies = abs(term.lambda);
        VarietyExpr part = VarietyExpr::milnor(term.m, term.n);
        if (copies != 1)
            part = VarietyExpr::scaled(copies.get_si(), std::move(part));
        const int fixed = milnor_fixed_dim(term.m, term.n, group.q());
        auto& side = term.lambda > 0 ? plus : minus;
        auto& side_dim = term.lambda > 0 ? plus_dim : minus_dim;
        side.push_back(std::move(part));
        side_dim = std::max(side_dim.value_or(fixed), fixed);
    }
    return {ActionWitness{VarietyExpr::disjoint_union(std::move(plus)), group, plus_dim, "generator-split"},
            ActionWitness{VarietyExpr::disjoint_union(std::move(minus)), group, minus_dim, "generator-split"}};
}

ActionWitness landweber_variety(int s, const GroupDescriptor& group, int truncation)
{
    if (s < 0)
        throw std::invalid_argument("s must be >= 0");
    if (group.rank() < s + 1)
        throw std::invalid_argument("a fixed-point-free action on Y_" + std::to_string(s) + " needs rank >= " +
                                    std::to_string(s + 1) + ", got group " + group.to_string());
    auto ps = bounded_power(group.p(), s, static_cast<long long>(truncation) + 1);
    if (!ps)
        throw TruncationError("Y_" + std::to_string(s) + " has dimension beyond truncation " +
                              std::to_string(truncation));
    return {VarietyExpr::hyp(group.p(), static_cast<int>(*ps - 1)), group, std::nullopt,
            "fixed-point-free-hypersurface"};
}

std::vector<ActionWitness> filtration_family(const Lazard& lazard, int d, const GroupDescriptor& group, int max_dim)
{
    if (d < 0 || max_dim < 0)
        throw std::invalid_argument("filtration level and max_dim must be >= 0");
    if (max_dim > lazard.truncation())
        throw TruncationError("max_dim " + std::to_string(max_dim) + " beyond truncation " +
                              std::to_string(lazard.truncation()));
    struct Atom {
        int dim;
        int level;
        ActionWitness witness;
    };
    const int q = group.q();
    std::vector<Atom> atoms;
    for (int i = 1; i <= max_dim; ++i) {
        if (i / q > d)
            continue;
        auto [plus, minus] = generator_action(lazard, i, group);
        for (auto* w : {&plus, &minus})
            if (w->fixed_dim)
                atoms.push_back({i, i / q, *w});
    }

    std::vector<ActionWitness> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, int, int)> walk = [&](std::size_t start, int dim, int level) {
        std::vector<VarietyExpr> factors;
        int fixed = 0;
        for (std::size_t k : chosen) {
            factors.push_back(atoms[k].witness.variety);
            fixed += *atoms[k].witness.fixed_dim;
        }
        VarietyExpr variety = factors.empty()       ? VarietyExpr::point()
                              : factors.size() == 1 ? factors.front()
                                                    : VarietyExpr::product(std::move(factors));
        out.push_back({std::move(variety), group, fixed, "filtration-product"});
        for (std::size_t k = start; k < atoms.size(); ++k) {
            if (dim + atoms[k].dim > max_dim || level + atoms[k].level > d)
                continue;
            chosen.push_back(k);
            walk(k, dim + atoms[k].dim, level + atoms[k].level);
            chosen.pop_back();
        }
    };
    walk(0, 0, 0);
    return out;
}

}  // namespace cobord
