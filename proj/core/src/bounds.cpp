#include "cobord/bounds.hpp"

namespace cobord {

bool has_forced_fixed_point(const Lazard& lazard, const CobordismClass& z, const GroupDescriptor& group)
{
    return !lazard.in_Ipn(z, group.p(), group.rank());
}

BoundReport fixed_dim_lower_bound(const Lazard& lazard, const CobordismClass& z, const GroupDescriptor& group,
                                  std::string class_summary)
{
    GenPoly reduced = lazard.reduce_mod_Ipr(z, group.p(), group.rank());
    const bool in_ideal = lazard.in_Ipn(z, group.p(), group.rank());
    if (in_ideal != reduced.is_zero())
        throw ValidationError("ideal membership and reduction disagree for " + class_summary);
    const int q = group.q();
    BoundReport report{std::move(class_summary), group, in_ideal, reduced, q_degree(reduced, q), std::nullopt, 0};
    if (report.lower_bound) {
        for (const auto& [m, c] : reduced.poly().terms()) {
            const Partition alpha = m.to_partition();
            if (pi_q(alpha, q) == *report.lower_bound) {
                report.certificate = alpha;
                report.certificate_coeff = c;
                break;
            }
        }
    }
    return report;
}

std::optional<int> chern_bound(const Lazard& lazard, const CobordismClass& z, const Partition& alpha,
                               const GroupDescriptor& group)
{
    if (!z.is_zero()) {
        auto w = z.image().homogeneous_weight();
        if (!w || *w != alpha.weight())
            throw std::invalid_argument("chern_bound needs a homogeneous class of dimension |alpha|");
    }
    const int p = group.p();
    const mpz_class c = z.chern_number(alpha);
    if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)))
        return pi_q(alpha, group.q());
    if (in_admissible_class(alpha, p, group.rank())) {
        const mpz_class modulus = lazard.c_alpha_image_gcd(alpha) * p;
        if (!mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t()))
            return pi_q(alpha, group.q());
    }
    return std::nullopt;
}

mpz_class evaluate(const Functional& f, const BPoly& image)
{
    mpz_class total = 0;
    for (const auto& [beta, w] : f)
        total += w * image.coefficient(beta);
    return total;
}

const Functional& DAlphaTable::get(const Partition& alpha) const
{
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(alpha); it != cache_.end())
        return it->second;

    std::vector<Partition> preds;
    for (const auto& beta : partitions_of(alpha.weight()))
        if (!(beta == alpha) && refines(alpha, beta))
            preds.push_back(beta);

    // Rescale every predecessor functional to the common value u on its own generator.
    mpz_class u = 1;
    std::vector<mpz_class> values;
    for (const auto& beta : preds) {
        values.push_back(evaluate(get(beta), basis_.monomial_image(beta)));
        u = lcm(u, abs(values.back()));
    }

    Functional out;
    out[alpha] += u;
    for (std::size_t k = 0; k < preds.size(); ++k) {
        const mpz_class coeff = basis_.c_alpha(alpha, preds[k]);
        if (coeff == 0)
            continue;
        const mpz_class scale = u / values[k];
        for (const auto& [gamma, w] : get(preds[k]))
            out[gamma] -= coeff * scale * w;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return cache_.emplace(alpha, std::move(out)).first->second;
}

}  // namespace cobord
