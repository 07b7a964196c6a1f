#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "cobord/group.hpp"
#include "cobord/lazard.hpp"

namespace cobord {

/// Lower bound on dim X^G for any G-action on a variety X with class z.
struct BoundReport {
    std::string class_summary;
    GroupDescriptor group;
    /// z lies in I_p(r): some G-action may be fixed-point free.
    bool in_Ipr = false;
    /// z modulo I_p(r), in adapted coordinates mod p (integral for r = 0).
    GenPoly reduced;
    /// deg_q of `reduced`; nullopt means minus infinity.
    std::optional<int> lower_bound;
    /// First monomial in canonical order reaching the bound.
    std::optional<Partition> certificate;
    mpz_class certificate_coeff;
};

/// True iff z is not in I_p(r): every G-action with this class has a fixed point.
bool has_forced_fixed_point(const Lazard& lazard, const CobordismClass& z, const GroupDescriptor& group);

BoundReport fixed_dim_lower_bound(const Lazard& lazard, const CobordismClass& z, const GroupDescriptor& group,
                                  std::string class_summary = {});

/// pi_q(alpha) when the Chern number c_alpha(z) alone forces it, first by
/// c_alpha(z) not divisible by p, then by c_alpha(z) outside p c_alpha(Lambda)
/// for admissible alpha. nullopt when neither test applies.
std::optional<int> chern_bound(const Lazard& lazard, const CobordismClass& z, const Partition& alpha,
                               const GroupDescriptor& group);

/// Linear functional sum_beta w_beta c_beta.
using Functional = std::map<Partition, mpz_class, CanonicalOrder>;

mpz_class evaluate(const Functional& f, const BPoly& image);

/// The functionals d_alpha for one basis: d_alpha(l_alpha) != 0 and
/// d_alpha(l_beta) = 0 for every other beta. Built recursively by length
/// and memoized.
class DAlphaTable {
public:
    explicit DAlphaTable(const GeneratorBasis& basis) : basis_(basis) {}

    const Functional& get(const Partition& alpha) const;
    const GeneratorBasis& basis() const { return basis_; }

private:
    const GeneratorBasis& basis_;
    mutable std::recursive_mutex mutex_;
    mutable std::map<Partition, Functional, CanonicalOrder> cache_;
};

}  // namespace cobord
