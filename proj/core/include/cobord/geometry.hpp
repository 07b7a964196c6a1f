#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "cobord/cobordism_class.hpp"
#include "cobord/variety.hpp"

namespace cobord {

/// Hurewicz images (all Chern numbers) of standard varieties.
///
/// Every leaf is a subvariety of P^a or P^a x P^b whose tangent bundle is
/// the restriction of a virtual sum of line bundles, so
///   [X] = deg( i_*(1) * P(-T) )
/// with P(L) = sum_i c_1(L)^i b_i, computed in the truncated Chow ring
/// Z[h]/h^{a+1} (or its two-variable analogue).
class Geometry {
public:
    explicit Geometry(int truncation = kDefaultTruncation);

    int truncation() const { return truncation_; }

    /// Memoized evaluation; throws TruncationError when a dimension exceeds N.
    CobordismClass evaluate(const VarietyExpr& e) const;

    BPoly projective_space(int n) const;
    BPoly complete_intersection(const std::vector<int>& degrees, int n) const;
    BPoly hypersurface(int degree, int n) const { return complete_intersection({degree}, n); }
    BPoly milnor(int m, int n) const;

private:
    BPoly evaluate_uncached(const VarietyExpr& e) const;
    void check_dimension(int dim, const std::string& what) const;

    int truncation_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, BPoly> cache_;
};

/// Result of the Chern-number sanity harness.
struct ChernCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Checks that c_alpha vanishes off the dimension, and for products that
/// c_alpha(X x Y) = sum_{beta u gamma = alpha} c_beta(X) c_gamma(Y).
ChernCheckReport euler_like_checks(const Geometry& geometry, const VarietyExpr& e);

/// c_alpha(x y) from the Chern numbers of the factors, summing over ordered
/// pairs (beta, gamma) with beta u gamma = alpha.
mpz_class chern_number_of_product(const BPoly& x, const BPoly& y, const Partition& alpha);

}  // namespace cobord
