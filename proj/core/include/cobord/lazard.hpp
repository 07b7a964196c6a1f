#pragma once

#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cobord/cobordism_class.hpp"
#include "cobord/fgl.hpp"
#include "cobord/geometry.hpp"

namespace cobord {

struct LTag;
/// Polynomial in the generators l_1, l_2, ...; the monomial for alpha is
/// l_alpha = l_{alpha_1} ... l_{alpha_k}.
using LPoly = GradedPoly<LTag>;

/// Stand-in for n = infinity in ideal-membership queries.
inline constexpr int kInfiniteLevel = INT_MAX;

/// Names a generator basis. The adapted flavor replaces l_{p^i-1} for
/// 1 <= i <= r-1 by elements of I_p(infinity).
struct BasisId {
    enum class Flavor { Base, Adapted };
    Flavor flavor = Flavor::Base;
    int p = 0;
    int r = 0;

    static BasisId base() { return {}; }
    static BasisId adapted(int p, int r) { return {Flavor::Adapted, p, r}; }
    bool operator==(const BasisId&) const = default;
    std::string to_string() const;
};

/// One polynomial generator l_i per degree 1..N, together with the
/// Hurewicz images of all generator monomials (built lazily).
class GeneratorBasis {
public:
    GeneratorBasis(BasisId id, std::vector<CobordismClass> generators);

    const BasisId& id() const { return id_; }
    int truncation() const { return static_cast<int>(generators_.size()); }
    /// l_i for 1 <= i <= N.
    const CobordismClass& generator(int i) const;
    /// c_(i)(l_i).
    mpz_class leading_coefficient(int i) const;
    /// Sign of c_(i)(l_i), recorded because only |c_(i)(l_i)| is forced.
    int sign(int i) const;
    /// Indices i with l_i replaced relative to the base flavor.
    std::vector<int> replaced_indices() const;

    /// Image of l_beta in Z[b].
    const BPoly& monomial_image(const Partition& beta) const;
    /// c_alpha(l_beta).
    mpz_class c_alpha(const Partition& alpha, const Partition& beta) const
    {
        return monomial_image(beta).coefficient(alpha);
    }

private:
    BasisId id_;
    std::vector<CobordismClass> generators_;
    mutable std::mutex mutex_;
    mutable std::map<Monomial, BPoly, MonomialOrder> images_;
};

/// A Lazard-ring element in generator coordinates, optionally mod p.
class GenPoly {
public:
    GenPoly(LPoly poly, BasisId basis) : poly_(std::move(poly)), basis_(basis) {}

    const LPoly& poly() const { return poly_; }
    const BasisId& basis() const { return basis_; }
    std::optional<int> modulus() const { return poly_.modulus(); }
    bool is_zero() const { return poly_.is_zero(); }
    mpz_class coefficient(const Partition& alpha) const { return poly_.coefficient(alpha); }

    friend GenPoly operator+(const GenPoly& a, const GenPoly& b);
    friend GenPoly operator-(const GenPoly& a, const GenPoly& b);
    friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
    bool operator==(const GenPoly& o) const { return basis_ == o.basis_ && poly_ == o.poly_; }

    std::string to_string() const { return poly_.to_string("l"); }

private:
    LPoly poly_;
    BasisId basis_;
};

/// Base generator l_i as an integral combination of Milnor hypersurfaces.
struct BaseGenerator {
    CobordismClass cls;
    /// (m, n, lambda) with m + n - 1 = i, m != 1.
    struct Term {
        int m;
        int n;
        mpz_class lambda;
    };
    std::vector<Term> terms;
    /// Positive gcd of the c_(i)(H_{m,n}); equals c_(i)(l_i).
    mpz_class gcd;
};

/// c_alpha(z), the b_alpha coefficient of the image.
mpz_class c_alpha(const CobordismClass& z, const Partition& alpha);

/// Largest pi_q over the monomials of g; nullopt stands for minus infinity.
std::optional<int> q_degree(const GenPoly& g, int q);

/// True if p is a prime (trial division).
bool is_prime(long long p);

/// p^k, or nullopt once it exceeds `limit`.
std::optional<long long> bounded_power(long long p, int k, long long limit = LLONG_MAX);

/// Context tying the formal group law, the geometry evaluator and the
/// generator bases at one truncation. Bases are built on first use and
/// shared afterwards.
class Lazard {
public:
    explicit Lazard(int truncation = kDefaultTruncation);

    int truncation() const { return truncation_; }
    const Fgl& fgl() const { return fgl_; }
    const Geometry& geometry() const { return geometry_; }

    const BaseGenerator& base_generator_data(int i) const;
    CobordismClass base_generator(int i) const { return base_generator_data(i).cls; }

    const GeneratorBasis& base_basis() const;
    /// Adapted basis for (p, r); r is clamped to the largest level that is
    /// visible below the truncation, which leaves I_p(r) unchanged there.
    const GeneratorBasis& adapted_basis(int p, int r) const;
    const GeneratorBasis& basis(const BasisId& id) const;
    /// min(r, 1 + max{i : p^i - 1 <= N}).
    int effective_level(int p, int r) const;

    /// v_n as a class.
    CobordismClass v(int p, int n) const;

    /// Triangular solve for the generator coordinates of z; throws
    /// NotInLazardRing when the solution is not integral.
    GenPoly to_gen_coords(const CobordismClass& z, const GeneratorBasis& basis) const;
    GenPoly to_gen_coords(const CobordismClass& z) const { return to_gen_coords(z, base_basis()); }
    /// Image in Z[b] of a generator polynomial (integral coefficients only).
    BPoly from_gen_coords(const GenPoly& g) const;

    bool is_decomposable(const CobordismClass& z) const;
    bool is_indec_mod_p(const CobordismClass& z, int p) const;

    bool in_Ipn(const CobordismClass& z, int p, int n) const;
    /// Class of z in Lambda / I_p(r), in adapted coordinates mod p. For r = 0
    /// this is the integral base-basis expansion.
    GenPoly reduce_mod_Ipr(const CobordismClass& z, int p, int r) const;

    /// Nonnegative generator of c_alpha(Lambda^{-|alpha|}).
    mpz_class c_alpha_image_gcd(const Partition& alpha, const GeneratorBasis& basis) const;
    mpz_class c_alpha_image_gcd(const Partition& alpha) const { return c_alpha_image_gcd(alpha, base_basis()); }

private:
    void check_prime(int p) const;
    std::unique_ptr<GeneratorBasis> build_adapted(int p, int r) const;

    int truncation_;
    Fgl fgl_;
    Geometry geometry_;
    mutable std::mutex mutex_;
    mutable std::map<int, BaseGenerator> base_generators_;
    mutable std::unique_ptr<GeneratorBasis> base_basis_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<GeneratorBasis>> adapted_;
};

}  // namespace cobord
