#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cobord/graded_poly.hpp"

namespace cobord {

struct BTag;
/// Polynomial in b_1, b_2, ... with deg(b_i) = -i; houses Hurewicz images.
using BPoly = GradedPoly<BTag>;

inline constexpr int kMaxSeriesVars = 3;
using Exponent = std::array<int, kMaxSeriesVars>;

/// Truncated power series in up to three auxiliary variables with BPoly
/// coefficients. Terms are kept when every exponent respects its variable
/// cap and the total degree respects the total cap.
class TruncSeries {
public:
    using Coeffs = std::map<Exponent, BPoly>;

    /// `weight_truncation` and `modulus` describe the coefficient ring.
    TruncSeries(int nvars, int total_cap, int weight_truncation = kDefaultTruncation,
                std::optional<int> modulus = std::nullopt, std::optional<Exponent> var_caps = std::nullopt);

    /// The series consisting of the single variable with the given index.
    static TruncSeries variable(int index, int nvars, int total_cap, int weight_truncation = kDefaultTruncation,
                                std::optional<int> modulus = std::nullopt,
                                std::optional<Exponent> var_caps = std::nullopt);
    /// The constant series c.
    static TruncSeries constant(const BPoly& c, int nvars, int total_cap,
                                std::optional<Exponent> var_caps = std::nullopt);
    /// One-variable series sum_k coeffs[k] t^k.
    static TruncSeries univariate(const std::vector<BPoly>& coeffs, int total_cap);

    int nvars() const { return nvars_; }
    int total_cap() const { return total_cap_; }
    const Exponent& var_caps() const { return caps_; }
    int weight_truncation() const { return weight_truncation_; }
    std::optional<int> modulus() const { return modulus_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    BPoly coeff(const Exponent& e) const;
    /// Coefficient of t^k in a one-variable series.
    BPoly coeff(int k) const { return coeff(Exponent{k, 0, 0}); }
    void add_to(const Exponent& e, const BPoly& c);
    bool admits(const Exponent& e) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const BPoly& s) const;
    TruncSeries scaled(const mpz_class& s) const;
    TruncSeries operator-() const { return scaled(mpz_class(-1)); }
    bool operator==(const TruncSeries& o) const;

    /// Copy with a lower total cap, dropping higher-degree terms.
    TruncSeries truncated(int total_cap) const;
    /// Reduces every coefficient mod p.
    TruncSeries reduce_mod(int p) const;

    /// Non-negative integer power.
    TruncSeries pow(unsigned k) const;
    /// Multiplicative inverse; the constant term must be a unit.
    TruncSeries inverse() const;
    /// Integer power, negative exponents through the inverse.
    TruncSeries power(int k) const;

    /// f(g_1, ..., g_n) where f = *this in n variables; every g_i must have
    /// zero constant term and all g_i share their variable layout.
    TruncSeries substitute(std::span<const TruncSeries> values) const;
    /// f(g) for a one-variable f.
    TruncSeries compose(const TruncSeries& g) const;
    /// Compositional inverse of a one-variable f = u t + O(t^2), u a unit.
    TruncSeries comp_inverse() const;

    /// True if each coefficient of a monomial of total degree k is
    /// homogeneous of weight k - degree (zero coefficients are allowed).
    bool is_graded_homogeneous(int degree) const;

    std::string to_string() const;

private:
    void check_compatible(const TruncSeries& o) const;
    BPoly zero_coeff() const { return BPoly(weight_truncation_, modulus_); }

    int nvars_;
    int total_cap_;
    Exponent caps_;
    int weight_truncation_;
    std::optional<int> modulus_;
    Coeffs coeffs_;
};

/// Total degree of an exponent vector.
inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

}  // namespace cobord
