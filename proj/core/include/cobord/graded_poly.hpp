#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>

#include "cobord/errors.hpp"
#include "cobord/monomial.hpp"

namespace cobord {

/// Sparse polynomial over Z or F_p in variables x_1, x_2, ... with x_i of
/// weight i, truncated above a maximal weight. Monomials are partitions.
/// The Tag parameter separates polynomials in the b_i (Hurewicz images)
/// from polynomials in Lazard generators l_i.
template <class Tag>
class GradedPoly {
public:
    using Terms = std::map<Monomial, mpz_class, MonomialOrder>;

    explicit GradedPoly(int truncation = kDefaultTruncation, std::optional<int> modulus = std::nullopt)
        : truncation_(truncation), modulus_(modulus.value_or(0))
    {
        if (truncation < 0 || truncation > kMaxTruncation)
            throw TruncationError("truncation must lie in [0, " + std::to_string(kMaxTruncation) + "]");
        if (modulus && *modulus < 2)
            throw std::invalid_argument("modulus must be a prime");
    }

    static GradedPoly constant(const mpz_class& c, int truncation = kDefaultTruncation,
                               std::optional<int> modulus = std::nullopt)
    {
        GradedPoly p(truncation, modulus);
        p.add_term(Monomial{}, c);
        return p;
    }

    static GradedPoly monomial(const Partition& alpha, const mpz_class& c = 1,
                               int truncation = kDefaultTruncation, std::optional<int> modulus = std::nullopt)
    {
        GradedPoly p(truncation, modulus);
        if (alpha.weight() > truncation)
            throw TruncationError("monomial " + alpha.to_string() + " exceeds truncation " +
                                  std::to_string(truncation));
        p.add_term(Monomial::from(alpha), c);
        return p;
    }

    /// The generator of weight i as a polynomial.
    static GradedPoly variable(int i, int truncation = kDefaultTruncation,
                               std::optional<int> modulus = std::nullopt)
    {
        return monomial(Partition{i}, 1, truncation, modulus);
    }

    int truncation() const { return truncation_; }
    std::optional<int> modulus() const
    {
        return modulus_ ? std::optional<int>(modulus_) : std::nullopt;
    }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    mpz_class coefficient(const Partition& alpha) const
    {
        if (alpha.weight() > kMaxTruncation)
            return 0;
        return coefficient(Monomial::from(alpha));
    }
    mpz_class coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }
    /// Coefficient of the empty monomial.
    mpz_class constant_term() const { return coefficient(Monomial{}); }

    /// Adds c * monomial; terms above the truncation are dropped.
    void add_term(const Monomial& m, const mpz_class& c)
    {
        if (m.weight() > truncation_ || c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted)
            it->second += c;
        normalize(it);
    }
    void add_term(const Partition& alpha, const mpz_class& c)
    {
        if (alpha.weight() > truncation_)
            return;
        add_term(Monomial::from(alpha), c);
    }

    GradedPoly& operator+=(const GradedPoly& o)
    {
        check_compatible(o);
        if (o.truncation_ < truncation_)
            truncate(o.truncation_);
        for (const auto& [m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }
    GradedPoly& operator-=(const GradedPoly& o)
    {
        check_compatible(o);
        if (o.truncation_ < truncation_)
            truncate(o.truncation_);
        for (const auto& [m, c] : o.terms_)
            add_term(m, -c);
        return *this;
    }
    GradedPoly& operator*=(const mpz_class& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            it = normalize(it);
        }
        return *this;
    }

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(GradedPoly a, const mpz_class& s) { return a *= s; }
    friend GradedPoly operator*(const mpz_class& s, GradedPoly a) { return a *= s; }
    GradedPoly operator-() const { return *this * mpz_class(-1); }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b)
    {
        a.check_compatible(b);
        GradedPoly out(std::min(a.truncation_, b.truncation_), a.modulus());
        const int limit = out.truncation_;
        for (const auto& [ma, ca] : a.terms_) {
            if (ma.weight() > limit)
                break;
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.weight() + mb.weight() > limit)
                    break;
                auto [it, inserted] = out.terms_.try_emplace(ma * mb, 0);
                mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
        }
        out.normalize_all();
        return out;
    }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    bool operator==(const GradedPoly& o) const
    {
        return modulus_ == o.modulus_ && terms_ == o.terms_;
    }

    GradedPoly pow(unsigned k) const
    {
        GradedPoly result = constant(1, truncation_, modulus());
        GradedPoly base = *this;
        while (k) {
            if (k & 1u)
                result *= base;
            k >>= 1u;
            if (k)
                base *= base;
        }
        return result;
    }

    /// Multiplicative inverse in the truncated ring; the constant term must
    /// be a unit (+-1 over Z, non-zero over F_p).
    GradedPoly inverse() const
    {
        mpz_class c0 = constant_term();
        mpz_class c0_inv;
        if (modulus_) {
            if (c0 % modulus_ == 0 || mpz_invert(c0_inv.get_mpz_t(), c0.get_mpz_t(), mpz_class(modulus_).get_mpz_t()) == 0)
                throw std::domain_error("constant term is not invertible mod p");
        } else {
            if (c0 != 1 && c0 != -1)
                throw std::domain_error("constant term is not a unit in Z");
            c0_inv = c0;
        }
        // this = c0 (1 + y) with y of positive weight, nilpotent after truncation.
        GradedPoly y = *this * c0_inv;
        y.add_term(Monomial{}, -1);
        GradedPoly minus_y = -y;
        GradedPoly sum = constant(1, truncation_, modulus());
        GradedPoly power = sum;
        for (int k = 1; k <= truncation_ && !power.is_zero(); ++k) {
            power *= minus_y;
            sum += power;
        }
        return sum * c0_inv;
    }

    /// Drops all terms of weight above `weight`; lowers the truncation.
    void truncate(int weight)
    {
        if (weight >= truncation_)
            return;
        truncation_ = weight;
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->first.weight() > weight ? terms_.erase(it) : std::next(it);
    }

    GradedPoly with_truncation(int weight) const
    {
        GradedPoly out(weight, modulus());
        for (const auto& [m, c] : terms_)
            out.add_term(m, c);
        return out;
    }

    /// Reduction of integer coefficients mod p.
    GradedPoly reduce_mod(int p) const
    {
        if (modulus_ && modulus_ != p)
            throw ModulusMismatch("cannot reduce an F_" + std::to_string(modulus_) + " polynomial mod " +
                                  std::to_string(p));
        GradedPoly out(truncation_, p);
        for (const auto& [m, c] : terms_)
            out.add_term(m, c);
        return out;
    }

    GradedPoly homogeneous_part(int weight) const
    {
        GradedPoly out(truncation_, modulus());
        for (const auto& [m, c] : terms_)
            if (m.weight() == weight)
                out.terms_.emplace(m, c);
        return out;
    }

    std::set<int> weights() const
    {
        std::set<int> w;
        for (const auto& [m, c] : terms_)
            w.insert(m.weight());
        return w;
    }

    /// Weight of a non-zero homogeneous polynomial; empty otherwise.
    std::optional<int> homogeneous_weight() const
    {
        auto w = weights();
        if (w.size() != 1)
            return std::nullopt;
        return *w.begin();
    }

    int max_weight() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

    /// True iff every coefficient is divisible by d.
    bool divisible_by(const mpz_class& d) const
    {
        for (const auto& [m, c] : terms_)
            if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
                return false;
        return true;
    }

    std::string to_string(const char* symbol) const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            mpz_class abs_c = abs(c);
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            Partition alpha = m.to_partition();
            if (alpha.empty() || abs_c != 1)
                s += abs_c.get_str();
            if (!alpha.empty()) {
                if (abs_c != 1)
                    s += '*';
                s += symbol;
                s += alpha.to_string();
            }
        }
        return s;
    }

private:
    void check_compatible(const GradedPoly& o) const
    {
        if (modulus_ != o.modulus_)
            throw ModulusMismatch("coefficient rings differ (modulus " + std::to_string(modulus_) + " vs " +
                                  std::to_string(o.modulus_) + ")");
    }

    typename Terms::iterator normalize(typename Terms::iterator it)
    {
        if (modulus_)
            mpz_fdiv_r_ui(it->second.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(modulus_));
        if (it->second == 0)
            return terms_.erase(it);
        return std::next(it);
    }

    void normalize_all()
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = normalize(it);
    }

    Terms terms_;
    int truncation_;
    int modulus_;  // 0 means integer coefficients
};

}  // namespace cobord
