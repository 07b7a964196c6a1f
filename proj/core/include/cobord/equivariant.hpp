#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cobord/group.hpp"
#include "cobord/lazard.hpp"

namespace cobord {

/// A character of G = prod mu_{q_j}, as its index vector in prod Z/q_j.
struct Character {
    std::vector<int> index;

    bool trivial() const;
    /// "g[1,0]".
    std::string label() const;
    /// Throws unless the index vector fits the group.
    void check_against(const GroupDescriptor& group) const;
    auto operator<=>(const Character&) const = default;
};

/// Variables of M: a_{i,g}, or the alternative generators p_{i,g}.
enum class MVarKind { A, P };

struct MVar {
    int i;
    Character g;
    auto operator<=>(const MVar&) const = default;
};

/// Exponents of the M-variables in one monomial.
using MMonomial = std::map<MVar, int>;

/// Polynomial over Z[b] (Hurewicz images) in the variables a_{i,g} or
/// p_{i,g}, of degree -i each. Terms whose total weight exceeds the
/// truncation are dropped.
class MPoly {
public:
    explicit MPoly(MVarKind kind = MVarKind::A, int truncation = kDefaultTruncation);

    static MPoly constant(const BPoly& c, MVarKind kind = MVarKind::A);
    static MPoly variable(int i, Character g, MVarKind kind = MVarKind::A, int truncation = kDefaultTruncation);

    MVarKind kind() const { return kind_; }
    int truncation() const { return truncation_; }
    const std::map<MMonomial, BPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BPoly coefficient(const MMonomial& m) const;

    void add_term(const MMonomial& m, const BPoly& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const BPoly& c) const;
    bool operator==(const MPoly& o) const { return kind_ == o.kind_ && terms_ == o.terms_; }

    /// True if every term has total degree -d (b-weight plus the i's).
    bool is_homogeneous(int d) const;

    /// Replaces every variable by the polynomial `f` assigns to it.
    MPoly substitute(const std::function<MPoly(const MVar&)>& f, MVarKind target) const;

    std::string to_string() const;

private:
    MVarKind kind_;
    int truncation_;
    std::map<MMonomial, BPoly> terms_;
};

/// Sum of the i over the variables of a monomial, with multiplicity.
int m_weight(const MMonomial& m);

/// Sum of line bundles O(k_1, ..., k_s) (x) chi_g over P^{n_1} x ... x P^{n_s}
/// (s <= 3), all with trivial action on the base.
struct SplitBundleDescriptor {
    std::vector<int> base;
    struct Summand {
        std::vector<int> multidegree;
        Character character;
    };
    std::vector<Summand> summands;
};

/// An element of Omega(base)[a]: coefficients of the monomials h^e in the
/// cobordism first Chern classes h_j of the O(1)'s.
struct ChowMPoly {
    std::vector<int> base;
    std::map<Exponent, MPoly> terms;
};

/// Q(E) in Omega(base)[a]; c_1 of O(k) is the formal multiple [k](h).
ChowMPoly q_class(const Lazard& lazard, const SplitBundleDescriptor& e);

/// [E -> X] = pushforward of Q(E), using h^e |-> prod_j [P^{n_j - e_j}].
MPoly push_class(const Lazard& lazard, const SplitBundleDescriptor& e);

/// p_{i,g} = [O(1) (x) chi_g -> P^i], through the pushforward.
MPoly p_class(const Lazard& lazard, int i, const Character& g);

/// sum_{j<=i} [P^{i-j}] a_{j,g}, written out directly.
MPoly p_class_expansion(const Lazard& lazard, int i, const Character& g);

/// Rewrites an a-polynomial in the p_{i,g}, and back.
MPoly to_p_basis(const Lazard& lazard, const MPoly& f);
MPoly to_a_basis(const Lazard& lazard, const MPoly& f);

/// Outcome of checking the leading term of [p^a](t) modulo I_p(n), and
/// u_m in I_p(n) for m < p^n - 1.
struct PresentationReport {
    struct Case {
        int a;
        int n;
        bool ok = true;
        std::vector<std::string> failures;
    };
    bool ok = true;
    int p = 0;
    std::vector<Case> cases;
};

PresentationReport verify_presentation_lemmas(const Lazard& lazard, int p,
                                              const std::vector<std::pair<int, int>>& cases);

}  // namespace cobord
