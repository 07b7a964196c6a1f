#include "cobord/equivariant.hpp"

#include <algorithm>

namespace cobord {

// ---------------------------------------------------------------------------
// Character

bool Character::trivial() const
{
    return std::all_of(index.begin(), index.end(), [](int x) { return x == 0; });
}

std::string Character::label() const
{
    std::string out = "g[";
    for (std::size_t k = 0; k < index.size(); ++k)
        out += (k ? "," : "") + std::to_string(index[k]);
    return out + "]";
}

void Character::check_against(const GroupDescriptor& group) const
{
    if (static_cast<int>(index.size()) != group.rank())
        throw std::invalid_argument("character " + label() + " does not match group " + group.to_string());
    for (std::size_t k = 0; k < index.size(); ++k) {
        const long long qk = *bounded_power(group.p(), group.exponents()[k]);
        if (index[k] < 0 || index[k] >= qk)
            throw std::invalid_argument("character " + label() + " out of range for " + group.to_string());
    }
}

// ---------------------------------------------------------------------------
// MPoly

int m_weight(const MMonomial& m)
{
    int w = 0;
    for (const auto& [v, e] : m)
        w += v.i * e;
    return w;
}

MPoly::MPoly(MVarKind kind, int truncation) : kind_(kind), truncation_(truncation)
{
    if (truncation < 0 || truncation > kMaxTruncation)
        throw TruncationError("unsupported truncation " + std::to_string(truncation));
}

MPoly MPoly::constant(const BPoly& c, MVarKind kind)
{
    MPoly out(kind, c.truncation());
    out.add_term({}, c);
    return out;
}

MPoly MPoly::variable(int i, Character g, MVarKind kind, int truncation)
{
    if (i < 0)
        throw std::invalid_argument("variable index must be >= 0");
    if (g.trivial())
        throw std::invalid_argument("variables are indexed by nontrivial characters");
    MPoly out(kind, truncation);
    out.add_term({{MVar{i, std::move(g)}, 1}}, BPoly::constant(1, truncation));
    return out;
}

BPoly MPoly::coefficient(const MMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BPoly(truncation_) : it->second;
}

void MPoly::add_term(const MMonomial& m, const BPoly& c)
{
    const int room = truncation_ - m_weight(m);
    if (room < 0 || c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, BPoly(truncation_));
    for (const auto& [mono, coeff] : c.terms())
        if (mono.weight() <= room)
            it->second.add_term(mono, coeff);
    if (it->second.is_zero())
        terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    if (kind_ != o.kind_)
        throw std::invalid_argument("adding polynomials in different M-variables");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    if (kind_ != o.kind_)
        throw std::invalid_argument("subtracting polynomials in different M-variables");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    if (a.kind_ != b.kind_)
        throw std::invalid_argument("multiplying polynomials in different M-variables");
    MPoly out(a.kind_, std::min(a.truncation_, b.truncation_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            MMonomial m = ma;
            for (const auto& [v, e] : mb)
                m[v] += e;
            if (m_weight(m) > out.truncation_)
                continue;
            out.add_term(m, ca * cb);
        }
    return out;
}

MPoly MPoly::scaled(const BPoly& c) const { return *this * constant(c, kind_); }

bool MPoly::is_homogeneous(int d) const
{
    for (const auto& [m, c] : terms_) {
        const int w = m_weight(m);
        for (const auto& [mono, coeff] : c.terms())
            if (mono.weight() + w != d)
                return false;
    }
    return true;
}

MPoly MPoly::substitute(const std::function<MPoly(const MVar&)>& f, MVarKind target) const
{
    std::map<MVar, MPoly> images;
    MPoly out(target, truncation_);
    for (const auto& [m, c] : terms_) {
        MPoly term = constant(c, target);
        for (const auto& [v, e] : m) {
            auto it = images.find(v);
            if (it == images.end())
                it = images.emplace(v, f(v)).first;
            for (int k = 0; k < e; ++k)
                term = term * it->second;
        }
        out += term;
    }
    return out;
}

std::string MPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    const char* name = kind_ == MVarKind::A ? "a" : "p";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty())
            out += " + ";
        out += "(" + c.to_string("b") + ")";
        for (const auto& [v, e] : m) {
            out += "*" + std::string(name) + "(" + std::to_string(v.i) + "," + v.g.label() + ")";
            if (e > 1)
                out += "^" + std::to_string(e);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bundles

namespace {

struct Layout {
    int nvars;
    int total_cap;
    Exponent caps;
};

Layout layout_of(const std::vector<int>& base, int truncation)
{
    if (base.size() > 3)
        throw std::invalid_argument("base must be a product of at most three projective spaces");
    Layout l{std::max<int>(1, static_cast<int>(base.size())), 0, {0, 0, 0}};
    for (std::size_t j = 0; j < base.size(); ++j) {
        if (base[j] < 0)
            throw std::invalid_argument("projective space dimensions must be >= 0");
        l.caps[j] = base[j];
        l.total_cap += base[j];
    }
    if (l.total_cap > truncation)
        throw TruncationError("base dimension " + std::to_string(l.total_cap) + " beyond truncation " +
                              std::to_string(truncation));
    return l;
}

ChowMPoly multiply(const ChowMPoly& x, const ChowMPoly& y)
{
    ChowMPoly out{x.base, {}};
    for (const auto& [e, mx] : x.terms)
        for (const auto& [f, my] : y.terms) {
            Exponent s{e[0] + f[0], e[1] + f[1], e[2] + f[2]};
            bool fits = true;
            for (std::size_t j = 0; j < 3; ++j)
                fits = fits && s[j] <= (j < x.base.size() ? x.base[j] : 0);
            if (!fits)
                continue;
            MPoly prod = mx * my;
            auto [it, inserted] = out.terms.try_emplace(s, MPoly(MVarKind::A, prod.truncation()));
            it->second += prod;
        }
    return out;
}

}  // namespace

ChowMPoly q_class(const Lazard& lazard, const SplitBundleDescriptor& e)
{
    const int N = lazard.truncation();
    const Layout layout = layout_of(e.base, N);
    const Fgl& fgl = lazard.fgl();

    ChowMPoly result{e.base, {}};
    result.terms.emplace(Exponent{0, 0, 0}, MPoly::constant(BPoly::constant(1, N)));

    for (const auto& summand : e.summands) {
        if (summand.character.trivial())
            throw std::invalid_argument("summand with trivial character: E^G must vanish");
        if (summand.multidegree.size() != e.base.size())
            throw std::invalid_argument("multidegree length differs from the number of base factors");

        // c_1(O(k_1, ..., k_s)) = [k_1](h_1) +_F ... +_F [k_s](h_s).
        TruncSeries c1(layout.nvars, layout.total_cap, N, std::nullopt, layout.caps);
        bool started = false;
        for (std::size_t j = 0; j < e.base.size() && layout.total_cap > 0; ++j) {
            const int k = summand.multidegree[j];
            if (k == 0 || e.base[j] == 0)
                continue;
            auto h = TruncSeries::variable(static_cast<int>(j), layout.nvars, layout.total_cap, N, std::nullopt,
                                           layout.caps);
            TruncSeries term = fgl.n_series(k).truncated(layout.total_cap).compose(h);
            c1 = started ? fgl.add(c1, term) : term;
            started = true;
        }

        ChowMPoly factor{e.base, {}};
        TruncSeries power =
            TruncSeries::constant(BPoly::constant(1, N), layout.nvars, layout.total_cap, layout.caps);
        for (int i = 0; i <= layout.total_cap && !power.is_zero(); ++i) {
            const MPoly var = MPoly::variable(i, summand.character, MVarKind::A, N);
            for (const auto& [exp, coeff] : power.coeffs()) {
                auto [it, inserted] = factor.terms.try_emplace(exp, MPoly(MVarKind::A, N));
                it->second += var.scaled(coeff);
            }
            power = power * c1;
        }
        result = multiply(result, factor);
    }
    std::erase_if(result.terms, [](const auto& kv) { return kv.second.is_zero(); });
    return result;
}

MPoly push_class(const Lazard& lazard, const SplitBundleDescriptor& e)
{
    const ChowMPoly q = q_class(lazard, e);
    const Geometry& geo = lazard.geometry();
    MPoly out(MVarKind::A, lazard.truncation());
    for (const auto& [exp, m] : q.terms) {
        BPoly factor = BPoly::constant(1, lazard.truncation());
        for (std::size_t j = 0; j < e.base.size(); ++j)
            factor *= geo.projective_space(e.base[j] - exp[j]);
        out += m.scaled(factor);
    }
    return out;
}

MPoly p_class(const Lazard& lazard, int i, const Character& g)
{
    return push_class(lazard, SplitBundleDescriptor{{i}, {{{1}, g}}});
}

MPoly p_class_expansion(const Lazard& lazard, int i, const Character& g)
{
    MPoly out(MVarKind::A, lazard.truncation());
    for (int j = 0; j <= i; ++j)
        out += MPoly::variable(j, g, MVarKind::A, lazard.truncation())
                   .scaled(lazard.geometry().projective_space(i - j));
    return out;
}

MPoly to_a_basis(const Lazard& lazard, const MPoly& f)
{
    if (f.kind() != MVarKind::P)
        throw std::invalid_argument("to_a_basis expects a polynomial in the p_{i,g}");
    return f.substitute([&](const MVar& v) { return p_class_expansion(lazard, v.i, v.g); }, MVarKind::A);
}

MPoly to_p_basis(const Lazard& lazard, const MPoly& f)
{
    if (f.kind() != MVarKind::A)
        throw std::invalid_argument("to_p_basis expects a polynomial in the a_{i,g}");
    const int N = lazard.truncation();
    std::map<MVar, MPoly> memo;
    // a_{i,g} = p_{i,g} - sum_{j<i} [P^{i-j}] a_{j,g}.
    std::function<MPoly(const MVar&)> a_in_p = [&](const MVar& v) -> MPoly {
        if (auto it = memo.find(v); it != memo.end())
            return it->second;
        MPoly out = MPoly::variable(v.i, v.g, MVarKind::P, N);
        for (int j = 0; j < v.i; ++j)
            out -= a_in_p(MVar{j, v.g}).scaled(lazard.geometry().projective_space(v.i - j));
        return memo.emplace(v, out).first->second;
    };
    return f.substitute(a_in_p, MVarKind::P);
}

// ---------------------------------------------------------------------------
// Presentation lemmas

PresentationReport verify_presentation_lemmas(const Lazard& lazard, int p,
                                              const std::vector<std::pair<int, int>>& cases)
{
    const int N = lazard.truncation();
    PresentationReport report;
    report.p = p;
    for (auto [a, n] : cases) {
        PresentationReport::Case c{a, n, true, {}};
        if (a < 1 || n < 1)
            throw std::invalid_argument("presentation cases need a >= 1 and n >= 1");
        const auto qn_opt = bounded_power(p, a * n, static_cast<long long>(N) + 1);
        if (!qn_opt)
            throw TruncationError("q^n - 1 beyond truncation for (a, n) = (" + std::to_string(a) + ", " +
                                  std::to_string(n) + ")");
        const long long qn = *qn_opt;
        const long long q = *bounded_power(p, a);
        const long long pn = *bounded_power(p, n);
        const int top = static_cast<int>(qn);
        const TruncSeries series = lazard.fgl().n_series(static_cast<int>(q));
        auto fail = [&](std::string msg) {
            c.ok = false;
            c.failures.push_back(std::move(msg));
        };
        for (int k = 1; k < top; ++k) {
            const GenPoly red = lazard.reduce_mod_Ipr(CobordismClass(series.coeff(k)), p, n);
            if (!red.is_zero())
                fail("coefficient of t^" + std::to_string(k) + " is " + red.to_string() + " mod I_p(n)");
        }
        const unsigned e = static_cast<unsigned>((qn - 1) / (pn - 1));
        const GenPoly lead = lazard.reduce_mod_Ipr(CobordismClass(series.coeff(top)), p, n);
        const GenPoly expected = lazard.reduce_mod_Ipr(CobordismClass(lazard.fgl().v(p, n).pow(e)), p, n);
        if (!(lead == expected))
            fail("coefficient of t^" + std::to_string(top) + " is " + lead.to_string() + ", expected " +
                 expected.to_string());
        if (expected.is_zero())
            fail("v_n power vanishes mod I_p(n)");
        const std::vector<BPoly> u = lazard.fgl().landweber_coeffs(p);
        for (long long m = 0; m < pn - 1 && m <= N; ++m)
            if (!lazard.in_Ipn(CobordismClass(u[static_cast<std::size_t>(m)]), p, n))
                fail("u_" + std::to_string(m) + " not in I_p(n)");
        report.ok = report.ok && c.ok;
        report.cases.push_back(std::move(c));
    }
    return report;
}

}  // namespace cobord
