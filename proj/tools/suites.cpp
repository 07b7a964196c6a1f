#include "suites.hpp"

#include <cobord/actions.hpp>
#include <cobord/bounds.hpp>
#include <cobord/equivariant.hpp>

namespace cobord::tools {

namespace {

void check(SuiteResult& r, bool ok, const std::string& what)
{
    ++r.checks;
    if (!ok)
        r.failures.push_back(what);
}

std::string dim_string(const std::optional<int>& d) { return d ? std::to_string(*d) : "-inf"; }

}  // namespace

SuiteResult run_fgl_suite(const Lazard& lazard)
{
    SuiteResult r{"fgl"};
    const Fgl& fgl = lazard.fgl();
    const int N = lazard.truncation();
    const int deg = std::min(6, fgl.series_degree());

    const TruncSeries F = fgl.sum(deg);
    auto x = TruncSeries::variable(0, 2, deg, N);
    auto y = TruncSeries::variable(1, 2, deg, N);
    std::vector<TruncSeries> swapped{y, x};
    check(r, F.substitute(swapped) == F, "F(x,y) != F(y,x)");
    TruncSeries zero(2, deg, N);
    std::vector<TruncSeries> x0{x, zero};
    check(r, F.substitute(x0) == x, "F(x,0) != x");

    auto x3 = TruncSeries::variable(0, 3, deg, N);
    auto y3 = TruncSeries::variable(1, 3, deg, N);
    auto z3 = TruncSeries::variable(2, 3, deg, N);
    check(r, fgl.add(fgl.add(x3, y3), z3) == fgl.add(x3, fgl.add(y3, z3)), "F is not associative");

    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b) {
            if (a == 0 || b == 0)
                continue;
            check(r, fgl.n_series(a).compose(fgl.n_series(b)) == fgl.n_series(a * b),
                  "[" + std::to_string(a) + "]o[" + std::to_string(b) + "] != [ab]");
        }
    check(r, fgl.formal_inverse() == fgl.n_series_via_log(-1), "formal inverse disagrees with exp(-log)");
    for (int n = -3; n <= 5; ++n)
        check(r, fgl.n_series(n).is_graded_homogeneous(1), "[n](t) is not homogeneous for n=" + std::to_string(n));
    return r;
}

SuiteResult run_ideals_suite(const Lazard& lazard, int p, int max_n)
{
    SuiteResult r{"ideals"};
    const int N = lazard.truncation();
    const std::vector<BPoly> u = lazard.fgl().landweber_coeffs(p);
    for (int n = 0; n <= max_n; ++n) {
        auto pn = bounded_power(p, n, static_cast<long long>(N) + 1);
        if (!pn)
            break;
        const std::string tag = " (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")";
        for (long long m = 0; m < *pn - 1; ++m)
            check(r, lazard.in_Ipn(CobordismClass(u[static_cast<std::size_t>(m)]), p, n),
                  "u_" + std::to_string(m) + " not in I_p(n)" + tag);
        const CobordismClass v = lazard.v(p, n);
        check(r, !lazard.in_Ipn(v, p, n), "v_n in I_p(n)" + tag);
        check(r, lazard.in_Ipn(v, p, n + 1), "v_n not in I_p(n+1)" + tag);
        if (n >= 1)
            check(r, lazard.is_indec_mod_p(v, p), "v_n decomposable mod p" + tag);
        // Y_n = degree-p hypersurface of dimension p^n - 1.
        const int dim = static_cast<int>(*pn - 1);
        const CobordismClass y(lazard.geometry().hypersurface(p, dim), dim);
        check(r, lazard.in_Ipn(y, p, n + 1), "Y_n not in I_p(n+1)" + tag);
        check(r, !lazard.in_Ipn(y, p, n), "Y_n in I_p(n)" + tag);
        check(r, y.image().divisible_by(p), "Y_n has a Chern number prime to p" + tag);
    }
    return r;
}

SuiteResult run_presentation_suite(const Lazard& lazard, int p)
{
    SuiteResult r{"presentation"};
    std::vector<std::pair<int, int>> cases;
    for (int a = 1; a <= 3; ++a)
        for (int n = 1; n <= 3; ++n)
            if (bounded_power(p, a * n, static_cast<long long>(lazard.truncation()) + 1))
                cases.emplace_back(a, n);
    const PresentationReport report = verify_presentation_lemmas(lazard, p, cases);
    for (const auto& c : report.cases) {
        ++r.checks;
        for (const auto& f : c.failures)
            r.failures.push_back("(a=" + std::to_string(c.a) + ", n=" + std::to_string(c.n) + ") " + f);
    }
    return r;
}

SuiteResult run_soundness_suite(const Lazard& lazard, int p, int max_dim)
{
    SuiteResult r{"soundness"};
    max_dim = std::min(max_dim, lazard.truncation());
    const std::vector<GroupDescriptor> groups{GroupDescriptor(p, {1}), GroupDescriptor(p, {2}),
                                              GroupDescriptor(p, {1, 1})};
    for (const auto& group : groups) {
        std::vector<ActionWitness> witnesses;
        for (int m = 0; m <= max_dim; ++m)
            for (int n = std::max(m, 1); m + n - 1 <= max_dim; ++n)
                witnesses.push_back(milnor_action(m, n, group));
        for (int i = 1; i <= max_dim; ++i) {
            auto [plus, minus] = generator_action(lazard, i, group);
            witnesses.push_back(plus);
            witnesses.push_back(minus);
        }
        for (int s = 0; s < group.rank(); ++s)
            if (bounded_power(p, s, static_cast<long long>(max_dim) + 1))
                witnesses.push_back(landweber_variety(s, group, lazard.truncation()));
        for (int d = 0; d <= max_dim / group.q() + 1; ++d)
            for (auto& w : filtration_family(lazard, d, group, max_dim)) {
                check(r, !w.fixed_dim || *w.fixed_dim <= d,
                      "family member above level " + std::to_string(d) + ": " + w.variety.to_string());
                witnesses.push_back(std::move(w));
            }
        for (const auto& w : witnesses) {
            const BoundReport b =
                fixed_dim_lower_bound(lazard, lazard.geometry().evaluate(w.variety), group, w.variety.to_string());
            check(r, b.lower_bound <= w.fixed_dim,
                  w.variety.to_string() + " under " + group.to_string() + ": bound " + dim_string(b.lower_bound) +
                      " > fixed dim " + dim_string(w.fixed_dim));
        }
    }
    return r;
}

}  // namespace cobord::tools
