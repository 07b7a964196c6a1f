// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected values come from closed formulas in oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include <cobord/actions.hpp>
#include <cobord/bounds.hpp>
#include <cobord/equivariant.hpp>

#include "oracles.hpp"

using namespace cobord;

namespace {

struct Gate {
    std::ostringstream detail;
    int failures = 0;

    void expect(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (failures < 3)
            detail << (failures ? "; " : "") << what;
        ++failures;
    }
};

const Lazard& lazard()
{
    static const Lazard l(kDefaultTruncation);
    return l;
}

std::string show(const std::optional<int>& d) { return d ? std::to_string(*d) : "-inf"; }

void chern_formulas(Gate& g)
{
    const Geometry& geo = lazard().geometry();
    for (int n = 1; n <= 8; ++n)
        for (int d = 1; d <= 5; ++d)
            g.expect(geo.hypersurface(d, n).coefficient(Partition{n}) == oracle::hypersurface_top(d, n),
                     "hyp(" + std::to_string(d) + "," + std::to_string(n) + ")");
    for (int m = 2; m <= 5; ++m)
        for (int n = m; n <= 5; ++n)
            g.expect(geo.milnor(m, n).coefficient(Partition{m + n - 1}) == oracle::milnor_top(m, n),
                     "milnor(" + std::to_string(m) + "," + std::to_string(n) + ")");
    for (int n = 2; n <= 9; ++n)
        g.expect(geo.milnor(0, n).coefficient(Partition{n - 1}) == -n, "milnor(0," + std::to_string(n) + ")");
    // All degree vectors with c <= 3 entries in 1..4, dimension up to 6.
    std::vector<std::vector<long>> degree_lists;
    for (long a = 1; a <= 4; ++a) {
        degree_lists.push_back({a});
        for (long b = a; b <= 4; ++b) {
            degree_lists.push_back({a, b});
            for (long c = b; c <= 4; ++c)
                degree_lists.push_back({a, b, c});
        }
    }
    for (const auto& degs : degree_lists)
        for (int n = 1; n <= 6; ++n) {
            const std::vector<int> ints(degs.begin(), degs.end());
            g.expect(geo.complete_intersection(ints, n).coefficient(Partition{n}) ==
                         oracle::complete_intersection_top(degs, n),
                     "ci n=" + std::to_string(n));
        }
}

void generator_criterion(Gate& g)
{
    for (int i = 1; i <= 10; ++i) {
        const mpz_class c = abs(c_alpha(lazard().base_generator(i), Partition{i}));
        long p = 0;
        const mpz_class expected = oracle::is_prime_power(i + 1, &p) ? mpz_class(p) : mpz_class(1);
        g.expect(c == expected, "l_" + std::to_string(i) + " has c = " + c.get_str());
        g.expect(c == oracle::binomial_gcd(i), "l_" + std::to_string(i) + " differs from the binomial gcd");
    }
}

void landweber_chain(Gate& g)
{
    const Lazard& L = lazard();
    for (auto [p, top] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
        const auto u = L.fgl().landweber_coeffs(p);
        for (int n = 0; n <= top; ++n) {
            const std::string tag = " (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")";
            const long pn = oracle::ipow(p, n).get_si();
            for (long m = 0; m < pn - 1; ++m)
                g.expect(L.in_Ipn(CobordismClass(u[static_cast<std::size_t>(m)]), p, n),
                         "u_" + std::to_string(m) + " outside I_p(n)" + tag);
            const CobordismClass v = L.v(p, n);
            g.expect(!L.in_Ipn(v, p, n), "v_n in I_p(n)" + tag);
            if (n >= 1)
                g.expect(L.is_indec_mod_p(v, p), "v_n decomposable mod p" + tag);
        }
    }
}

void y_witnesses(Gate& g)
{
    const Lazard& L = lazard();
    for (auto [p, s] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}}) {
        const std::string tag = " (p=" + std::to_string(p) + ", s=" + std::to_string(s) + ")";
        const int dim = static_cast<int>(oracle::ipow(p, s).get_si()) - 1;
        const CobordismClass y = L.geometry().evaluate(VarietyExpr::hyp(p, dim));
        g.expect(L.in_Ipn(y, p, s + 1), "Y_s outside I_p(s+1)" + tag);
        g.expect(!L.in_Ipn(y, p, s), "Y_s inside I_p(s)" + tag);
        bool divisible = !y.is_zero();
        for (const auto& [m, c] : y.image().terms())
            divisible = divisible && c % p == 0;
        g.expect(divisible, "Y_s has a Chern number prime to p" + tag);
    }
}

void soundness(Gate& g)
{
    const Lazard& L = lazard();
    const int max_dim = 8;
    for (const auto& group : {GroupDescriptor(2, {1}), GroupDescriptor(2, {2}), GroupDescriptor(2, {1, 1}),
                              GroupDescriptor(3, {1})}) {
        std::vector<ActionWitness> ws;
        for (int m = 0; m <= max_dim; ++m)
            for (int n = std::max(m, 1); m + n - 1 <= max_dim; ++n)
                ws.push_back(milnor_action(m, n, group));
        for (int i = 1; i <= max_dim; ++i) {
            auto [plus, minus] = generator_action(L, i, group);
            ws.push_back(plus);
            ws.push_back(minus);
        }
        for (int s = 0; s < group.rank(); ++s)
            if (oracle::ipow(group.p(), s) - 1 <= max_dim)
                ws.push_back(landweber_variety(s, group, L.truncation()));
        for (const auto& w : ws) {
            const auto b = fixed_dim_lower_bound(L, L.geometry().evaluate(w.variety), group).lower_bound;
            g.expect(!b || (w.fixed_dim && *b <= *w.fixed_dim),
                     w.variety.to_string() + " " + group.to_string() + ": bound " + show(b) + " > " + show(w.fixed_dim));
        }
        for (int d = 0; d <= max_dim / group.q() + 1; ++d)
            for (const auto& w : filtration_family(L, d, group, max_dim)) {
                const auto b = fixed_dim_lower_bound(L, L.geometry().evaluate(w.variety), group).lower_bound;
                g.expect(!b || *b <= d, "family level " + std::to_string(d) + " " + w.variety.to_string() +
                                            " " + group.to_string() + ": bound " + show(b));
                g.expect(w.fixed_dim && *w.fixed_dim <= d, "family member above its level");
            }
    }
}

void hypersurface_bound(Gate& g)
{
    struct Case {
        int p, a, n, d;
    };
    for (auto c : {Case{2, 1, 4, 3}, Case{2, 2, 6, 3}, Case{3, 1, 7, 2}}) {
        const GroupDescriptor group(c.p, {c.a});
        const CobordismClass z = lazard().geometry().evaluate(VarietyExpr::hyp(c.d, c.n));
        const auto b = fixed_dim_lower_bound(lazard(), z, group).lower_bound;
        const int expected = c.n / static_cast<int>(group.order());
        g.expect(b == expected, "hyp(" + std::to_string(c.d) + "," + std::to_string(c.n) + ") " + group.to_string() +
                                    ": bound " + show(b) + ", expected " + std::to_string(expected));
    }
}

void presentation(Gate& g)
{
    const Lazard& L = lazard();
    for (auto [p, a, n] : std::vector<std::tuple<int, int, int>>{{2, 1, 1}, {2, 2, 1}, {3, 1, 1}}) {
        const auto report = verify_presentation_lemmas(L, p, {{a, n}});
        for (const auto& c : report.cases)
            for (const auto& f : c.failures)
                g.expect(false, f);
        g.expect(report.ok && report.cases.size() == 1, "presentation case failed");
    }
}

void m_ring(Gate& g)
{
    const Lazard& L = lazard();
    const int N = L.truncation();
    const Character chi{{1}};
    for (int i = 0; i <= 6; ++i) {
        MPoly expected(MVarKind::A, N);
        for (int j = 0; j <= i; ++j) {
            BPoly pj(N);
            for (const auto& alpha : oracle::partitions(i - j))
                pj.add_term(alpha, oracle::projective_chern(i - j, alpha));
            expected += MPoly::variable(j, chi, MVarKind::A, N).scaled(pj);
        }
        const MPoly pushed = p_class(L, i, chi);
        g.expect(pushed == expected, "p_" + std::to_string(i) + " differs from its expansion");
        const MPoly p_var = MPoly::variable(i, chi, MVarKind::P, N);
        g.expect(to_p_basis(L, pushed) == p_var, "a -> p fails at " + std::to_string(i));
        g.expect(to_a_basis(L, p_var) == pushed, "p -> a fails at " + std::to_string(i));
        const MPoly a_var = MPoly::variable(i, chi, MVarKind::A, N);
        g.expect(to_a_basis(L, to_p_basis(L, a_var)) == a_var, "a round trip fails at " + std::to_string(i));
    }
}

void d_alpha(Gate& g)
{
    const Lazard& L = lazard();
    for (const GeneratorBasis* B : {&L.base_basis(), &L.adapted_basis(2, 3), &L.adapted_basis(3, 2)}) {
        const DAlphaTable table(*B);
        for (int n = 0; n <= 6; ++n)
            for (const auto& alpha : oracle::partitions(n))
                for (const auto& beta : oracle::partitions(n)) {
                    const mpz_class v = evaluate(table.get(alpha), B->monomial_image(beta));
                    g.expect(alpha == beta ? v != 0 : v == 0,
                             "d" + alpha.to_string() + "(l" + beta.to_string() + ") = " + v.get_str());
                }
    }
}

void property_suites(Gate& g)
{
    const Fgl& f = lazard().fgl();
    const int deg = 6, N = lazard().truncation();
    const TruncSeries F = f.sum(deg);
    const auto x = TruncSeries::variable(0, 2, deg, N), y = TruncSeries::variable(1, 2, deg, N);
    std::vector<TruncSeries> swapped{y, x};
    g.expect(F.substitute(swapped) == F, "F not commutative");
    const auto x3 = TruncSeries::variable(0, 3, deg, N), y3 = TruncSeries::variable(1, 3, deg, N),
               z3 = TruncSeries::variable(2, 3, deg, N);
    g.expect(f.add(f.add(x3, y3), z3) == f.add(x3, f.add(y3, z3)), "F not associative");
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            if (a && b)
                g.expect(f.n_series(a).compose(f.n_series(b)) == f.n_series(a * b),
                         "[" + std::to_string(a) + "]o[" + std::to_string(b) + "]");

    for (int n = 0; n <= 10; ++n) {
        const auto ps = oracle::partitions(n);
        std::vector<std::vector<bool>> rel(ps.size(), std::vector<bool>(ps.size()));
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j) {
                rel[i][j] = refines(ps[i], ps[j]);
                g.expect(rel[i][j] == oracle::refines(ps[i], ps[j]), "refines disagrees with search");
            }
        for (std::size_t i = 0; i < ps.size(); ++i) {
            g.expect(rel[i][i], "refines not reflexive");
            for (int q = 1; q <= 8; ++q)
                g.expect(pi_q(ps[i], q) <= n / q, "pi_q above |alpha|/q");
            for (std::size_t j = 0; j < ps.size(); ++j) {
                if (!rel[i][j])
                    continue;
                g.expect(ps[i].length() > ps[j].length() || i == j, "refinement does not lengthen");
                for (int q = 1; q <= 8; ++q)
                    g.expect(pi_q(ps[i], q) <= pi_q(ps[j], q), "pi_q not monotone");
                for (std::size_t k = 0; k < ps.size(); ++k)
                    if (rel[j][k])
                        g.expect(rel[i][k], "refines not transitive");
            }
        }
    }
    for (const auto& a : oracle::partitions_up_to(6))
        for (const auto& b : oracle::partitions_up_to(6))
            for (int q = 1; q <= 8; ++q)
                g.expect(pi_q(unite(a, b), q) == pi_q(a, q) + pi_q(b, q), "pi_q not additive");

    const GeneratorBasis& B = lazard().base_basis();
    for (int n = 1; n <= 8; ++n)
        for (const auto& alpha : oracle::partitions(n))
            for (const auto& beta : oracle::partitions(n))
                if (!oracle::refines(alpha, beta))
                    g.expect(B.c_alpha(alpha, beta) == 0, "c" + alpha.to_string() + "(l" + beta.to_string() + ") != 0");
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<void(Gate&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Chern-number formulas for hypersurfaces, Milnor hypersurfaces, complete intersections", 10, chern_formulas},
        {2, "leading Chern numbers of the polynomial generators", 0, generator_criterion},
        {3, "Landweber ideal chain and indecomposability of v_n", 0, landweber_chain},
        {4, "fixed-point-free hypersurfaces Y_s and their ideal levels", 0, y_witnesses},
        {5, "lower bound never exceeds a realized fixed-locus dimension", 60, soundness},
        {6, "hypersurface bound floor(n/q)", 0, hypersurface_bound},
        {7, "leading term of [p^a](t) modulo I_p(n)", 0, presentation},
        {8, "p_{i,g} expansion and the a <-> p change of basis", 0, m_ring},
        {9, "orthogonality of the d_alpha functionals", 0, d_alpha},
        {10, "FGL, refinement, pi_q and triangularity property suites", 120, property_suites},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Gate gate;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(gate);
        } catch (const std::exception& e) {
            gate.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds)
            gate.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        const bool ok = gate.failures == 0;
        failed += ok ? 0 : 1;
        std::printf("%s  criterion %2d  %s  (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    ok ? "" : "  ", gate.detail.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
