#include <doctest.h>

#include <cobord/lazard.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace cobord;

namespace {

constexpr int N = kDefaultTruncation;

CobordismClass cls(const VarietyExpr& e) { return test::lazard().geometry().evaluate(e); }

GenPoly gen(const std::vector<std::pair<Partition, long>>& terms, std::optional<int> modulus = 2)
{
    LPoly poly(N, modulus);
    for (const auto& [a, c] : terms)
        poly.add_term(a, c);
    return GenPoly(poly, BasisId::base());
}

/// Image of l_beta from the generators themselves, by repeated products.
BPoly product_of_generators(const GeneratorBasis& basis, const Partition& beta)
{
    BPoly out = BPoly::constant(1, N);
    for (int part : beta.parts())
        out *= basis.generator(part).image();
    return out;
}

/// A random integral combination of up to three varieties of dimension d.
CobordismClass random_class(int d)
{
    std::vector<VarietyExpr> pool;
    for (const auto& e : test::constructor_varieties(d))
        if (e.dimension() == d)
            pool.push_back(e);
    CobordismClass z(BPoly(N), d);
    const int k = oracle::uniform(1, 3);
    for (int j = 0; j < k; ++j) {
        const auto& e = pool[static_cast<std::size_t>(oracle::uniform(0, static_cast<int>(pool.size()) - 1))];
        z = z + mpz_class(oracle::uniform(-4, 4)) * cls(e);
    }
    return z;
}

}  // namespace

TEST_SUITE("lazard")
{
    TEST_CASE("c_alpha")
    {
        const CobordismClass p1 = cls(VarietyExpr::proj(1));
        CHECK(c_alpha(p1, Partition{1}) == -2);
        CHECK(c_alpha(CobordismClass::point(), Partition{}) == 1);
        CHECK(c_alpha(p1, Partition{2}) == 0);
    }

    TEST_CASE("base generators realize the binomial gcd")
    {
        const Lazard& L = test::lazard();
        CHECK(L.base_generator_data(1).gcd == 2);
        CHECK(L.base_generator_data(3).gcd == 2);
        CHECK(L.base_generator_data(4).gcd == 5);
        CHECK(L.base_generator(1).image() == -cls(VarietyExpr::proj(1)).image());
        for (int i = 1; i <= N; ++i) {
            const BaseGenerator& g = L.base_generator_data(i);
            long p = 0;
            const bool pp = oracle::is_prime_power(i + 1, &p);
            const mpz_class expected = pp ? mpz_class(p) : mpz_class(1);
            CHECK(g.gcd == oracle::binomial_gcd(i));
            CHECK(g.gcd == expected);
            CHECK(c_alpha(g.cls, Partition{i}) == expected);
            CHECK(g.cls.dim() == i);
            // The recorded Milnor combination gives the same c_(i), by the closed formula.
            mpz_class via_formula = 0;
            BPoly via_images(N);
            for (const auto& t : g.terms) {
                CHECK(t.m != 1);
                CHECK(t.m + t.n - 1 == i);
                via_formula += t.lambda * oracle::milnor_top(t.m, t.n);
                via_images += L.geometry().milnor(t.m, t.n) * t.lambda;
            }
            CHECK(via_formula == expected);
            CHECK(via_images == g.cls.image());
        }
        CHECK_THROWS_AS(L.base_generator_data(N + 1), TruncationError);
    }

    TEST_CASE("generator basis leading coefficients")
    {
        const GeneratorBasis& B = test::lazard().base_basis();
        for (int i = 1; i <= N; ++i) {
            CHECK(B.leading_coefficient(i) == c_alpha(B.generator(i), Partition{i}));
            CHECK(B.sign(i) == 1);
        }
        CHECK(B.replaced_indices().empty());
    }

    TEST_CASE("adapted bases")
    {
        const Lazard& L = test::lazard();
        const GeneratorBasis& a22 = L.adapted_basis(2, 2);
        CHECK(a22.replaced_indices() == std::vector<int>{1});
        CHECK(c_alpha(a22.generator(1), Partition{1}) == -2);
        CHECK(a22.generator(1).image().divisible_by(2));

        const GeneratorBasis& a21 = L.adapted_basis(2, 1);
        CHECK(a21.replaced_indices().empty());
        for (int i = 1; i <= N; ++i)
            CHECK(a21.generator(i).image() == L.base_basis().generator(i).image());

        const GeneratorBasis& a32 = L.adapted_basis(3, 2);
        const BPoly diff = a32.generator(2).image() - L.v(3, 1).image();
        CHECK(diff.divisible_by(3));

        for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {5, 2}, {7, 2}, {11, 2}}) {
            const GeneratorBasis& B = L.adapted_basis(p, r);
            for (int i : B.replaced_indices()) {
                CHECK(oracle::is_prime_power(i + 1));
                CHECK(c_alpha(B.generator(i), Partition{i}) == -p);
                CHECK(B.generator(i).image().divisible_by(p));
            }
            for (int i = 1; i <= N; ++i) {
                long q = 0;
                const bool pp = oracle::is_prime_power(i + 1, &q);
                CHECK(abs(B.leading_coefficient(i)) == (pp ? q : 1));
            }
        }
        CHECK(L.effective_level(2, 10) == 4);
        CHECK(L.effective_level(3, 10) == 3);
        CHECK(L.effective_level(13, 10) == 2);
        CHECK(L.effective_level(17, 10) == 1);
        CHECK(L.effective_level(2, 1) == 1);
        CHECK(&L.adapted_basis(2, 10) == &L.adapted_basis(2, 4));
        CHECK_THROWS(L.adapted_basis(4, 2));
    }

    TEST_CASE("triangularity up to weight 8")
    {
        const Lazard& L = test::lazard();
        for (const GeneratorBasis* B : {&L.base_basis(), &L.adapted_basis(2, 3), &L.adapted_basis(3, 2)})
            for (int n = 1; n <= 8; ++n) {
                const auto ps = oracle::partitions(n);
                for (const auto& alpha : ps)
                    for (const auto& beta : ps) {
                        const mpz_class c = B->c_alpha(alpha, beta);
                        if (!oracle::refines(alpha, beta))
                            CHECK_MESSAGE(c == 0, alpha.to_string() << " " << beta.to_string());
                        if (alpha == beta)
                            CHECK(c != 0);
                    }
            }
    }

    TEST_CASE("monomial images are products of generators")
    {
        const Lazard& L = test::lazard();
        for (const GeneratorBasis* B : {&L.base_basis(), &L.adapted_basis(2, 3)})
            for (const auto& beta : oracle::partitions_up_to(9))
                CHECK(B->monomial_image(beta) == product_of_generators(*B, beta));
    }

    TEST_CASE("generator coordinates")
    {
        const Lazard& L = test::lazard();
        const GenPoly one = L.to_gen_coords(CobordismClass::point());
        CHECK(one.poly().size() == 1);
        CHECK(one.coefficient(Partition{}) == 1);

        const CobordismClass l2l1 = L.base_generator(2) * L.base_generator(1);
        const GenPoly c21 = L.to_gen_coords(l2l1);
        CHECK(c21.poly().size() == 1);
        CHECK(c21.coefficient(Partition{2, 1}) == 1);

        const CobordismClass p2 = cls(VarietyExpr::proj(2));
        const GenPoly cp2 = L.to_gen_coords(p2);
        for (const auto& [m, c] : cp2.poly().terms())
            CHECK(m.weight() == 2);
        CHECK(L.from_gen_coords(cp2) == p2.image());

        CHECK_THROWS_AS(L.to_gen_coords(CobordismClass(BPoly::variable(1, N), 1)), NotInLazardRing);
        CHECK_THROWS(L.to_gen_coords(CobordismClass(BPoly::variable(1, N).reduce_mod(2), 1)));
    }

    TEST_CASE("round trip for constructor classes up to dimension 8")
    {
        const Lazard& L = test::lazard();
        for (const auto& e : test::constructor_varieties(8)) {
            const CobordismClass z = cls(e);
            for (const GeneratorBasis* B : {&L.base_basis(), &L.adapted_basis(2, 3), &L.adapted_basis(3, 2)}) {
                const GenPoly g = L.to_gen_coords(z, *B);
                BPoly rebuilt(N);
                for (const auto& [m, c] : g.poly().terms())
                    rebuilt += product_of_generators(*B, m.to_partition()) * c;
                CHECK_MESSAGE(rebuilt == z.image(), e.to_string());
            }
        }
    }

    TEST_CASE("decomposability")
    {
        const Lazard& L = test::lazard();
        CHECK_FALSE(L.is_decomposable(cls(VarietyExpr::proj(1))));
        CHECK(L.is_decomposable(cls(VarietyExpr::product({VarietyExpr::proj(1), VarietyExpr::proj(1)}))));
        CHECK(L.is_indec_mod_p(cls(VarietyExpr::hyp(3, 2)), 3));
        CHECK(L.is_indec_mod_p(L.v(2, 1), 2));
        CHECK_FALSE(L.is_indec_mod_p(mpz_class(3) * cls(VarietyExpr::proj(2)), 3));
        // c_(3)(H_{2,2}) = 6 is even but not divisible by 4, and 3 + 1 = 4.
        CHECK(L.is_indec_mod_p(cls(VarietyExpr::milnor(2, 2)), 2));
        CHECK_FALSE(L.is_indec_mod_p(cls(VarietyExpr::milnor(2, 2)), 3));
        for (int i = 1; i <= N; ++i)
            for (int p : {2, 3, 5, 7, 11})
                CHECK(L.is_indec_mod_p(L.base_generator(i), p));
        CHECK_THROWS(L.is_decomposable(CobordismClass::point()));
    }

    TEST_CASE("Landweber ideal membership")
    {
        const Lazard& L = test::lazard();
        for (int n = 1; n <= 5; ++n)
            CHECK(L.in_Ipn(CobordismClass(BPoly::constant(2, N), 0), 2, n));
        CHECK_FALSE(L.in_Ipn(CobordismClass(BPoly::constant(2, N), 0), 2, 0));
        CHECK(L.in_Ipn(CobordismClass(BPoly(N), 0), 2, 0));
        CHECK_FALSE(L.in_Ipn(CobordismClass::point(), 3, kInfiniteLevel));

        // The chain I_p(n) < I_p(n+1), witnessed by v_n.
        for (auto [p, top] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}})
            for (int n = 0; n <= top; ++n) {
                const CobordismClass v = L.v(p, n);
                CHECK_FALSE(L.in_Ipn(v, p, n));
                CHECK(L.in_Ipn(v, p, n + 1));
                CHECK(L.in_Ipn(v, p, kInfiniteLevel));
                if (n >= 1)
                    CHECK(L.is_indec_mod_p(v, p));
                const auto u = L.fgl().landweber_coeffs(p);
                const long pn = oracle::ipow(p, n).get_si();
                for (long m = 0; m < pn - 1; ++m)
                    CHECK(L.in_Ipn(CobordismClass(u[static_cast<std::size_t>(m)]), p, n));
            }

        // Y_s = degree-p hypersurface of dimension p^s - 1.
        for (auto [p, s] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}}) {
            const int dim = static_cast<int>(oracle::ipow(p, s).get_si()) - 1;
            const CobordismClass y = cls(VarietyExpr::hyp(p, dim));
            CHECK(L.in_Ipn(y, p, s + 1));
            CHECK_FALSE(L.in_Ipn(y, p, s));
        }
    }

    TEST_CASE("finite levels sit inside level infinity, and large levels coincide with it")
    {
        const Lazard& L = test::lazard();
        for (int trial = 0; trial < 60; ++trial) {
            const int d = oracle::uniform(1, 8);
            CobordismClass z = random_class(d);
            if (trial % 3 == 0)
                z = mpz_class(2) * z;
            if (trial % 5 == 0)
                z = z + L.v(2, 1) * random_class(d - 1 > 0 ? d - 1 : 1);
            if (!z.dim())
                continue;
            for (int p : {2, 3}) {
                bool previous = L.in_Ipn(z, p, 0);
                for (int n = 1; n <= 6; ++n) {
                    const bool now = L.in_Ipn(z, p, n);
                    if (previous)
                        CHECK(now);
                    if (now)
                        CHECK(L.in_Ipn(z, p, kInfiniteLevel));
                    previous = now;
                }
                CHECK(L.in_Ipn(z, p, 40) == L.in_Ipn(z, p, kInfiniteLevel));
                CHECK(L.in_Ipn(z, p, kInfiniteLevel) == z.image().divisible_by(p));
            }
        }
    }

    TEST_CASE("reduction modulo I_p(r)")
    {
        const Lazard& L = test::lazard();
        CHECK(L.reduce_mod_Ipr(cls(VarietyExpr::proj(1)), 2, 2).is_zero());
        const GenPoly p2 = L.reduce_mod_Ipr(cls(VarietyExpr::proj(2)), 2, 2);
        CHECK(p2.poly().size() == 1);
        CHECK(p2.coefficient(Partition{2}) != 0);
        CHECK(p2.modulus() == 2);
        CHECK(L.reduce_mod_Ipr(L.v(3, 1), 3, 2).is_zero());

        const GenPoly integral = L.reduce_mod_Ipr(cls(VarietyExpr::proj(2)), 2, 0);
        CHECK_FALSE(integral.modulus().has_value());
        CHECK(integral == L.to_gen_coords(cls(VarietyExpr::proj(2))));

        for (int trial = 0; trial < 40; ++trial) {
            const int d = oracle::uniform(1, 6);
            const int e = oracle::uniform(1, 6);
            const CobordismClass z = random_class(d), w = random_class(e);
            for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
                const GenPoly rz = L.reduce_mod_Ipr(z, p, r);
                CHECK(rz.is_zero() == L.in_Ipn(z, p, r));
                for (const auto& [m, c] : rz.poly().terms())
                    for (int i = 1; i <= r - 1; ++i)
                        CHECK_FALSE(m.to_partition().contains(static_cast<int>(oracle::ipow(p, i).get_si()) - 1));
                CHECK(L.reduce_mod_Ipr(z * w, p, r) == rz * L.reduce_mod_Ipr(w, p, r));
                CHECK(L.reduce_mod_Ipr(z + w, p, r) == rz + L.reduce_mod_Ipr(w, p, r));
            }
        }
    }

    TEST_CASE("q-degree")
    {
        CHECK_FALSE(q_degree(gen({}), 2).has_value());
        CHECK(q_degree(gen({{Partition{3, 1}, 1}}), 2) == 1);
        CHECK(q_degree(gen({{Partition{4}, 1}, {Partition{2, 2}, 1}}), 2) == 2);
        CHECK(q_degree(gen({{Partition{}, 1}}), 3) == 0);
        CHECK(q_degree(gen({{Partition{5, 1}, 1}}), 1) == 6);

        const auto ps = oracle::partitions_up_to(6);
        auto random_gen = [&](int p) {
            std::vector<std::pair<Partition, long>> t;
            const int k = oracle::uniform(0, 4);
            for (int j = 0; j < k; ++j)
                t.emplace_back(ps[static_cast<std::size_t>(oracle::uniform(0, static_cast<int>(ps.size()) - 1))],
                               oracle::uniform(1, p - 1));
            return gen(t, p);
        };
        for (int trial = 0; trial < 200; ++trial) {
            const int p = trial % 2 ? 3 : 2;
            const GenPoly g = random_gen(p), h = random_gen(p);
            for (int q = 1; q <= 5; ++q) {
                const auto dg = q_degree(g, q), dh = q_degree(h, q), dgh = q_degree(g * h, q);
                if (!dg || !dh)
                    CHECK_FALSE(dgh.has_value());
                else if (dgh)
                    CHECK(*dgh <= *dg + *dh);
                // Over a field the top pieces cannot cancel when both are monomials.
                if (g.poly().size() == 1 && h.poly().size() == 1 && dg && dh)
                    CHECK(dgh == *dg + *dh);
            }
        }
    }

    TEST_CASE("image of c_alpha")
    {
        const Lazard& L = test::lazard();
        CHECK(L.c_alpha_image_gcd(Partition{1}) == 2);
        for (int n = 1; n <= N; ++n)
            if (!oracle::is_prime_power(n + 1))
                CHECK(L.c_alpha_image_gcd(Partition{n}) == 1);
        CHECK(L.c_alpha_image_gcd(Partition{}) == 1);

        const GeneratorBasis& B = L.base_basis();
        for (int n = 1; n <= 6; ++n)
            for (const auto& alpha : oracle::partitions(n)) {
                mpz_class g = 0;
                for (const auto& beta : oracle::partitions(n))
                    g = gcd(g, product_of_generators(B, beta).coefficient(alpha));
                CHECK_MESSAGE(L.c_alpha_image_gcd(alpha) == g, alpha.to_string());
                CHECK(L.c_alpha_image_gcd(alpha, L.adapted_basis(2, 3)) == g);
                CHECK(L.c_alpha_image_gcd(alpha, L.adapted_basis(3, 2)) == g);
            }
        CHECK(L.c_alpha_image_gcd(Partition{1, 1}) % 2 == 0);
    }
}
