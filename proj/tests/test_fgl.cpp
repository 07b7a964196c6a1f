#include <doctest.h>

#include <cobord/fgl.hpp>

#include "oracles.hpp"

using namespace cobord;

namespace {

const Fgl& fgl10()
{
    static const Fgl f(10);
    return f;
}

BPoly b(int i, const mpz_class& c = 1) { return BPoly::monomial(Partition{i}, c, 10); }

}  // namespace

TEST_SUITE("fgl")
{
    TEST_CASE("exp and log")
    {
        const Fgl& f = fgl10();
        CHECK(f.exp().coeff(1) == BPoly::constant(1, 10));
        for (int i = 1; i <= 10; ++i)
            CHECK(f.exp().coeff(i + 1) == b(i));
        const auto t = TruncSeries::variable(0, 1, f.series_degree(), 10);
        CHECK(f.exp().compose(f.log()) == t);
        CHECK(f.log().coeff(2) == -b(1));
    }

    TEST_CASE("group law axioms")
    {
        const Fgl& f = fgl10();
        const int deg = 6;
        const TruncSeries F = f.sum(deg);
        const auto x = TruncSeries::variable(0, 2, deg, 10);
        const auto y = TruncSeries::variable(1, 2, deg, 10);
        CHECK(F.coeff(Exponent{1, 0, 0}) == BPoly::constant(1, 10));
        CHECK(F.coeff(Exponent{0, 1, 0}) == BPoly::constant(1, 10));
        // Hand expansion: log x + log y = x + y - b1 (x^2 + y^2) + ..., so
        // the xy term of the exponential is b1 (x + y)^2 - b1 (x^2 + y^2).
        CHECK(F.coeff(Exponent{1, 1, 0}) == b(1, 2));
        CHECK(F.coeff(Exponent{2, 0, 0}).is_zero());

        TruncSeries zero(2, deg, 10);
        std::vector<TruncSeries> x0{x, zero}, zero_y{zero, y}, swapped{y, x};
        CHECK(F.substitute(x0) == x);
        CHECK(F.substitute(zero_y) == y);
        CHECK(F.substitute(swapped) == F);
        CHECK(F.is_graded_homogeneous(1));

        const auto x3 = TruncSeries::variable(0, 3, deg, 10);
        const auto y3 = TruncSeries::variable(1, 3, deg, 10);
        const auto z3 = TruncSeries::variable(2, 3, deg, 10);
        CHECK(f.add(f.add(x3, y3), z3) == f.add(x3, f.add(y3, z3)));
    }

    TEST_CASE("F(t, t) is the 2-series")
    {
        const Fgl& f = fgl10();
        const int deg = f.series_degree();
        const auto t = TruncSeries::variable(0, 1, deg, 10);
        std::vector<TruncSeries> tt{t, t};
        CHECK(f.sum(deg).substitute(tt) == f.n_series(2));
        CHECK(f.n_series(2).coeff(2) == b(1, 2));
    }

    TEST_CASE("n-series")
    {
        const Fgl& f = fgl10();
        const auto t = TruncSeries::variable(0, 1, f.series_degree(), 10);
        CHECK(f.n_series(0).is_zero());
        CHECK(f.n_series(1) == t);
        CHECK(f.add(t, f.n_series(-1)).is_zero());
        CHECK(f.formal_inverse() == f.n_series(-1));
        for (int n = -4; n <= -1; ++n)
            CHECK(f.n_series(n) == f.n_series_via_log(n));
        for (int n = 1; n <= 4; ++n)
            CHECK(f.n_series(n + 1) == f.add(f.n_series(n), t));
        for (int a = -4; a <= 4; ++a)
            for (int c = -4; c <= 4; ++c)
                if (a != 0 && c != 0)
                    CHECK_MESSAGE(f.n_series(a).compose(f.n_series(c)) == f.n_series(a * c), a << " " << c);
    }

    TEST_CASE("Landweber coefficients")
    {
        const Fgl& f = fgl10();
        for (int p : {2, 3, 5, 7}) {
            const auto u = f.landweber_coeffs(p);
            REQUIRE(u.size() == 11);
            CHECK(u[0] == BPoly::constant(p, 10));
            for (std::size_t m = 1; m < u.size(); ++m) {
                CHECK(u[m].divisible_by(p));
                CHECK(u[m].reduce_mod(p).is_zero());
                if (!u[m].is_zero())
                    CHECK(u[m].homogeneous_weight() == static_cast<int>(m));
            }
            // c_(m)(u_m) = p (p^m - 1).
            for (std::size_t m = 1; m < u.size(); ++m)
                CHECK(u[m].coefficient(Partition{static_cast<int>(m)}) ==
                      p * (oracle::ipow(p, static_cast<long>(m)) - 1));
        }
        const auto u2 = f.landweber_coeffs(2);
        CHECK(u2[1] == b(1, 2));
        CHECK(f.v(2, 0) == BPoly::constant(2, 10));
        CHECK(f.v(2, 1) == u2[1]);
        CHECK(f.v(2, 3) == u2[7]);
        CHECK(f.v(3, 2) == f.landweber_coeffs(3)[8]);
        CHECK_THROWS_AS(f.v(2, 4), TruncationError);
    }

    TEST_CASE("series are independent of the truncation they were built at")
    {
        const Fgl small(6);
        const Fgl& large = fgl10();
        for (int n : {-2, 2, 3}) {
            const TruncSeries s = small.n_series(n);
            for (int k = 1; k <= small.series_degree(); ++k) {
                BPoly c = large.n_series(n).coeff(k);
                c.truncate(6);
                CHECK(s.coeff(k) == c);
            }
        }
    }
}
