#include "cobord/fgl.hpp"

#include <array>

namespace cobord {

namespace {

TruncSeries make_exp(int truncation)
{
    const int degree = truncation + 2;
    std::vector<BPoly> coeffs(static_cast<std::size_t>(degree) + 1, BPoly(truncation));
    coeffs[1] = BPoly::constant(1, truncation);
    for (int i = 1; i + 1 <= degree && i <= truncation; ++i)
        coeffs[i + 1] = BPoly::variable(i, truncation);
    return TruncSeries::univariate(coeffs, degree);
}

}  // namespace

Fgl::Fgl(int truncation)
    : truncation_(truncation), exp_(make_exp(truncation)), log_(exp_.comp_inverse())
{
}

TruncSeries Fgl::sum(int degree) const
{
    if (degree < 0 || degree > series_degree())
        degree = series_degree();
    {
        std::lock_guard lock(mutex_);
        if (auto it = sum_cache_.find(degree); it != sum_cache_.end())
            return it->second;
    }
    auto x = TruncSeries::variable(0, 2, degree, truncation_);
    auto y = TruncSeries::variable(1, 2, degree, truncation_);
    TruncSeries result = add(x, y);
    std::lock_guard lock(mutex_);
    return sum_cache_.emplace(degree, std::move(result)).first->second;
}

TruncSeries Fgl::add(const TruncSeries& a, const TruncSeries& b) const
{
    TruncSeries log_a = log_.truncated(a.total_cap()).compose(a);
    TruncSeries log_b = log_.truncated(b.total_cap()).compose(b);
    return exp_.truncated(a.total_cap()).compose(log_a + log_b);
}

TruncSeries Fgl::formal_inverse() const
{
    {
        std::lock_guard lock(mutex_);
        if (inverse_cache_)
            return *inverse_cache_;
    }
    const int degree = series_degree();
    auto t = TruncSeries::variable(0, 1, degree, truncation_);
    // t +_F i(t) = i_k t^k + (terms fixed by i_1..i_{k-1}) + O(t^{k+1}),
    // since the x +_F y has y-linear coefficient 1.
    TruncSeries inv = -t;
    for (int k = 2; k <= degree; ++k) {
        TruncSeries t_k = t.truncated(k);
        TruncSeries residual = add(t_k, inv.truncated(k));
        BPoly c = residual.coeff(k);
        if (!c.is_zero())
            inv.add_to({k, 0, 0}, -c);
    }
    std::lock_guard lock(mutex_);
    inverse_cache_ = std::make_unique<TruncSeries>(inv);
    return inv;
}

TruncSeries Fgl::n_series(int n) const
{
    {
        std::lock_guard lock(mutex_);
        if (auto it = n_cache_.find(n); it != n_cache_.end())
            return it->second;
    }
    TruncSeries result(1, series_degree(), truncation_);
    if (n > 0) {
        result = exp_.compose(log_.scaled(mpz_class(n)));
    } else if (n < 0) {
        TruncSeries inner = n_series(-n);
        result = formal_inverse().compose(inner);
    }
    std::lock_guard lock(mutex_);
    return n_cache_.emplace(n, std::move(result)).first->second;
}

TruncSeries Fgl::n_series_via_log(int n) const
{
    if (n == 0)
        return TruncSeries(1, series_degree(), truncation_);
    return exp_.compose(log_.scaled(mpz_class(n)));
}

std::vector<BPoly> Fgl::landweber_coeffs(int p) const
{
    TruncSeries series = n_series(p);
    std::vector<BPoly> u;
    u.reserve(static_cast<std::size_t>(truncation_) + 1);
    for (int m = 0; m <= truncation_; ++m)
        u.push_back(series.coeff(m + 1));
    return u;
}

BPoly Fgl::v(int p, int n) const
{
    long long index = 1;
    for (int i = 0; i < n; ++i)
        index *= p;
    index -= 1;
    if (index > truncation_)
        throw TruncationError("v_" + std::to_string(n) + " at p=" + std::to_string(p) + " has weight " +
                              std::to_string(index) + " beyond truncation " + std::to_string(truncation_));
    return n_series(p).coeff(static_cast<int>(index) + 1);
}

}  // namespace cobord
