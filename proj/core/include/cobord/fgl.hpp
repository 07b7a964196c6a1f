#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cobord/series.hpp"

namespace cobord {

/// The universal formal group law over Z[b], truncated at weight N.
///
/// exp(t) = sum_{i>=0} b_i t^{i+1} with b_0 = 1, log is its compositional
/// inverse, and x +_F y = exp(log x + log y). One-variable series are kept to
/// degree N + 2; the coefficient of t^k has weight k - 1, so nothing of weight
/// <= N is lost.
///
/// Immutable after construction apart from internal caches, which are
/// guarded by a mutex.
class Fgl {
public:
    explicit Fgl(int truncation = kDefaultTruncation);

    int truncation() const { return truncation_; }
    int series_degree() const { return truncation_ + 2; }

    const TruncSeries& exp() const { return exp_; }
    const TruncSeries& log() const { return log_; }

    /// The two-variable series x +_F y to the given total degree
    /// (defaults to series_degree()).
    TruncSeries sum(int degree = -1) const;

    /// a +_F b for two series sharing a layout, with zero constant terms:
    /// exp(log a + log b).
    TruncSeries add(const TruncSeries& a, const TruncSeries& b) const;

    /// Formal inverse [-1](t), solved degree by degree from t +_F i(t) = 0.
    TruncSeries formal_inverse() const;

    /// [n](t): exp(n log t) for n >= 0, [-1]([-n](t)) for n < 0.
    TruncSeries n_series(int n) const;

    /// [n](t) for n < 0 by exp(n log t), kept for cross-checking n_series.
    TruncSeries n_series_via_log(int n) const;

    /// u_0, ..., u_N with [p](t) = sum u_m t^{m+1}.
    std::vector<BPoly> landweber_coeffs(int p) const;

    /// v_n = u_{p^n - 1}; throws TruncationError when p^n - 1 > N.
    BPoly v(int p, int n) const;

private:
    int truncation_;
    TruncSeries exp_;
    TruncSeries log_;
    mutable std::mutex mutex_;
    mutable std::map<int, TruncSeries> n_cache_;
    mutable std::map<int, TruncSeries> sum_cache_;
    mutable std::unique_ptr<TruncSeries> inverse_cache_;
};

}  // namespace cobord
