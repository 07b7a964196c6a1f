#include "cobord/series.hpp"

#include <stdexcept>

namespace cobord {

namespace {
constexpr int kUncapped = 1 << 20;
}

TruncSeries::TruncSeries(int nvars, int total_cap, int weight_truncation, std::optional<int> modulus,
                         std::optional<Exponent> var_caps)
    : nvars_(nvars), total_cap_(total_cap), caps_{0, 0, 0}, weight_truncation_(weight_truncation), modulus_(modulus)
{
    if (nvars < 1 || nvars > kMaxSeriesVars)
        throw std::invalid_argument("series must have between 1 and 3 variables");
    if (total_cap < 0)
        throw std::invalid_argument("series degree cap must be non-negative");
    for (int i = 0; i < nvars; ++i)
        caps_[i] = var_caps ? (*var_caps)[i] : kUncapped;
}

TruncSeries TruncSeries::variable(int index, int nvars, int total_cap, int weight_truncation,
                                  std::optional<int> modulus, std::optional<Exponent> var_caps)
{
    TruncSeries s(nvars, total_cap, weight_truncation, modulus, var_caps);
    if (index < 0 || index >= nvars)
        throw std::out_of_range("variable index out of range");
    Exponent e{0, 0, 0};
    e[index] = 1;
    s.add_to(e, BPoly::constant(1, weight_truncation, modulus));
    return s;
}

TruncSeries TruncSeries::constant(const BPoly& c, int nvars, int total_cap, std::optional<Exponent> var_caps)
{
    TruncSeries s(nvars, total_cap, c.truncation(), c.modulus(), var_caps);
    s.add_to({0, 0, 0}, c);
    return s;
}

TruncSeries TruncSeries::univariate(const std::vector<BPoly>& coeffs, int total_cap)
{
    if (coeffs.empty())
        throw std::invalid_argument("univariate series needs at least one coefficient");
    TruncSeries s(1, total_cap, coeffs.front().truncation(), coeffs.front().modulus());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s.add_to({static_cast<int>(k), 0, 0}, coeffs[k]);
    return s;
}

bool TruncSeries::admits(const Exponent& e) const
{
    if (total_degree(e) > total_cap_)
        return false;
    for (int i = 0; i < kMaxSeriesVars; ++i) {
        if (e[i] < 0)
            return false;
        if (i >= nvars_ ? e[i] != 0 : e[i] > caps_[i])
            return false;
    }
    return true;
}

BPoly TruncSeries::coeff(const Exponent& e) const
{
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? zero_coeff() : it->second;
}

void TruncSeries::add_to(const Exponent& e, const BPoly& c)
{
    if (!admits(e) || c.is_zero())
        return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        BPoly v = zero_coeff();
        v += c;
        if (!v.is_zero())
            coeffs_.emplace(e, std::move(v));
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        coeffs_.erase(it);
}

void TruncSeries::check_compatible(const TruncSeries& o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("series have different numbers of variables");
    if (modulus_ != o.modulus_)
        throw ModulusMismatch("series coefficient rings differ");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.coeffs_)
        add_to(e, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o)
{
    check_compatible(o);
    for (const auto& [e, c] : o.coeffs_)
        add_to(e, -c);
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    a.check_compatible(b);
    Exponent caps{};
    for (int i = 0; i < kMaxSeriesVars; ++i)
        caps[i] = std::min(a.caps_[i], b.caps_[i]);
    TruncSeries out(a.nvars_, std::min(a.total_cap_, b.total_cap_),
                    std::min(a.weight_truncation_, b.weight_truncation_), a.modulus_, caps);
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (!out.admits(e))
                continue;
            out.add_to(e, ca * cb);
        }
    }
    return out;
}

TruncSeries TruncSeries::scaled(const BPoly& s) const
{
    TruncSeries out(nvars_, total_cap_, std::min(weight_truncation_, s.truncation()), modulus_, caps_);
    for (const auto& [e, c] : coeffs_)
        out.add_to(e, c * s);
    return out;
}

TruncSeries TruncSeries::scaled(const mpz_class& s) const
{
    TruncSeries out(nvars_, total_cap_, weight_truncation_, modulus_, caps_);
    for (const auto& [e, c] : coeffs_)
        out.add_to(e, c * s);
    return out;
}

bool TruncSeries::operator==(const TruncSeries& o) const
{
    return nvars_ == o.nvars_ && modulus_ == o.modulus_ && coeffs_ == o.coeffs_;
}

TruncSeries TruncSeries::truncated(int total_cap) const
{
    TruncSeries out(nvars_, std::min(total_cap, total_cap_), weight_truncation_, modulus_, caps_);
    for (const auto& [e, c] : coeffs_)
        out.add_to(e, c);
    return out;
}

TruncSeries TruncSeries::reduce_mod(int p) const
{
    TruncSeries out(nvars_, total_cap_, weight_truncation_, p, caps_);
    for (const auto& [e, c] : coeffs_)
        out.add_to(e, c.reduce_mod(p));
    return out;
}

TruncSeries TruncSeries::pow(unsigned k) const
{
    TruncSeries result = constant(BPoly::constant(1, weight_truncation_, modulus_), nvars_, total_cap_, caps_);
    TruncSeries base = *this;
    while (k) {
        if (k & 1u)
            result = result * base;
        k >>= 1u;
        if (k)
            base = base * base;
    }
    return result;
}

TruncSeries TruncSeries::inverse() const
{
    BPoly c0 = coeff(Exponent{0, 0, 0});
    BPoly c0_inv = c0.inverse();
    // this = c0 (1 + y) with y free of constant term.
    TruncSeries y = scaled(c0_inv);
    y.add_to({0, 0, 0}, -BPoly::constant(1, weight_truncation_, modulus_));
    TruncSeries minus_y = -y;
    TruncSeries sum = constant(BPoly::constant(1, weight_truncation_, modulus_), nvars_, total_cap_, caps_);
    TruncSeries term = sum;
    for (int k = 1; k <= total_cap_ && !term.is_zero(); ++k) {
        term = term * minus_y;
        sum += term;
    }
    return sum.scaled(c0_inv);
}

TruncSeries TruncSeries::power(int k) const
{
    if (k >= 0)
        return pow(static_cast<unsigned>(k));
    return inverse().pow(static_cast<unsigned>(-k));
}

TruncSeries TruncSeries::substitute(std::span<const TruncSeries> values) const
{
    if (static_cast<int>(values.size()) != nvars_)
        throw std::invalid_argument("substitute needs one series per variable");
    const TruncSeries& first = values.front();
    for (const auto& v : values) {
        if (v.nvars_ != first.nvars_ || v.modulus_ != modulus_)
            throw std::invalid_argument("substituted series must share layout and coefficient ring");
        if (!v.coeff(Exponent{0, 0, 0}).is_zero())
            throw std::invalid_argument("substituted series must have zero constant term");
    }
    int max_exp[kMaxSeriesVars] = {0, 0, 0};
    for (const auto& [e, c] : coeffs_)
        for (int i = 0; i < nvars_; ++i)
            max_exp[i] = std::max(max_exp[i], e[i]);

    Exponent caps = first.caps_;
    int cap = first.total_cap_;
    int wt = std::min(weight_truncation_, first.weight_truncation_);
    TruncSeries one = constant(BPoly::constant(1, wt, modulus_), first.nvars_, cap, caps);

    // Powers of each substituted series; g^k vanishes once k exceeds the cap.
    std::vector<std::vector<TruncSeries>> powers(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        powers[i].push_back(one);
        for (int k = 1; k <= std::min(max_exp[i], cap); ++k)
            powers[i].push_back(powers[i].back() * values[i]);
    }

    TruncSeries out(first.nvars_, cap, wt, modulus_, caps);
    for (const auto& [e, c] : coeffs_) {
        bool vanishes = false;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > cap)
                vanishes = true;
        if (vanishes)
            continue;
        TruncSeries term = powers[0][e[0]];
        for (int i = 1; i < nvars_; ++i)
            if (e[i] > 0)
                term = term * powers[i][e[i]];
        out += term.scaled(c);
    }
    return out;
}

TruncSeries TruncSeries::compose(const TruncSeries& g) const
{
    if (nvars_ != 1)
        throw std::invalid_argument("compose expects a one-variable outer series");
    return substitute(std::span<const TruncSeries>(&g, 1));
}

TruncSeries TruncSeries::comp_inverse() const
{
    if (nvars_ != 1)
        throw std::invalid_argument("compositional inverse needs a one-variable series");
    if (!coeff(0).is_zero())
        throw std::invalid_argument("compositional inverse needs zero constant term");
    BPoly u_inv = coeff(1).inverse();
    const int cap = total_cap_;

    // Solve g(f(t)) = t: the t^k coefficient gives
    //   sum_{j<k} g_j [t^k] f^j + g_k u^k = 0.
    std::vector<TruncSeries> f_pow;
    f_pow.reserve(static_cast<std::size_t>(cap) + 1);
    f_pow.push_back(constant(BPoly::constant(1, weight_truncation_, modulus_), 1, cap));
    for (int j = 1; j <= cap; ++j)
        f_pow.push_back(f_pow.back() * *this);

    std::vector<BPoly> g(static_cast<std::size_t>(cap) + 1, zero_coeff());
    BPoly u_inv_pow = u_inv;
    if (cap >= 1)
        g[1] = u_inv;
    for (int k = 2; k <= cap; ++k) {
        u_inv_pow *= u_inv;
        BPoly s = zero_coeff();
        for (int j = 1; j < k; ++j)
            if (!g[j].is_zero())
                s += g[j] * f_pow[j].coeff(k);
        g[k] = -(s * u_inv_pow);
    }
    return univariate(g, cap);
}

bool TruncSeries::is_graded_homogeneous(int degree) const
{
    for (const auto& [e, c] : coeffs_) {
        auto w = c.homogeneous_weight();
        if (!w || *w != total_degree(e) - degree)
            return false;
    }
    return true;
}

std::string TruncSeries::to_string() const
{
    static const char* names[] = {"x", "y", "z"};
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (const auto& [e, c] : coeffs_) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.to_string("b") + ")";
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            s += (nvars_ == 1 ? std::string("t") : std::string(names[i]));
            if (e[i] > 1)
                s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

}  // namespace cobord
