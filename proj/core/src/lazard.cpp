#include "cobord/lazard.hpp"

#include <gmpxx.h>

namespace cobord {

std::string BasisId::to_string() const
{
    if (flavor == Flavor::Base)
        return "base";
    return "adapted(p=" + std::to_string(p) + ",r=" + std::to_string(r) + ")";
}

// ---------------------------------------------------------------------------
// GeneratorBasis

GeneratorBasis::GeneratorBasis(BasisId id, std::vector<CobordismClass> generators)
    : id_(id), generators_(std::move(generators))
{
}

const CobordismClass& GeneratorBasis::generator(int i) const
{
    if (i < 1 || i > truncation())
        throw TruncationError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(truncation()));
    return generators_[static_cast<std::size_t>(i - 1)];
}

mpz_class GeneratorBasis::leading_coefficient(int i) const { return generator(i).chern_number(Partition{i}); }

int GeneratorBasis::sign(int i) const { return sgn(leading_coefficient(i)); }

std::vector<int> GeneratorBasis::replaced_indices() const
{
    std::vector<int> out;
    if (id_.flavor != BasisId::Flavor::Adapted)
        return out;
    long long power = 1;
    for (int i = 1; i < id_.r; ++i) {
        power *= id_.p;
        if (power - 1 > truncation())
            break;
        out.push_back(static_cast<int>(power - 1));
    }
    return out;
}

const BPoly& GeneratorBasis::monomial_image(const Partition& beta) const
{
    if (beta.weight() > truncation())
        throw TruncationError("monomial " + beta.to_string() + " exceeds truncation");
    const Monomial key = Monomial::from(beta);
    {
        std::lock_guard lock(mutex_);
        if (auto it = images_.find(key); it != images_.end())
            return it->second;
    }
    BPoly image = BPoly::constant(1, truncation());
    if (!beta.empty()) {
        // l_beta = l_{beta_1} * l_{rest}, reusing the cached image of the rest.
        std::vector<int> rest(beta.parts().begin() + 1, beta.parts().end());
        image = monomial_image(Partition(std::move(rest))) * generator(beta[0]).image();
    }
    std::lock_guard lock(mutex_);
    return images_.emplace(key, std::move(image)).first->second;
}

// ---------------------------------------------------------------------------
// GenPoly

namespace {

void check_same_basis(const GenPoly& a, const GenPoly& b)
{
    if (!(a.basis() == b.basis()))
        throw std::invalid_argument("generator polynomials in different bases: " + a.basis().to_string() + " vs " +
                                    b.basis().to_string());
}

}  // namespace

GenPoly operator+(const GenPoly& a, const GenPoly& b)
{
    check_same_basis(a, b);
    return GenPoly(a.poly() + b.poly(), a.basis());
}

GenPoly operator-(const GenPoly& a, const GenPoly& b)
{
    check_same_basis(a, b);
    return GenPoly(a.poly() - b.poly(), a.basis());
}

GenPoly operator*(const GenPoly& a, const GenPoly& b)
{
    check_same_basis(a, b);
    return GenPoly(a.poly() * b.poly(), a.basis());
}

// ---------------------------------------------------------------------------
// Free functions

mpz_class c_alpha(const CobordismClass& z, const Partition& alpha) { return z.chern_number(alpha); }

std::optional<int> q_degree(const GenPoly& g, int q)
{
    if (q < 1)
        throw std::invalid_argument("q must be positive");
    std::optional<int> best;
    for (const auto& [m, c] : g.poly().terms()) {
        const int d = pi_q(m.to_partition(), q);
        if (!best || d > *best)
            best = d;
    }
    return best;
}

bool is_prime(long long p)
{
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::optional<long long> bounded_power(long long p, int k, long long limit)
{
    long long v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > limit / p)
            return std::nullopt;
        v *= p;
    }
    if (v > limit)
        return std::nullopt;
    return v;
}

// ---------------------------------------------------------------------------
// Lazard

Lazard::Lazard(int truncation) : truncation_(truncation), fgl_(truncation), geometry_(truncation) {}

void Lazard::check_prime(int p) const
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not a prime");
}

const BaseGenerator& Lazard::base_generator_data(int i) const
{
    if (i < 1 || i > truncation_)
        throw TruncationError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(truncation_));
    {
        std::lock_guard lock(mutex_);
        if (auto it = base_generators_.find(i); it != base_generators_.end())
            return it->second;
    }
    BaseGenerator gen;
    const Partition top{i};
    std::vector<std::pair<int, int>> shapes;
    for (int m = 0; 2 * m <= i + 1; ++m)
        if (m != 1)
            shapes.emplace_back(m, i + 1 - m);
    std::vector<BPoly> images;
    std::vector<mpz_class> values;
    for (auto [m, n] : shapes) {
        images.push_back(geometry_.milnor(m, n));
        values.push_back(images.back().coefficient(top));
    }
    // Extended gcd folded left to right: g = sum lambda_k values_k.
    std::vector<mpz_class> lambda(values.size(), 0);
    mpz_class g = abs(values[0]);
    lambda[0] = sgn(values[0]);
    for (std::size_t k = 1; k < values.size(); ++k) {
        mpz_class ng, s, t;
        mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), values[k].get_mpz_t());
        for (std::size_t j = 0; j < k; ++j)
            lambda[j] *= s;
        lambda[k] = t;
        g = ng;
    }
    BPoly image(truncation_);
    for (std::size_t k = 0; k < shapes.size(); ++k) {
        if (lambda[k] == 0)
            continue;
        image += images[k] * lambda[k];
        gen.terms.push_back({shapes[k].first, shapes[k].second, lambda[k]});
    }
    if (image.coefficient(top) != g)
        throw ValidationError("base generator " + std::to_string(i) + " does not realize the gcd");
    gen.cls = CobordismClass(std::move(image), i);
    gen.gcd = g;
    std::lock_guard lock(mutex_);
    return base_generators_.emplace(i, std::move(gen)).first->second;
}

const GeneratorBasis& Lazard::base_basis() const
{
    {
        std::lock_guard lock(mutex_);
        if (base_basis_)
            return *base_basis_;
    }
    std::vector<CobordismClass> gens;
    for (int i = 1; i <= truncation_; ++i)
        gens.push_back(base_generator(i));
    auto basis = std::make_unique<GeneratorBasis>(BasisId::base(), std::move(gens));
    std::lock_guard lock(mutex_);
    if (!base_basis_)
        base_basis_ = std::move(basis);
    return *base_basis_;
}

int Lazard::effective_level(int p, int r) const
{
    if (r < 0)
        throw std::invalid_argument("ideal level must be >= 0");
    int visible = 0;
    while (true) {
        auto pw = bounded_power(p, visible + 1, static_cast<long long>(truncation_) + 1);
        if (!pw)
            break;
        ++visible;
    }
    // v_1..v_visible live below the truncation, so levels above visible + 1
    // add no generators.
    return std::min(r, visible + 1);
}

std::unique_ptr<GeneratorBasis> Lazard::build_adapted(int p, int r) const
{
    const GeneratorBasis& base = base_basis();
    std::vector<CobordismClass> gens;
    for (int i = 1; i <= truncation_; ++i)
        gens.push_back(base.generator(i));
    long long power = 1;
    for (int i = 1; i < r; ++i) {
        power *= p;
        const int n = static_cast<int>(power - 1);
        const Partition top{n};
        const CobordismClass& old = base.generator(n);
        const int sigma = sgn(old.chern_number(top));
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
        BPoly image = fgl_.v(p, i) - old.image() * (scale * sigma);
        if (image.coefficient(top) != -p)
            throw ValidationError("adapted generator l'_" + std::to_string(n) + " has c = " +
                                  image.coefficient(top).get_str());
        if (!image.divisible_by(p))
            throw ValidationError("adapted generator l'_" + std::to_string(n) + " is not in I_p(infinity)");
        gens[static_cast<std::size_t>(n - 1)] = CobordismClass(std::move(image), n);
    }
    return std::make_unique<GeneratorBasis>(BasisId::adapted(p, r), std::move(gens));
}

const GeneratorBasis& Lazard::adapted_basis(int p, int r) const
{
    check_prime(p);
    r = effective_level(p, r);
    {
        std::lock_guard lock(mutex_);
        if (auto it = adapted_.find({p, r}); it != adapted_.end())
            return *it->second;
    }
    auto basis = build_adapted(p, r);
    std::lock_guard lock(mutex_);
    auto [it, inserted] = adapted_.try_emplace({p, r}, std::move(basis));
    return *it->second;
}

const GeneratorBasis& Lazard::basis(const BasisId& id) const
{
    if (id.flavor == BasisId::Flavor::Base)
        return base_basis();
    return adapted_basis(id.p, id.r);
}

CobordismClass Lazard::v(int p, int n) const
{
    check_prime(p);
    auto pw = bounded_power(p, n);
    return CobordismClass(fgl_.v(p, n), pw ? std::optional<int>(static_cast<int>(*pw - 1)) : std::nullopt);
}

GenPoly Lazard::to_gen_coords(const CobordismClass& z, const GeneratorBasis& basis) const
{
    const BPoly& image = z.image();
    if (image.modulus())
        throw std::invalid_argument("generator coordinates need an integral image");
    if (image.max_weight() > basis.truncation())
        throw TruncationError("class has weight " + std::to_string(image.max_weight()) + " beyond truncation " +
                              std::to_string(basis.truncation()));
    LPoly out(basis.truncation());
    for (int w : image.weights()) {
        const std::vector<Partition> alphas = partitions_of(w);
        std::vector<mpz_class> lambda;
        lambda.reserve(alphas.size());
        // Canonical order lists coarser partitions first, so every beta
        // that alpha refines is already solved.
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            const Partition& alpha = alphas[a];
            mpz_class rhs = image.coefficient(alpha);
            for (std::size_t b = 0; b < a; ++b)
                if (lambda[b] != 0 && refines(alpha, alphas[b]))
                    rhs -= lambda[b] * basis.c_alpha(alpha, alphas[b]);
            const mpz_class diag = basis.c_alpha(alpha, alpha);
            if (diag == 0)
                throw ValidationError("c_alpha(l_alpha) vanishes for " + alpha.to_string());
            if (!mpz_divisible_p(rhs.get_mpz_t(), diag.get_mpz_t()))
                throw NotInLazardRing("coordinate of l_" + alpha.to_string() + " is " + mpq_class(rhs, diag).get_str() +
                                      ", not an integer");
            mpz_class q;
            mpz_divexact(q.get_mpz_t(), rhs.get_mpz_t(), diag.get_mpz_t());
            out.add_term(alpha, q);
            lambda.push_back(std::move(q));
        }
    }
    return GenPoly(std::move(out), basis.id());
}

BPoly Lazard::from_gen_coords(const GenPoly& g) const
{
    if (g.modulus())
        throw std::invalid_argument("cannot lift a reduced generator polynomial to Z[b]");
    const GeneratorBasis& b = basis(g.basis());
    BPoly out(truncation_);
    for (const auto& [m, c] : g.poly().terms())
        out += b.monomial_image(m.to_partition()) * c;
    return out;
}

namespace {

int homogeneous_degree(const CobordismClass& z)
{
    auto w = z.image().homogeneous_weight();
    if (!w)
        throw std::invalid_argument("class is not homogeneous");
    if (*w <= 0)
        throw std::invalid_argument("class must have positive dimension");
    return *w;
}

}  // namespace

bool Lazard::is_decomposable(const CobordismClass& z) const
{
    if (z.is_zero())
        return true;
    const int n = homogeneous_degree(z);
    return z.chern_number(Partition{n}) == 0;
}

bool Lazard::is_indec_mod_p(const CobordismClass& z, int p) const
{
    check_prime(p);
    if (z.is_zero())
        return false;
    const int n = homogeneous_degree(z);
    const mpz_class c = z.chern_number(Partition{n});
    long long power = p;
    while (power < n + 1)
        power *= p;
    const long long divisor = power == n + 1 ? static_cast<long long>(p) * p : p;
    return !mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(divisor));
}

bool Lazard::in_Ipn(const CobordismClass& z, int p, int n) const
{
    check_prime(p);
    if (n < 0)
        throw std::invalid_argument("ideal level must be >= 0");
    if (n == 0)
        return z.is_zero();
    if (n == kInfiniteLevel)
        return z.image().divisible_by(p);
    const int r = effective_level(p, n);
    const GeneratorBasis& b = adapted_basis(p, r);
    const std::vector<int> killed = b.replaced_indices();
    const GenPoly coords = to_gen_coords(z, b);
    for (const auto& [m, c] : coords.poly().terms()) {
        if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        bool hit = false;
        for (int k : killed)
            hit = hit || m.multiplicity(k) > 0;
        if (!hit)
            return false;
    }
    return true;
}

GenPoly Lazard::reduce_mod_Ipr(const CobordismClass& z, int p, int r) const
{
    check_prime(p);
    if (r < 0)
        throw std::invalid_argument("ideal level must be >= 0");
    if (r == 0)
        return to_gen_coords(z, base_basis());
    const GeneratorBasis& b = adapted_basis(p, effective_level(p, r));
    const std::vector<int> killed = b.replaced_indices();
    const GenPoly coords = to_gen_coords(z, b);
    LPoly out(truncation_, p);
    for (const auto& [m, c] : coords.poly().terms()) {
        bool hit = false;
        for (int k : killed)
            hit = hit || m.multiplicity(k) > 0;
        if (!hit)
            out.add_term(m, c);
    }
    return GenPoly(std::move(out), b.id());
}

mpz_class Lazard::c_alpha_image_gcd(const Partition& alpha, const GeneratorBasis& basis) const
{
    mpz_class g = 0;
    for (const auto& beta : partitions_of(alpha.weight()))
        g = gcd(g, basis.c_alpha(alpha, beta));
    return g;
}

}  // namespace cobord
