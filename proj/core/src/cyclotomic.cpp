#include "knotsurg/cyclotomic.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "knotsurg/error.hpp"

namespace knotsurg {

namespace {

std::atomic<std::uint64_t> g_max_index{10000};

// Entries are never erased, so references into the map stay valid.
class CyclotomicCache {
public:
    const IntPoly* find(std::uint64_t d) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(d);
        return it == table_.end() ? nullptr : it->second.get();
    }

    const IntPoly& insert(std::uint64_t d, IntPoly p)
    {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(d, nullptr);
        if (inserted)
            it->second = std::make_unique<const IntPoly>(std::move(p));
        return *it->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, std::unique_ptr<const IntPoly>> table_;
};

CyclotomicCache& cache()
{
    static CyclotomicCache c;
    return c;
}

Integer pow_ui(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

void require_nonzero(const LaurentPoly& f, const char* op)
{
    if (f.is_zero())
        throw DomainError(std::string(op) + " of the zero polynomial is undefined");
}

// Res(Phi, g) for monic Phi: reduce g modulo Phi first, Res(Phi, g) = Res(Phi, g mod Phi).
Integer resultant_monic(const IntPoly& monic, const IntPoly& g)
{
    IntPoly r = divmod_monic(g, monic).remainder;
    if (r.is_zero())
        return 0;
    if (r.degree() == 0)
        return pow_ui(r.leading(), static_cast<unsigned long>(monic.degree()));
    return resultant(monic, r);
}

} // namespace

CyclotomicIndex::CyclotomicIndex(std::uint64_t d) : d_(d)
{
    if (d == 0)
        throw DomainError("cyclotomic index must be at least 1");
}

NormValue::NormValue(Integer v) : v_(std::move(v))
{
    if (v_ < 0)
        throw DomainError("norm value must be nonnegative");
}

std::uint64_t max_cyclotomic_index() noexcept { return g_max_index.load(std::memory_order_relaxed); }

void set_max_cyclotomic_index(std::uint64_t cap)
{
    if (cap == 0)
        throw DomainError("cyclotomic index cap must be at least 1");
    g_max_index.store(cap, std::memory_order_relaxed);
}

std::uint64_t euler_phi(std::uint64_t n)
{
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t k = 1; k * k <= n; ++k) {
        if (n % k)
            continue;
        small.push_back(k);
        if (k != n / k)
            large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

const IntPoly& cyclotomic_poly(CyclotomicIndex index)
{
    const std::uint64_t d = index.value();
    if (d > max_cyclotomic_index())
        throw DomainError("cyclotomic index " + std::to_string(d) + " exceeds the configured cap " +
                          std::to_string(max_cyclotomic_index()));
    if (const IntPoly* hit = cache().find(d))
        return *hit;

    // t^d - 1 divided by every Phi_e, e | d, e < d.
    std::vector<Integer> c(d + 1);
    c[0] = -1;
    c[d] = 1;
    IntPoly p(std::move(c));
    for (std::uint64_t e : divisors(d)) {
        if (e == d)
            break;
        auto qr = divmod_monic(p, cyclotomic_poly(CyclotomicIndex(e)));
        p = std::move(qr.quotient);
    }
    return cache().insert(d, std::move(p));
}

Integer resultant(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() && g.is_zero())
        throw DomainError("resultant of two zero polynomials");
    if (f.is_zero())
        return g.degree() == 0 ? 1 : 0;
    if (g.is_zero())
        return f.degree() == 0 ? 1 : 0;

    IntPoly a = f, b = g;
    int sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1))
            sign = -1;
    }
    if (b.degree() == 0)
        return sign * pow_ui(b.leading(), static_cast<unsigned long>(a.degree()));

    const Integer ca = a.content(), cb = b.content();
    a = exact_scalar_div(a, ca);
    b = exact_scalar_div(b, cb);
    const Integer scale = pow_ui(ca, static_cast<unsigned long>(b.degree())) *
                          pow_ui(cb, static_cast<unsigned long>(a.degree()));

    // Subresultant pseudo-remainder sequence; every division below is exact.
    Integer gg = 1, h = 1;
    for (;;) {
        const long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1))
            sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = exact_scalar_div(r, gg * pow_ui(h, static_cast<unsigned long>(delta)));
        gg = a.leading();
        if (delta == 1) {
            h = gg;
        } else if (delta > 1) {
            Integer num = pow_ui(gg, static_cast<unsigned long>(delta));
            Integer den = pow_ui(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.is_zero())
            return 0;
        if (b.degree() == 0)
            break;
    }
    const auto da = static_cast<unsigned long>(a.degree());
    Integer num = pow_ui(b.leading(), da);
    Integer den = pow_ui(h, da - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return sign * scale * h;
}

NormValue norm_d(const LaurentPoly& f, CyclotomicIndex d)
{
    require_nonzero(f, "norm");
    const IntPoly& phi = cyclotomic_poly(d);
    return NormValue(abs(resultant_monic(phi, to_shifted_int_poly(f))));
}

NormValue norm_total(const LaurentPoly& f, CyclotomicIndex d)
{
    require_nonzero(f, "total norm");
    const IntPoly g = to_shifted_int_poly(f);
    Integer product = 1;
    for (std::uint64_t e : divisors(d.value())) {
        product *= resultant_monic(cyclotomic_poly(CyclotomicIndex(e)), g);
        if (product == 0)
            break;
    }
    return NormValue(abs(product));
}

VanishingResult vanishes_on_mth_roots(const LaurentPoly& f, std::uint64_t m)
{
    require_nonzero(f, "vanishing test");
    const IntPoly g = to_shifted_int_poly(f);
    VanishingResult out;
    for (std::uint64_t e : divisors(CyclotomicIndex(m).value())) {
        const IntPoly& phi = cyclotomic_poly(CyclotomicIndex(e));
        if (phi.degree() > g.degree())
            continue;
        if (divmod_monic(g, phi).remainder.is_zero())
            out.witnesses.push_back(e);
    }
    out.vanishes = !out.witnesses.empty();
    return out;
}

} // namespace knotsurg
