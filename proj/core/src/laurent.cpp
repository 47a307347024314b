#include "knotsurg/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "knotsurg/error.hpp"

namespace knotsurg {

namespace {

void trim_trailing(std::vector<Integer>& c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

// Integer power with a nonnegative exponent that may exceed unsigned long.
Rational rational_pow(const Rational& x, std::int64_t e)
{
    Rational base = x;
    if (e < 0) {
        base = 1 / base;
        e = -e;
    }
    Rational result = 1;
    auto n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1)
            result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

} // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    trim_trailing(coeffs_);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim_trailing(coeffs_);
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t k)
{
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

const Integer& IntPoly::leading() const
{
    if (coeffs_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::coeff(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer IntPoly::content() const
{
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Integer IntPoly::eval(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly operator+(const IntPoly& f, const IntPoly& g)
{
    auto a = f.coeffs(), b = g.coeffs();
    std::vector<Integer> r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& f)
{
    std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : r)
        c = -c;
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) { return f + (-g); }

IntPoly operator*(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    auto a = f.coeffs(), b = g.coeffs();
    std::vector<Integer> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const Integer& c, const IntPoly& f)
{
    std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : r)
        x *= c;
    return IntPoly(std::move(r));
}

IntPoly exact_scalar_div(const IntPoly& f, const Integer& c)
{
    if (c == 0)
        throw DomainError("division by zero scalar");
    std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : r)
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(r));
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g)
{
    if (g.is_zero())
        throw DomainError("pseudo-remainder by the zero polynomial");
    const long dg = g.degree();
    if (f.degree() < dg)
        return f;

    std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
    auto b = g.coeffs();
    const Integer& lc = b.back();
    long e = f.degree() - dg + 1;

    // Each step scales by lc(g) and cancels the top term; the remaining
    // factor lc(g)^e is applied at the end so the total is lc^(df-dg+1).
    while (!r.empty() && static_cast<long>(r.size()) - 1 >= dg) {
        const std::size_t top = r.size() - 1;
        const std::size_t off = top - static_cast<std::size_t>(dg);
        Integer lead = r.back();
        for (auto& x : r)
            x *= lc;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(r[off + j].get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
        trim_trailing(r);
        --e;
    }
    if (e > 0) {
        Integer s;
        mpz_pow_ui(s.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& x : r)
            x *= s;
    }
    return IntPoly(std::move(r));
}

QuotientRemainder divmod_monic(const IntPoly& f, const IntPoly& monic_divisor)
{
    if (monic_divisor.is_zero() || monic_divisor.leading() != 1)
        throw DomainError("divmod_monic requires a monic divisor");
    const long dg = monic_divisor.degree();
    if (f.degree() < dg)
        return {IntPoly{}, f};

    std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
    std::vector<Integer> q(static_cast<std::size_t>(f.degree() - dg + 1));
    auto b = monic_divisor.coeffs();
    for (long k = f.degree() - dg; k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + dg);
        Integer lead = r[top];
        if (lead == 0)
            continue;
        q[static_cast<std::size_t>(k)] = lead;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(r[static_cast<std::size_t>(k) + j].get_mpz_t(), lead.get_mpz_t(),
                       b[j].get_mpz_t());
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

bool divides(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero())
        throw DomainError("divisibility test by the zero polynomial");
    if (g.is_zero())
        return true;
    if (f.degree() > g.degree())
        return false;
    if (f.leading() == 1)
        return divmod_monic(g, f).remainder.is_zero();
    return pseudo_remainder(g, f).is_zero();
}

// ------------------------------------------------------------ LaurentPoly

LaurentPoly::LaurentPoly(std::int64_t min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs))
{
    trim();
}

LaurentPoly::LaurentPoly(std::int64_t min_exp, std::initializer_list<long> coeffs)
    : min_exp_(min_exp)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

LaurentPoly::LaurentPoly(const Integer& c) : LaurentPoly(0, std::vector<Integer>{c}) {}

LaurentPoly::LaurentPoly(const IntPoly& f)
    : LaurentPoly(0, std::vector<Integer>(f.coeffs().begin(), f.coeffs().end()))
{
}

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t k)
{
    return LaurentPoly(k, std::vector<Integer>{c});
}

void LaurentPoly::trim()
{
    trim_trailing(coeffs_);
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    min_exp_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
}

Integer LaurentPoly::coeff(std::int64_t k) const
{
    if (is_zero() || k < min_exp_ || k > max_exp())
        return 0;
    return coeffs_[static_cast<std::size_t>(k - min_exp_)];
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g)
{
    if (f.is_zero())
        return g;
    if (g.is_zero())
        return f;
    const std::int64_t lo = std::min(f.min_exp(), g.min_exp());
    const std::int64_t hi = std::max(f.max_exp(), g.max_exp());
    std::vector<Integer> r(static_cast<std::size_t>(hi - lo + 1));
    auto a = f.coeffs(), b = g.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i)
        r[static_cast<std::size_t>(f.min_exp() - lo) + i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[static_cast<std::size_t>(g.min_exp() - lo) + i] += b[i];
    return LaurentPoly(lo, std::move(r));
}

LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g)
{
    if (f.is_zero() || g.is_zero())
        return {};
    IntPoly p = IntPoly({f.coeffs().begin(), f.coeffs().end()}) * IntPoly({g.coeffs().begin(), g.coeffs().end()});
    return LaurentPoly(f.min_exp() + g.min_exp(), {p.coeffs().begin(), p.coeffs().end()});
}

LaurentPoly operator-(const LaurentPoly& f)
{
    std::vector<Integer> r(f.coeffs().begin(), f.coeffs().end());
    for (auto& c : r)
        c = -c;
    return LaurentPoly(f.min_exp(), std::move(r));
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return add(f, -g); }

LaurentPoly shift(const LaurentPoly& f, std::int64_t k)
{
    if (f.is_zero())
        return f;
    return LaurentPoly(f.min_exp() + k, {f.coeffs().begin(), f.coeffs().end()});
}

Rational eval_rational(const LaurentPoly& f, const Rational& x_in)
{
    Rational x = x_in;
    x.canonicalize();  // mpq_class(1, -2) arrives with a negative denominator
    if (f.is_zero())
        return 0;
    if (x == 0) {
        if (f.min_exp() < 0)
            throw DomainError("evaluation at 0 of a polynomial with negative exponents");
        return Rational(f.coeff(0));
    }
    // Horner on the ordinary part, then the t^min_exp factor.
    Rational acc = 0;
    auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + Rational(*it);
    acc *= rational_pow(x, f.min_exp());
    acc.canonicalize();
    return acc;
}

Rational eval_int(const LaurentPoly& f, const Integer& x) { return eval_rational(f, Rational(x)); }

LaurentPoly derivative(const LaurentPoly& f)
{
    if (f.is_zero())
        return f;
    auto c = f.coeffs();
    std::vector<Integer> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t k = f.min_exp() + static_cast<std::int64_t>(i);
        r[i] = c[i] * Integer(static_cast<long>(k));
    }
    return LaurentPoly(f.min_exp() - 1, std::move(r));
}

LaurentPoly reciprocal(const LaurentPoly& f)
{
    if (f.is_zero())
        return f;
    std::vector<Integer> r(f.coeffs().rbegin(), f.coeffs().rend());
    return LaurentPoly(-f.max_exp(), std::move(r));
}

IntPoly to_shifted_int_poly(const LaurentPoly& f)
{
    return IntPoly({f.coeffs().begin(), f.coeffs().end()});
}

IntPoly to_int_poly(const LaurentPoly& f)
{
    if (f.is_zero())
        return {};
    if (f.min_exp() < 0)
        throw DomainError("Laurent polynomial has negative exponents");
    std::vector<Integer> r(static_cast<std::size_t>(f.min_exp()));
    r.insert(r.end(), f.coeffs().begin(), f.coeffs().end());
    return IntPoly(std::move(r));
}

std::string to_string(const LaurentPoly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    auto c = f.coeffs();
    for (std::size_t idx = c.size(); idx-- > 0;) {
        const Integer& a = c[idx];
        if (a == 0)
            continue;
        const std::int64_t k = f.min_exp() + static_cast<std::int64_t>(idx);
        Integer mag = abs(a);
        if (a < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (k == 0 || mag != 1)
            os << mag.get_str();
        if (k != 0) {
            os << 't';
            if (k != 1)
                os << '^' << k;
        }
        first = false;
    }
    return os.str();
}

std::string to_string(const IntPoly& f) { return to_string(LaurentPoly(f)); }

} // namespace knotsurg
