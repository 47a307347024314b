// Test-only reference computations. Nothing here calls into the resultant,
// division or cyclotomic code under test; each oracle takes an independent
// route (Sylvester determinants, floating-point root products, naive long
// division, exhaustive search).
#ifndef KNOTSURG_TESTS_ORACLES_HPP
#define KNOTSURG_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "knotsurg/laurent.hpp"

namespace oracle {

using knotsurg::Integer;
using knotsurg::IntPoly;
using knotsurg::LaurentPoly;
using Coeffs = std::vector<Integer>;

inline Coeffs coeffs_of(const IntPoly& f) { return Coeffs(f.coeffs().begin(), f.coeffs().end()); }

inline void trim(Coeffs& c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

inline Coeffs convolve(const Coeffs& a, const Coeffs& b)
{
    if (a.empty() || b.empty())
        return {};
    Coeffs r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Schoolbook division by a monic divisor; returns the quotient and
/// writes the remainder.
inline Coeffs long_divide(Coeffs num, const Coeffs& monic, Coeffs* remainder = nullptr)
{
    trim(num);
    const std::size_t dd = monic.size() - 1;
    Coeffs q(num.size() >= monic.size() ? num.size() - dd : 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer c = num[k + dd];
        q[k] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            num[k + j] -= c * monic[j];
    }
    trim(num);
    trim(q);
    if (remainder)
        *remainder = num;
    return q;
}

/// t^n - 1
inline Coeffs t_pow_minus_one(std::uint64_t n)
{
    Coeffs c(n + 1);
    c[0] = -1;
    c[n] = 1;
    return c;
}

inline int mobius(std::uint64_t n)
{
    int mu = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

/// Phi_d = prod_{k | d} (t^(d/k) - 1)^mu(k), numerator formed first and then
/// divided by each denominator factor.
inline Coeffs mobius_cyclotomic(std::uint64_t d)
{
    Coeffs num{1};
    std::vector<std::uint64_t> den;
    for (std::uint64_t k = 1; k <= d; ++k) {
        if (d % k)
            continue;
        const int mu = mobius(k);
        if (mu == 1)
            num = convolve(num, t_pow_minus_one(d / k));
        else if (mu == -1)
            den.push_back(d / k);
    }
    for (auto e : den)
        num = long_divide(num, t_pow_minus_one(e));
    return num;
}

/// Fraction-free (Bareiss) determinant.
inline Integer bareiss_det(std::vector<std::vector<Integer>> a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Res(f, g) as the determinant of the Sylvester matrix; deg f, deg g >= 1.
inline Integer sylvester_resultant(const Coeffs& f, const Coeffs& g)
{
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    const std::size_t size = m + n;
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            s[i][i + j] = f[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            s[n + i][i + j] = g[n - j];
    return bareiss_det(std::move(s));
}

inline std::complex<long double> eval_at(const LaurentPoly& f, std::complex<long double> z)
{
    std::complex<long double> acc = 0;
    auto c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + static_cast<long double>(it->get_d());
    return acc * std::pow(z, static_cast<int>(f.min_exp()));
}

inline std::complex<long double> root_of_unity(std::uint64_t k, std::uint64_t d)
{
    const long double pi = std::acos(-1.0L);
    const long double a = 2 * pi * static_cast<long double>(k) / static_cast<long double>(d);
    return {std::cos(a), std::sin(a)};
}

/// |prod over primitive d-th roots of f(zeta)| in long double.
inline long double float_norm(const LaurentPoly& f, std::uint64_t d)
{
    std::complex<long double> prod = 1;
    for (std::uint64_t k = 1; k <= d; ++k)
        if (std::gcd(k, d) == 1)
            prod *= eval_at(f, root_of_unity(k, d));
    return std::abs(prod);
}

/// Whether f numerically vanishes at the primitive root exp(2 pi i / d).
inline bool float_vanishes(const LaurentPoly& f, std::uint64_t d)
{
    return std::abs(eval_at(f, root_of_unity(1, d))) < 1e-9L;
}

/// Exhaustive search: ascending sequences of odd k >= 3 dividing m, pairwise
/// coprime, product m, of the given length.
inline void brute_candidates(std::uint64_t m, std::size_t len, std::uint64_t min_next,
                             std::vector<std::uint64_t>& cur, std::vector<std::vector<std::uint64_t>>& out)
{
    if (cur.size() == len) {
        if (m == 1)
            out.push_back(cur);
        return;
    }
    for (std::uint64_t k = min_next; k <= m; ++k) {
        if (k % 2 == 0 || m % k)
            continue;
        bool coprime = true;
        for (auto x : cur)
            coprime = coprime && std::gcd(x, k) == 1;
        if (!coprime)
            continue;
        cur.push_back(k);
        brute_candidates(m / k, len, k + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::uint64_t>> brute_candidates(std::uint64_t m, int n)
{
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur;
    brute_candidates(m, static_cast<std::size_t>(n - 2), 3, cur, out);
    return out;
}

// ------------------------------------------------------------- generators

/// Random Laurent polynomial: up to max_terms+1 coefficients in [-cmax, cmax],
/// lowest exponent in [-4, 4]. May be zero.
inline LaurentPoly random_laurent(std::mt19937_64& rng, int max_degree = 8, int cmax = 9)
{
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-cmax, cmax), lo(-4, 4);
    const int n = deg(rng);
    std::vector<Integer> c(static_cast<std::size_t>(n + 1));
    for (auto& x : c)
        x = coef(rng);
    return LaurentPoly(lo(rng), std::move(c));
}

inline LaurentPoly random_nonzero_laurent(std::mt19937_64& rng, int max_degree = 8, int cmax = 9)
{
    for (;;) {
        LaurentPoly f = random_laurent(rng, max_degree, cmax);
        if (!f.is_zero())
            return f;
    }
}

/// a_0 + sum a_k (t^k + t^-k) with f(1) = 1: the shape of any normalized
/// Alexander polynomial.
inline LaurentPoly random_symmetric_unit(std::mt19937_64& rng, int half_span = 3, int cmax = 5)
{
    std::uniform_int_distribution<int> span(0, half_span), coef(-cmax, cmax);
    const int k = span(rng);
    std::vector<Integer> c(static_cast<std::size_t>(2 * k + 1));
    Integer sum = 0;
    for (int i = 1; i <= k; ++i) {
        Integer a = coef(rng);
        c[static_cast<std::size_t>(k + i)] = a;
        c[static_cast<std::size_t>(k - i)] = a;
        sum += a;
    }
    c[static_cast<std::size_t>(k)] = 1 - 2 * sum;
    return LaurentPoly(-k, std::move(c));
}

// ------------------------------------------------------------- knot table

struct KnotRow {
    std::string name;
    std::string alexander;
};

inline std::vector<KnotRow> load_knot_table(const std::string& path)
{
    std::vector<KnotRow> rows;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        auto j = nlohmann::json::parse(line);
        rows.push_back({j.at("name").get<std::string>(), j.at("alexander").get<std::string>()});
    }
    return rows;
}

} // namespace oracle

#endif
