#include "knotsurg/knot.hpp"

#include <algorithm>

#include "knotsurg/error.hpp"

namespace knotsurg {

AlexanderPolynomial::AlexanderPolynomial() : poly_(Integer(1)) {}

AlexanderPolynomial normalize_alexander(const LaurentPoly& f)
{
    if (f.is_zero())
        throw DomainError("the zero polynomial is not an Alexander polynomial");

    const Rational at_one = eval_int(f, 1);
    if (at_one != 1 && at_one != -1)
        throw ValidationError("not an Alexander polynomial of a knot in a homology sphere: f(1) = " +
                              at_one.get_str());

    const std::int64_t span = f.max_exp() - f.min_exp();
    auto c = f.coeffs();
    // Anti-palindromic coefficient sequences have f(1) = 0 and were rejected above.
    if (span % 2 != 0 || !std::equal(c.begin(), c.end(), c.rbegin()))
        throw ValidationError("not symmetric up to units");

    LaurentPoly centered = shift(f, -span / 2 - f.min_exp());
    if (at_one < 0)
        centered = -centered;
    return AlexanderPolynomial(std::move(centered));
}

Integer determinant(const AlexanderPolynomial& delta)
{
    return abs(eval_int(delta.poly(), -1).get_num());
}

Integer conway_a2(const AlexanderPolynomial& delta)
{
    const Rational second = eval_int(derivative(derivative(delta.poly())), 1);
    // Symmetric integer polynomials have Delta''(1) = sum 2 k^2 a_k, always even.
    Integer num = second.get_num();
    Integer half;
    mpz_divexact_ui(half.get_mpz_t(), num.get_mpz_t(), 2);
    return half;
}

KnotInvariants check_arf_consistency(const AlexanderPolynomial& delta)
{
    KnotInvariants k;
    k.determinant = determinant(delta);
    k.a2 = conway_a2(delta);
    k.det_mod8 = static_cast<int>(mpz_fdiv_ui(k.determinant.get_mpz_t(), 8));
    k.arf = static_cast<int>(mpz_fdiv_ui(k.a2.get_mpz_t(), 2));

    const bool det_is_pm1 = k.det_mod8 == 1 || k.det_mod8 == 7;
    if (k.determinant % 2 == 0 || det_is_pm1 != (k.arf == 0))
        throw ValidationError("polynomial fails mod-8/Arf consistency; not realizable as a knot Alexander polynomial");
    return k;
}

} // namespace knotsurg
