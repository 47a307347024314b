#ifndef KNOTSURG_LAURENT_HPP
#define KNOTSURG_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace knotsurg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Ordinary polynomial over Z, coefficients in ascending degree.
///
/// The coefficient vector is kept trimmed: it is empty for the zero
/// polynomial, otherwise its last entry is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// c * t^k.
    static IntPoly monomial(const Integer& c, std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const Integer& leading() const;
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }
    Integer coeff(std::size_t k) const;

    /// Gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    Integer content() const;
    Integer eval(const Integer& x) const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    std::vector<Integer> coeffs_;
};

IntPoly operator+(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f);
IntPoly operator*(const IntPoly& f, const IntPoly& g);
IntPoly operator*(const Integer& c, const IntPoly& f);

/// Divides every coefficient by c; c must divide the content exactly.
IntPoly exact_scalar_div(const IntPoly& f, const Integer& c);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + r with deg r < deg g.
/// Returns f unchanged when deg f < deg g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

struct QuotientRemainder {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division by a monic divisor, exact over Z.
QuotientRemainder divmod_monic(const IntPoly& f, const IntPoly& monic_divisor);

/// True iff f divides g in Q[t]. Throws DomainError when f is zero.
bool divides(const IntPoly& f, const IntPoly& g);

/// Laurent polynomial with integer coefficients.
///
/// Stored as t^min_exp * (c_0 + c_1 t + ... + c_n t^n) with c_0 and c_n
/// nonzero; the zero polynomial has no coefficients and min_exp = 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t min_exp, std::vector<Integer> coeffs);
    LaurentPoly(std::int64_t min_exp, std::initializer_list<long> coeffs);
    /// Constant polynomial.
    explicit LaurentPoly(const Integer& c);
    explicit LaurentPoly(const IntPoly& f);

    /// c * t^k.
    static LaurentPoly monomial(const Integer& c, std::int64_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t min_exp() const noexcept { return min_exp_; }
    /// Highest exponent; equals min_exp() - 1 for the zero polynomial.
    std::int64_t max_exp() const noexcept {
        return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of t^k (zero outside the support).
    Integer coeff(std::int64_t k) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void trim();

    std::int64_t min_exp_ = 0;
    std::vector<Integer> coeffs_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);

inline LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) { return add(f, g); }
inline LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) { return mul(f, g); }
LaurentPoly operator-(const LaurentPoly& f);
LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);

/// t^k * f.
LaurentPoly shift(const LaurentPoly& f, std::int64_t k);

/// Exact value f(x). Throws DomainError for x = 0 when f has negative exponents.
Rational eval_int(const LaurentPoly& f, const Integer& x);
/// Exact value f(x) at a rational point; same domain rule as eval_int.
Rational eval_rational(const LaurentPoly& f, const Rational& x);

/// Formal derivative, k t^(k-1) termwise including negative k.
LaurentPoly derivative(const LaurentPoly& f);

/// f(t^-1).
LaurentPoly reciprocal(const LaurentPoly& f);

/// The unit-shifted ordinary polynomial t^s f with s = -min_exp, so that
/// the constant term is nonzero (for nonzero f).
IntPoly to_shifted_int_poly(const LaurentPoly& f);

/// Lossless conversion; throws DomainError when min_exp < 0.
IntPoly to_int_poly(const LaurentPoly& f);

/// Rendering in the polynomial grammar, descending exponents, e.g. "t^2-3t+1",
/// "-t+3-t^-1". The zero polynomial renders as "0".
std::string to_string(const LaurentPoly& f);
std::string to_string(const IntPoly& f);

} // namespace knotsurg

#endif
