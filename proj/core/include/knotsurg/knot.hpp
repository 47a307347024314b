#ifndef KNOTSURG_KNOT_HPP
#define KNOTSURG_KNOT_HPP

#include "knotsurg/laurent.hpp"

namespace knotsurg {

/// Symmetric representative of a knot's Alexander polynomial with value 1 at t = 1.
///
/// Construct through normalize_alexander(); the only way to obtain one is from
/// a polynomial that is symmetric up to a unit +-t^k and has f(1) = +-1.
class AlexanderPolynomial {
public:
    /// The unknot, Delta = 1.
    AlexanderPolynomial();

    const LaurentPoly& poly() const noexcept { return poly_; }
    friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;

private:
    explicit AlexanderPolynomial(LaurentPoly p) : poly_(std::move(p)) {}
    friend AlexanderPolynomial normalize_alexander(const LaurentPoly& f);

    LaurentPoly poly_;
};

/// Returns eps * t^k * f, centered and with value 1 at t = 1.
///
/// Throws ValidationError when f(1) is not +-1 or when no unit multiple of f
/// is symmetric, and DomainError for f = 0.
AlexanderPolynomial normalize_alexander(const LaurentPoly& f);

struct KnotInvariants {
    Integer determinant;  // |Delta(-1)|, odd
    Integer a2;           // Conway z^2 coefficient
    int det_mod8 = 1;     // in {1, 3, 5, 7}
    int arf = 0;          // a2 mod 2
};

/// |Delta(-1)| = |H_1| of the double branched cover.
Integer determinant(const AlexanderPolynomial& delta);

/// Delta''(1) / 2 on the symmetric representative.
Integer conway_a2(const AlexanderPolynomial& delta);

/// Determinant, a2 and Arf bit, checked against the Murasugi relation
/// det = +-1 mod 8 <=> a2 even. Throws ValidationError when the relation fails:
/// such a polynomial is not the Alexander polynomial of any knot.
KnotInvariants check_arf_consistency(const AlexanderPolynomial& delta);

} // namespace knotsurg

#endif
