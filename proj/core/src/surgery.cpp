#include "knotsurg/surgery.hpp"

#include <string>

#include "knotsurg/error.hpp"

namespace knotsurg {

namespace {

bool is_odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

void require_divides_order(const HomologyLensSpace& x, std::uint64_t d)
{
    if (d == 0 || x.order % d != 0)
        throw ValidationError("d must divide |H1(X)|: d = " + std::to_string(d) +
                              ", |H1(X)| = " + std::to_string(x.order));
}

} // namespace

SurgeryCoefficient::SurgeryCoefficient(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q))
{
    if (q_ == 0)
        throw ValidationError("surgery coefficient denominator must be nonzero");
    Integer g = gcd(p_, q_);
    if (g != 1)
        throw ValidationError("surgery coefficient " + p_.get_str() + "/" + q_.get_str() +
                              " is not reduced");
    if (q_ < 0) {
        p_ = -p_;
        q_ = -q_;
    }
}

Integer homology_of_surgery(const SurgeryCoefficient& c) { return abs(c.p()); }

CoveringData build_covering(const AlexanderPolynomial& delta_K, const Integer& q,
                            std::optional<AlexanderPolynomial> delta_K_lifted)
{
    if (!is_odd(q))
        throw ValidationError("q must be odd");
    return CoveringData{delta_K, q, determinant(delta_K), std::move(delta_K_lifted)};
}

NormValue lens_norm(const HomologyLensSpace& x, std::uint64_t d)
{
    require_divides_order(x, d);
    return norm_d(x.knot_poly.poly(), CyclotomicIndex(d));
}

NormValue lens_norm_total(const HomologyLensSpace& x, std::uint64_t d)
{
    require_divides_order(x, d);
    return norm_total(x.knot_poly.poly(), CyclotomicIndex(d));
}

LescopValue lescop_2q(const Integer& a2, const Integer& q, const Integer& lambda_sigma)
{
    if (lambda_sigma != 0)
        throw ValidationError("general Lescop surgery formula out of scope; requires lambda(Sigma)=0");
    if (!is_odd(q))
        throw ValidationError("q must be odd");
    return LescopValue{q * a2};
}

} // namespace knotsurg
