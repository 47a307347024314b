#ifndef KNOTSURG_SURGERY_HPP
#define KNOTSURG_SURGERY_HPP

#include <optional>

#include "knotsurg/cyclotomic.hpp"
#include "knotsurg/knot.hpp"

namespace knotsurg {

/// Reduced surgery slope p/q with q >= 1; the sign is carried by p.
class SurgeryCoefficient {
public:
    /// Throws ValidationError when q = 0 or gcd(p, q) != 1.
    SurgeryCoefficient(Integer p, Integer q);

    const Integer& p() const noexcept { return p_; }
    const Integer& q() const noexcept { return q_; }
    std::string to_string() const { return p_.get_str() + "/" + q_.get_str(); }
    friend bool operator==(const SurgeryCoefficient&, const SurgeryCoefficient&) = default;

private:
    Integer p_;
    Integer q_;
};

/// Order of H_1(Sigma(K; p/q)) = Z/|p|; 0 stands for the infinite cyclic group.
Integer homology_of_surgery(const SurgeryCoefficient& c);

/// M = Sigma(K; 2/q), its double branched cover Sigma_2, and
/// X = Sigma_2(lifted K; 1/q), the 2-fold cover of M.
struct CoveringData {
    AlexanderPolynomial delta_K;
    Integer q;  // odd
    Integer m;  // |H_1(Sigma_2)| = |H_1(X)| = determinant(delta_K)
    std::optional<AlexanderPolynomial> delta_K_lifted;
};

/// Throws ValidationError when q is even. The m >= 3 requirement belongs to
/// the consumers and is not enforced here.
CoveringData build_covering(const AlexanderPolynomial& delta_K, const Integer& q,
                            std::optional<AlexanderPolynomial> delta_K_lifted = std::nullopt);

/// A 3-manifold with H_1 = Z/order, presented by a knot in a homology sphere.
struct HomologyLensSpace {
    std::uint64_t order = 1;
    AlexanderPolynomial knot_poly;
};

/// |X|_d = |Delta|_d; d must divide |H_1(X)|.
NormValue lens_norm(const HomologyLensSpace& x, std::uint64_t d);
/// ||X||_d, the product of |X|_e over e | d; d must divide |H_1(X)|.
NormValue lens_norm_total(const HomologyLensSpace& x, std::uint64_t d);

struct LescopValue {
    Integer value;
    friend bool operator==(const LescopValue&, const LescopValue&) = default;
};

/// lambda(Sigma(K; 2/q)) = q * a2(K), valid only when lambda(Sigma) = 0.
/// Throws ValidationError for lambda_sigma != 0 or even q.
LescopValue lescop_2q(const Integer& a2, const Integer& q, const Integer& lambda_sigma);

} // namespace knotsurg

#endif
