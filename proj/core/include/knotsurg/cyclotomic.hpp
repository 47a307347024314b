#ifndef KNOTSURG_CYCLOTOMIC_HPP
#define KNOTSURG_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "knotsurg/laurent.hpp"

namespace knotsurg {

/// Index d >= 1 of a primitive root of unity zeta_d.
class CyclotomicIndex {
public:
    /// Throws DomainError for d = 0.
    explicit CyclotomicIndex(std::uint64_t d);
    std::uint64_t value() const noexcept { return d_; }
    friend auto operator<=>(const CyclotomicIndex&, const CyclotomicIndex&) = default;

private:
    std::uint64_t d_;
};

/// Absolute value of a norm from Q(zeta_d) down to Q; always >= 0.
class NormValue {
public:
    NormValue() = default;
    /// Throws DomainError for negative input.
    explicit NormValue(Integer v);
    const Integer& value() const noexcept { return v_; }
    bool is_zero() const { return v_ == 0; }
    friend bool operator==(const NormValue&, const NormValue&) = default;

private:
    Integer v_ = 0;
};

/// Largest d accepted by the cyclotomic routines (default 10000).
std::uint64_t max_cyclotomic_index() noexcept;
void set_max_cyclotomic_index(std::uint64_t cap);

/// Phi_d, built by exact division of t^d - 1 by Phi_e for the proper divisors e
/// of d. Results are cached process-wide; the returned reference stays valid
/// for the lifetime of the program. Throws DomainError above the cap.
const IntPoly& cyclotomic_poly(CyclotomicIndex d);

std::uint64_t euler_phi(std::uint64_t n);
/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a), by the subresultant PRS.
/// When exactly one argument is zero the result is 1 if the other is a nonzero
/// constant and 0 otherwise. Throws DomainError when both are zero.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// |f|_d = |prod_{i in (Z/d)^x} f(zeta_d^i)| = |Res(Phi_d, t^s f)|.
NormValue norm_d(const LaurentPoly& f, CyclotomicIndex d);

/// Product of |f|_e over all divisors e of d.
NormValue norm_total(const LaurentPoly& f, CyclotomicIndex d);

struct VanishingResult {
    bool vanishes = false;
    /// Divisors e of m with Phi_e | t^s f, ascending.
    std::vector<std::uint64_t> witnesses;
};

/// Whether f has a root among the m-th roots of unity, decided by
/// divisibility by Phi_e for each e | m rather than by forming the product.
VanishingResult vanishes_on_mth_roots(const LaurentPoly& f, std::uint64_t m);

} // namespace knotsurg

#endif
