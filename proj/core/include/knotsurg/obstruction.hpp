#ifndef KNOTSURG_OBSTRUCTION_HPP
#define KNOTSURG_OBSTRUCTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotsurg/cyclotomic.hpp"
#include "knotsurg/knot.hpp"
#include "knotsurg/surgery.hpp"

namespace knotsurg {

// Deciders for three Seifert-surgery obstruction results. Each theorem is an
// implication about a space *assumed* Seifert fibered, so a report constrains
// or rules out the Seifert structure; it never asserts that one exists.

enum class Theorem {
    FigureEightClass,  // "T1.1": Delta = t^2 - 3t + 1, coefficients 2/q and 3/q
    FiberCount,        // "T2.1": ||X||_m = 0 <=> N >= 4; prime-power m forces N = 3
    NonIntegral,       // "T2.2": |Delta(-1)| = 5 and a norm bound exclude 2/q, |q| >= 3
};

std::string_view tag(Theorem t) noexcept;

/// Multiplicity set {s*alpha, s*beta, fixed...} with alpha, beta and the fixed
/// entries pairwise coprime. The symbolic pair is present iff even_pair.
struct SeifertFamily {
    bool even_pair = true;
    int scale = 2;
    std::vector<Integer> fixed;
    std::string coprimality;

    /// Number of singular fibers in the family.
    std::size_t fiber_count() const noexcept { return fixed.size() + (even_pair ? 2 : 0); }
    friend bool operator==(const SeifertFamily&, const SeifertFamily&) = default;
};

/// Family {scale*alpha, scale*beta, fixed...}; throws ValidationError unless
/// scale is 2 or 3 and the fixed entries are >= 2, pairwise coprime and
/// coprime to scale.
SeifertFamily make_family(int scale, std::vector<Integer> fixed);

/// e.g. "{2α, 2β, 5}"
std::string to_string(const SeifertFamily& f);

enum class FiberCountKind { ExactlyThree, AtLeastFour, Either };

struct FiberCountConstraint {
    FiberCountKind kind = FiberCountKind::Either;
    int n_min = 3;
    friend bool operator==(const FiberCountConstraint&, const FiberCountConstraint&) = default;
};

FiberCountConstraint exactly_three() noexcept;
FiberCountConstraint at_least_four() noexcept;
std::string_view to_string(FiberCountKind k) noexcept;

enum class VerdictKind { NotSeifert, ConstrainedSeifert, Excluded, InsufficientData, HypothesesUnmet };

std::string_view to_string(VerdictKind k) noexcept;

struct Verdict {
    VerdictKind kind = VerdictKind::HypothesesUnmet;
    std::vector<SeifertFamily> families;               // ConstrainedSeifert
    std::optional<FiberCountConstraint> fiber_count;   // ConstrainedSeifert
    std::optional<SurgeryCoefficient> excluded;        // Excluded
    std::string note;
};

struct HypothesisRow {
    std::string name;
    std::string required;
    std::string actual;
    bool satisfied = false;
};

struct ObstructionReport {
    Theorem theorem = Theorem::FigureEightClass;
    std::vector<HypothesisRow> hypotheses;
    Verdict verdict;
    /// Intermediate values, recomputable from the inputs with the other modules.
    std::map<std::string, Integer> certificate;
    /// Divisors e of m with Phi_e dividing the lifted polynomial (FiberCount only).
    std::vector<std::uint64_t> vanishing_witnesses;

    bool all_hypotheses_satisfied() const noexcept;
    std::vector<std::string> failing_hypotheses() const;
};

/// Coefficient test for knots with Delta = t^2 - 3t + 1 and surgeries with
/// H_1 != 0, Z. Any other polynomial or |p| < 2 reports HypothesesUnmet.
ObstructionReport check_theorem_seifert(const AlexanderPolynomial& delta, const SurgeryCoefficient& c);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Unordered multisets {p_3, ..., p_N} of N - 2 pairwise-coprime odd integers
/// >= 3 with product m. Each multiset ascending; the list lexicographic.
/// Throws ValidationError for even m, m < 3 or N < 3.
std::vector<std::vector<std::uint64_t>> multiplicity_candidates(std::uint64_t m, int n);

/// Fiber-count decider for 2/q-surgery given the covering data.
ObstructionReport check_main1(const CoveringData& cov);

/// Non-integrality decider: all hypotheses hold => Sigma(K; 2/q) is not Seifert.
ObstructionReport check_main2(const Integer& lambda_sigma, const AlexanderPolynomial& delta_K,
                              const Integer& q, const NormValue& x5);

/// |X|_5 = (alpha * beta)^4 for the family {2α, 2β, 5}.
/// Requires 1 <= alpha < beta, gcd(alpha, beta) = 1, gcd(alpha * beta, 10) = 1.
NormValue predicted_x5(const Integer& alpha, const Integer& beta);

/// |lambda(M)| < alpha * beta / 2, evaluated as 2 |lambda| < alpha * beta.
/// Same preconditions as predicted_x5.
bool lambda_bound_check(const LescopValue& lambda, const Integer& alpha, const Integer& beta);

} // namespace knotsurg

#endif
