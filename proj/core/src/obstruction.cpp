#include "knotsurg/obstruction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "knotsurg/error.hpp"

namespace knotsurg {

namespace {

std::string pairwise_text(const std::vector<Integer>& fixed)
{
    std::string s = "α, β";
    for (const auto& f : fixed)
        s += ", " + f.get_str();
    return s + " pairwise coprime";
}

std::uint64_t to_u64(const Integer& n, const char* what)
{
    if (n < 0 || !mpz_fits_ulong_p(n.get_mpz_t()))
        throw ValidationError(std::string(what) + " does not fit in 64 bits: " + n.get_str());
    return mpz_get_ui(n.get_mpz_t());
}

bool is_odd(const Integer& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

void validate_pair(const Integer& alpha, const Integer& beta)
{
    if (alpha < 1 || !(alpha < beta))
        throw ValidationError("require 1 <= alpha < beta");
    if (gcd(alpha, beta) != 1)
        throw ValidationError("require gcd(alpha, beta) = 1");
    if (gcd(Integer(alpha * beta), Integer(10)) != 1)
        throw ValidationError("require gcd(alpha * beta, 10) = 1");
}

HypothesisRow row(std::string name, std::string required, std::string actual, bool ok)
{
    return HypothesisRow{std::move(name), std::move(required), std::move(actual), ok};
}

} // namespace

std::string_view tag(Theorem t) noexcept
{
    switch (t) {
    case Theorem::FigureEightClass: return "T1.1";
    case Theorem::FiberCount: return "T2.1";
    case Theorem::NonIntegral: return "T2.2";
    }
    return "?";
}

SeifertFamily make_family(int scale, std::vector<Integer> fixed)
{
    if (scale != 2 && scale != 3)
        throw ValidationError("family scale must be 2 or 3");
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (fixed[i] < 2)
            throw ValidationError("multiplicities must be at least 2");
        if (gcd(fixed[i], Integer(scale)) != 1)
            throw ValidationError("fixed multiplicity " + fixed[i].get_str() + " shares a factor with the scale");
        for (std::size_t j = 0; j < i; ++j)
            if (gcd(fixed[i], fixed[j]) != 1)
                throw ValidationError("fixed multiplicities must be pairwise coprime");
    }
    SeifertFamily f;
    f.even_pair = true;
    f.scale = scale;
    f.coprimality = pairwise_text(fixed);
    f.fixed = std::move(fixed);
    return f;
}

std::string to_string(const SeifertFamily& f)
{
    std::string s = "{";
    bool first = true;
    if (f.even_pair) {
        s += std::to_string(f.scale) + "α, " + std::to_string(f.scale) + "β";
        first = false;
    }
    for (const auto& x : f.fixed) {
        if (!first)
            s += ", ";
        s += x.get_str();
        first = false;
    }
    return s + "}";
}

FiberCountConstraint exactly_three() noexcept { return {FiberCountKind::ExactlyThree, 3}; }
FiberCountConstraint at_least_four() noexcept { return {FiberCountKind::AtLeastFour, 4}; }

std::string_view to_string(FiberCountKind k) noexcept
{
    switch (k) {
    case FiberCountKind::ExactlyThree: return "ExactlyThree";
    case FiberCountKind::AtLeastFour: return "AtLeastFour";
    case FiberCountKind::Either: return "Either";
    }
    return "?";
}

std::string_view to_string(VerdictKind k) noexcept
{
    switch (k) {
    case VerdictKind::NotSeifert: return "NotSeifert";
    case VerdictKind::ConstrainedSeifert: return "ConstrainedSeifert";
    case VerdictKind::Excluded: return "Excluded";
    case VerdictKind::InsufficientData: return "InsufficientData";
    case VerdictKind::HypothesesUnmet: return "HypothesesUnmet";
    }
    return "?";
}

bool ObstructionReport::all_hypotheses_satisfied() const noexcept
{
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const HypothesisRow& r) { return r.satisfied; });
}

std::vector<std::string> ObstructionReport::failing_hypotheses() const
{
    std::vector<std::string> out;
    for (const auto& r : hypotheses)
        if (!r.satisfied)
            out.push_back(r.name);
    return out;
}

// ------------------------------------------------------------------ T1.1

ObstructionReport check_theorem_seifert(const AlexanderPolynomial& delta, const SurgeryCoefficient& c)
{
    static const AlexanderPolynomial figure_eight = normalize_alexander(LaurentPoly(0, {1, -3, 1}));

    ObstructionReport rep;
    rep.theorem = Theorem::FigureEightClass;
    const Integer h1 = homology_of_surgery(c);
    rep.hypotheses.push_back(row("alexander", "Delta_K = t^2-3t+1 up to units (" + to_string(figure_eight.poly()) + ")",
                                 to_string(delta.poly()), delta == figure_eight));
    rep.hypotheses.push_back(row("h1_nontrivial", "H1(M) != 0, Z (|p| >= 2)", h1.get_str(), h1 >= 2));
    rep.certificate["p"] = c.p();
    rep.certificate["q"] = c.q();
    rep.certificate["h1_order"] = h1;
    rep.certificate["determinant"] = determinant(delta);

    if (!rep.all_hypotheses_satisfied()) {
        rep.verdict.kind = VerdictKind::HypothesesUnmet;
        return rep;
    }
    if (h1 == 2 || h1 == 3) {
        rep.verdict.kind = VerdictKind::ConstrainedSeifert;
        rep.verdict.families.push_back(h1 == 2 ? make_family(2, {Integer(5)}) : make_family(3, {Integer(4)}));
        rep.verdict.fiber_count = exactly_three();
        rep.verdict.note = "base S^2, three singular fibers";
    } else {
        rep.verdict.kind = VerdictKind::Excluded;
        rep.verdict.excluded = c;
        rep.verdict.note = "no Seifert fibered space with base S^2 and H1 != 0, Z can result";
    }
    return rep;
}

// ---------------------------------------------------------- combinatorics

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_prime_power(std::uint64_t n) { return n >= 2 && factorize(n).size() == 1; }

std::vector<std::vector<std::uint64_t>> multiplicity_candidates(std::uint64_t m, int n)
{
    if (m < 3 || m % 2 == 0)
        throw ValidationError("m must be odd and at least 3");
    if (n < 3)
        throw ValidationError("fiber count N must be at least 3");

    // Pairwise coprimality keeps each prime power whole, so candidates are the
    // set partitions of the prime-power factors into N - 2 blocks.
    std::vector<std::uint64_t> parts;
    for (auto [p, e] : factorize(m)) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i)
            pe *= p;
        parts.push_back(pe);
    }
    const auto blocks = static_cast<std::size_t>(n - 2);
    std::vector<std::vector<std::uint64_t>> out;
    if (blocks > parts.size())
        return out;

    std::vector<std::uint64_t> prod;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (parts.size() - i < blocks - prod.size())
            return;
        if (i == parts.size()) {
            auto sorted = prod;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
            return;
        }
        for (std::size_t b = 0; b < prod.size(); ++b) {
            prod[b] *= parts[i];
            place(i + 1);
            prod[b] /= parts[i];
        }
        if (prod.size() < blocks) {
            prod.push_back(parts[i]);
            place(i + 1);
            prod.pop_back();
        }
    };
    place(0);
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------------ T2.1

ObstructionReport check_main1(const CoveringData& cov)
{
    if (!is_odd(cov.q))
        throw ValidationError("q must be odd");

    ObstructionReport rep;
    rep.theorem = Theorem::FiberCount;
    rep.hypotheses.push_back(row("m_at_least_3", "H1(Sigma_2) = Z/m with m >= 3", cov.m.get_str(), cov.m >= 3));
    rep.hypotheses.push_back(row("q_odd", "q odd", cov.q.get_str(), true));
    rep.certificate["m"] = cov.m;
    rep.certificate["q"] = cov.q;
    if (!rep.all_hypotheses_satisfied()) {
        rep.verdict.kind = VerdictKind::HypothesesUnmet;
        return rep;
    }

    const std::uint64_t m = to_u64(cov.m, "m");
    const bool prime_power = is_prime_power(m);
    rep.certificate["m_is_prime_power"] = prime_power ? 1 : 0;

    if (prime_power) {
        rep.verdict.kind = VerdictKind::ConstrainedSeifert;
        rep.verdict.families.push_back(make_family(2, {cov.m}));
        rep.verdict.fiber_count = exactly_three();
        rep.verdict.note = "m is a prime power; no lifted polynomial needed";
        return rep;
    }
    if (!cov.delta_K_lifted) {
        rep.verdict.kind = VerdictKind::InsufficientData;
        rep.verdict.note = "m is not a prime power; the lifted knot polynomial is required to decide ||X||_m = 0";
        return rep;
    }

    const LaurentPoly& lifted = cov.delta_K_lifted->poly();
    const VanishingResult v = vanishes_on_mth_roots(lifted, m);
    rep.certificate["lifted_norm_total"] = norm_total(lifted, CyclotomicIndex(m)).value();
    rep.vanishing_witnesses = v.witnesses;
    rep.verdict.kind = VerdictKind::ConstrainedSeifert;

    if (v.vanishes) {
        rep.verdict.fiber_count = at_least_four();
        rep.verdict.note = "||X||_m = 0; candidates satisfy p_3...p_N = m (necessary conditions only)";
        const int max_n = static_cast<int>(factorize(m).size()) + 2;
        for (int n = 4; n <= max_n; ++n)
            for (const auto& cand : multiplicity_candidates(m, n))
                rep.verdict.families.push_back(make_family(2, std::vector<Integer>(cand.begin(), cand.end())));
    } else {
        rep.verdict.fiber_count = exactly_three();
        rep.verdict.note = "||X||_m != 0";
        rep.verdict.families.push_back(make_family(2, {cov.m}));
    }
    return rep;
}

// ------------------------------------------------------------------ T2.2

ObstructionReport check_main2(const Integer& lambda_sigma, const AlexanderPolynomial& delta_K,
                              const Integer& q, const NormValue& x5)
{
    const KnotInvariants inv = check_arf_consistency(delta_K);
    const Integer qa2 = q * inv.a2;
    const Integer bound = 4 * qa2 * qa2;
    const Integer bound_sq = bound * bound;
    const bool q_ok = abs(q) >= 3 && is_odd(q);

    ObstructionReport rep;
    rep.theorem = Theorem::NonIntegral;
    rep.hypotheses.push_back(row("H1", "lambda(Sigma) = 0", lambda_sigma.get_str(), lambda_sigma == 0));
    rep.hypotheses.push_back(row("H2", "|Delta_K(-1)| = 5", inv.determinant.get_str(), inv.determinant == 5));
    rep.hypotheses.push_back(row("H3a", "|q| >= 3 and q odd", q.get_str(), q_ok));
    rep.hypotheses.push_back(row("H3b", "sqrt(|X|_5) > 4(q a2)^2, i.e. |X|_5 > " + bound_sq.get_str(),
                                 x5.value().get_str(), x5.value() > bound_sq));

    rep.certificate["m"] = inv.determinant;
    rep.certificate["a2"] = inv.a2;
    rep.certificate["q"] = q;
    rep.certificate["bound"] = bound;
    rep.certificate["bound_squared"] = bound_sq;
    rep.certificate["x5"] = x5.value();
    if (lambda_sigma == 0 && is_odd(q))
        rep.certificate["lambda_M"] = lescop_2q(inv.a2, q, lambda_sigma).value;

    if (rep.all_hypotheses_satisfied()) {
        rep.verdict.kind = VerdictKind::NotSeifert;
        rep.verdict.note = "Sigma(K; 2/q) is not a Seifert fibered space";
    } else {
        rep.verdict.kind = VerdictKind::HypothesesUnmet;
        std::string failing;
        for (const auto& name : rep.failing_hypotheses())
            failing += (failing.empty() ? "" : ", ") + name;
        rep.verdict.note = "unmet: " + failing;
    }
    return rep;
}

NormValue predicted_x5(const Integer& alpha, const Integer& beta)
{
    validate_pair(alpha, beta);
    Integer ab = alpha * beta;
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), ab.get_mpz_t(), 4);
    return NormValue(r);
}

bool lambda_bound_check(const LescopValue& lambda, const Integer& alpha, const Integer& beta)
{
    validate_pair(alpha, beta);
    return 2 * abs(lambda.value) < alpha * beta;
}

} // namespace knotsurg
