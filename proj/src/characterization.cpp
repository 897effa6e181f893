#include "ovm/characterization.hpp"

#include "ovm/corpus.hpp"

#include <cmath>
#include <stdexcept>

namespace ovm {

namespace {

void require_positive_pair(int p, int q, const char* op) {
    if (p < 1 || q < 1)
        throw std::invalid_argument(std::string(op) + ": exponents must be positive integers");
}

bool residual_matches(double residual, double scale, double tol) {
    return residual <= tol * (1.0 + scale);
}

// Shared tail of both certifiers: the direct spectrality check and the
// consistency flag.
void finish_verdict(Verdict& v, const HermitianMatrix& t, const FiniteOVM& f, int kmax,
                    double tol) {
    bool spectral = is_spectral(f, tol);
    bool all_integer_match = true;
    for (int k = 0; k <= kmax && all_integer_match; ++k) {
        all_integer_match = approx_eq(matrix_power(t, k), moment(f, k), tol);
    }
    v.direct_spectral = spectral && all_integer_match;
    bool all_requested = true;
    for (bool m : v.moments_match) all_requested = all_requested && m;
    v.theorem_consistent = !(v.pair_in_omega && all_requested && !v.direct_spectral);
}

}  // namespace

bool in_omega(int p, int q) {
    require_positive_pair(p, q, "in_omega");
    return p < q && p % 2 == 1 && q % 2 == 0;
}

Verdict certify_two_moment(const HermitianMatrix& t, const FiniteOVM& f, int p, int q,
                           double tol) {
    require_positive_pair(p, q, "certify_two_moment");
    if (p > q) throw std::invalid_argument("certify_two_moment: requires p <= q");
    if (t.dim() != f.dim())
        throw std::invalid_argument("certify_two_moment: operator and measure dimensions differ");

    Verdict v;
    v.pair_in_omega = in_omega(p, q);
    for (int k : {p, q}) {
        const HermitianMatrix power = matrix_power(t, k);
        const HermitianMatrix mk = moment(f, k);
        const double residual = (power.mat() - mk.mat()).norm();
        v.residuals.push_back(residual);
        v.moments_match.push_back(residual_matches(
            residual, std::max(power.frobenius_norm(), mk.frobenius_norm()), tol));
    }
    const int kmax = std::max(2 * q, 2 * f.atom_count());
    finish_verdict(v, t, f, kmax, tol);
    return v;
}

HermitianMatrix recover_T_odd(const FiniteOVM& f, int p) {
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument(
            "recover_T_odd: p must be odd; even powers admit no unique selfadjoint root");
    return apply_function(moment(f, p), real_odd_root(p), Interval::real_line());
}

Verdict certify_positive(const HermitianMatrix& t, const FiniteOVM& f, double alpha,
                         double beta, double tol) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("certify_positive: exponents must be positive");
    if (alpha == beta) throw std::invalid_argument("certify_positive: exponents must differ");
    if (t.dim() != f.dim())
        throw std::invalid_argument("certify_positive: operator and measure dimensions differ");
    if (!is_psd(t, tol))
        throw std::invalid_argument("certify_positive: candidate operator is not PSD");
    for (const Atom& atom : f.atoms()) {
        if (atom.lambda < 0.0)
            throw std::domain_error("certify_positive: support point " +
                                    std::to_string(atom.lambda) + " is negative");
    }

    Verdict v;
    v.pair_in_omega = true;  // every distinct positive pair forces spectrality here
    for (double r : {alpha, beta}) {
        const HermitianMatrix power =
            apply_function(t, [r](double x) { return std::pow(x, r); }, Interval::nonnegative());
        const HermitianMatrix mr = moment_real(f, r);
        const double residual = (power.mat() - mr.mat()).norm();
        v.residuals.push_back(residual);
        v.moments_match.push_back(residual_matches(
            residual, std::max(power.frobenius_norm(), mr.frobenius_norm()), tol));
    }
    finish_verdict(v, t, f, 2 * f.atom_count(), tol);
    return v;
}

std::optional<ViolationWitness> search_violation(
    int p, int q, int trials, std::uint64_t seed, int dim_max,
    std::span<const std::pair<HermitianMatrix, FiniteOVM>> injected) {
    require_positive_pair(p, q, "search_violation");
    if (trials < 1) throw std::invalid_argument("search_violation: trials must be positive");
    if (dim_max < 1) throw std::invalid_argument("search_violation: dim_max must be positive");

    const auto evaluate = [&](int trial, const HermitianMatrix& t,
                              const FiniteOVM& f) -> std::optional<ViolationWitness> {
        Verdict v = certify_two_moment(t, f, p, q);
        bool all_match = true;
        for (bool m : v.moments_match) all_match = all_match && m;
        if (all_match && !v.direct_spectral)
            return ViolationWitness{trial, t, f, std::move(v)};
        return std::nullopt;
    };

    for (const auto& [t, f] : injected) {
        if (auto witness = evaluate(-1, t, f)) return witness;
    }
    if (p % 2 == 0) return std::nullopt;  // no canonical candidate to recover

    for (int trial = 0; trial < trials; ++trial) {
        corpus::Rng rng(corpus::derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const int dim = rng.uniform_int(1, dim_max);
        const int atoms = rng.uniform_int(2, 5);
        const FiniteOVM f = corpus::random_povm(rng, dim, atoms);
        if (is_spectral(f, 1e-9)) continue;
        const HermitianMatrix t = recover_T_odd(f, p);
        if (auto witness = evaluate(trial, t, f)) return witness;
    }
    return std::nullopt;
}

}  // namespace ovm
