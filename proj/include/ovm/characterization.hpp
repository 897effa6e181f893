// characterization.hpp — two-moment spectrality certifiers: decide from a
// pair of operator moments whether a measure is forced to be the spectral
// measure of a candidate operator, and stress-search for violations.

#pragma once

#include "ovm/hermitian.hpp"
#include "ovm/povm.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ovm {

/// Outcome of a certification run.
///
/// theorem_consistent is false exactly when the pair lies in the forcing set
/// (p < q, p odd, q even), every requested moment matches, and yet the
/// measure is not directly the spectral measure of the candidate — i.e. a
/// falsification of the two-moment characterization.
struct Verdict {
    std::vector<bool> moments_match;  // one flag per requested exponent
    bool pair_in_omega = false;
    bool direct_spectral = false;
    bool theorem_consistent = true;
    std::vector<double> residuals;    // Frobenius defects, same order as moments_match
};

// The exponent pairs for which two matching moments force spectrality:
// p < q, p odd, q even.
bool in_omega(int p, int q);

/// Certify T against the p-th and q-th moments of f.
///
/// Residuals are ||T^k - moment(f,k)||_F for k = p, q; a moment matches when
/// its residual is within tol relative Frobenius. direct_spectral combines
/// is_spectral(f) with a moment comparison at every exponent up to
/// max(2q, 2 * atom_count) — enough to pin the measure, since a measure with
/// m atoms is determined by its first 2m moments.
Verdict certify_two_moment(const HermitianMatrix& t, const FiniteOVM& f, int p, int q,
                           double tol = 1e-9);

// The unique selfadjoint candidate with T^p equal to the p-th moment;
// defined for odd p only (even powers have no unique selfadjoint root).
HermitianMatrix recover_T_odd(const FiniteOVM& f, int p);

/// Positive-case certification: T PSD, f supported in [0, inf), fractional
/// exponents alpha != beta > 0. Any such pair of matching moments forces
/// spectrality, so pair_in_omega is reported as true.
Verdict certify_positive(const HermitianMatrix& t, const FiniteOVM& f, double alpha,
                         double beta, double tol = 1e-9);

struct ViolationWitness {
    int trial;  // random trial index, or -1 for an injected instance
    HermitianMatrix t;
    FiniteOVM f;
    Verdict verdict;
};

/// Stress-search for a falsification at (p, q): evaluates any injected
/// (T, F) instances first, then `trials` random non-spectral measures with
/// T recovered from the p-th moment (trials are skipped when p is even, as
/// no canonical candidate exists). Returns the first instance whose
/// requested moments all match while the measure is not directly spectral;
/// for pairs in the forcing set the return must be empty. Trial randomness
/// derives from (seed, trial index), so trials are order-independent.
std::optional<ViolationWitness> search_violation(
    int p, int q, int trials, std::uint64_t seed, int dim_max,
    std::span<const std::pair<HermitianMatrix, FiniteOVM>> injected = {});

}  // namespace ovm
