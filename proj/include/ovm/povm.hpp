// povm.hpp — finitely-supported operator-valued measures on the real line:
// moments, intrinsic noise, spectrality, Hankel matrices, pushforward and
// rescaling.

#pragma once

#include "ovm/hermitian.hpp"

#include <span>
#include <vector>

namespace ovm {

// One atom of the measure: a real support point and its effect operator.
struct Atom {
    double lambda = 0.0;
    HermitianMatrix effect;
};

/// Finitely-supported operator-valued measure.
///
/// Construction canonicalizes the atom list: effects with Frobenius norm
/// below 1e-14 are dropped (zero-mass atoms are invisible to every
/// integral), support points closer than 1e-12 * (1 + max|lambda|) are
/// merged by summing their effects, atoms are sorted by ascending support
/// point, and every effect must be PSD within 1e-10. Whether the effects
/// sum to the identity is recorded in normalized(); measures failing it are
/// representable but rejected by the operations that require a semispectral
/// measure.
class FiniteOVM {
public:
    FiniteOVM(int dim, std::vector<Atom> atoms);

    int dim() const { return dim_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    int atom_count() const { return static_cast<int>(atoms_.size()); }
    bool normalized() const { return normalized_; }

    // Sum of all effects (the measure of the whole line).
    HermitianMatrix total() const;

    // Sum of the effects whose support point lies in the given finite union
    // of closed intervals. The only set-evaluation the finite model exposes.
    HermitianMatrix measure_of(std::span<const Interval> sets) const;

private:
    int dim_ = 0;
    std::vector<Atom> atoms_;
    bool normalized_ = false;
};

// k-th operator moment, sum_i lambda_i^k * effect_i; k = 0 returns the
// identity exactly. Requires a normalized measure.
HermitianMatrix moment(const FiniteOVM& f, int k);

// Real-exponent moment for measures supported in [0, inf), with the
// convention 0^0 = 1. Exponents up to r = 64 are accurate at the library's
// support scales; far larger exponents underflow/overflow in double
// precision and are not checked against.
HermitianMatrix moment_real(const FiniteOVM& f, double r);

// Intrinsic noise operator: second moment minus the square of the first.
// Always PSD for a normalized measure; zero exactly for spectral measures.
HermitianMatrix variance(const FiniteOVM& f);

// True iff every effect is an orthogonal projection and distinct effects
// annihilate each other. The pairwise check is redundant given the
// normalization but keeps the predicate numerically robust.
bool is_spectral(const FiniteOVM& f, double tol = kDefaultTol);

// Block Hankel matrix of moments, block (j,k) = moment(f, j+k) for
// j,k = 0..n; PSD for every normalized measure.
HermitianMatrix hankel(const FiniteOVM& f, int n);

using SupportMap = std::function<double(double)>;

// Image measure under a map of the support points; colliding images merge
// by summing effects.
FiniteOVM pushforward(const FiniteOVM& f, const SupportMap& omega);

// Pushforward by x -> tau * x, tau != 0. Scales the k-th moment by tau^k.
FiniteOVM rescale(const FiniteOVM& f, double tau);

}  // namespace ovm
