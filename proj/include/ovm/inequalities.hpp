// inequalities.hpp — operator inequalities as PSD-gap computations with
// equality-case detectors: the compression (Kadison) gap, the contraction
// gap for fractional powers (Hansen, with the equality case for proper
// projections), and the epsilon-net Schur-complement bound (Lieb–Ruskai).

#pragma once

#include "ovm/hermitian.hpp"

#include <span>
#include <utility>
#include <vector>

namespace ovm {

/// Unital positive map X -> P X P restricted to ran(P), materialized through
/// an orthonormal basis W of the range: apply(X) = W* X W.
class CompressionMap {
public:
    // Builds the range basis from the projection's eigenvectors.
    explicit CompressionMap(const HermitianMatrix& projection, double tol = kDefaultTol);

    // Range given directly as an isometry (V*V = I); the projection is VV*.
    static CompressionMap from_isometry(const Matrix& isometry, double tol = kDefaultTol);

    int big_dim() const { return static_cast<int>(basis_.rows()); }
    int range_dim() const { return static_cast<int>(basis_.cols()); }
    const HermitianMatrix& projection() const { return projection_; }
    const Matrix& range_basis() const { return basis_; }

    HermitianMatrix apply(const HermitianMatrix& x) const;
    Matrix apply_raw(const Matrix& x) const;

private:
    CompressionMap(HermitianMatrix projection, Matrix basis)
        : projection_(std::move(projection)), basis_(std::move(basis)) {}

    HermitianMatrix projection_;
    Matrix basis_;
};

// apply(A^2) - apply(A)^2; PSD, zero iff A commutes with the projection.
HermitianMatrix kadison_gap(const CompressionMap& c, const HermitianMatrix& a);

// The same gap through the algebraic identity
//   P A^2 P - (P A P)^2 = (A P)* (I - P) (A P),
// compressed to the range; an independent route for cross-checking.
HermitianMatrix kadison_gap_residual_form(const CompressionMap& c, const HermitianMatrix& a);

// f(C A C) - C f(A) C for f(t) = t^s, s in (0,1), A PSD, C a selfadjoint
// contraction (||C|| <= 1 + 1e-12 slack). PSD.
HermitianMatrix hansen_gap(const HermitianMatrix& a, const HermitianMatrix& c, double s);

// For a proper projection (P != I) the gap vanishes iff P commutes with A;
// returns (gap_zero, commutes), which must agree.
std::pair<bool, bool> hansen_equality_case(const HermitianMatrix& a, const HermitianMatrix& p,
                                           double s, double tol = 1e-9);

// G(eps) = apply(A^2) - apply(AB) (apply(B^2) + eps I)^{-1} apply(BA) along a
// decreasing eps list; each G(eps) is PSD and the values decrease as eps
// shrinks toward the strong-limit bound.
std::vector<HermitianMatrix> lieb_ruskai_path(const CompressionMap& c, const HermitianMatrix& a,
                                              const HermitianMatrix& b,
                                              std::span<const double> eps_list);

// G at the smallest eps of the list.
HermitianMatrix lieb_ruskai_gap(const CompressionMap& c, const HermitianMatrix& a,
                                const HermitianMatrix& b, std::span<const double> eps_list);

// Pseudoinverse oracle for the same bound (eigenvalues below
// rank_tol * (1 + ||apply(B^2)||) are dropped); cross-checks the eps-net.
HermitianMatrix lieb_ruskai_gap_pinv(const CompressionMap& c, const HermitianMatrix& a,
                                     const HermitianMatrix& b, double rank_tol = 1e-10);

}  // namespace ovm
