// dilation.hpp — minimal Naimark dilation of a finite semispectral measure:
// the measure is realized as the compression V* E(.) V of a projection-valued
// measure E on an enlarged space, with the enlarged space exactly spanned by
// the effect ranges.

#pragma once

#include "ovm/hermitian.hpp"
#include "ovm/povm.hpp"

#include <vector>

namespace ovm {

struct DilationBlock {
    double lambda = 0.0;
    HermitianMatrix projection;  // orthogonal projection on the enlarged space
};

/// Minimal dilation data.
///
/// The enlarged space is the ordered direct sum of the effect ranges, so
/// big_dim = sum of effect ranks and every field below is a concrete matrix
/// in that fixed basis:
///   - embedding: the isometry V (big_dim x small_dim), V*V = I,
///   - blocks: mutually orthogonal projections summing to the identity,
///     with V* blocks[i].projection V = effect_i,
///   - S: sum_i lambda_i * projection_i,
///   - P: V V*, the projection of the enlarged space onto the embedded
///     original space.
struct NaimarkDilation {
    int small_dim = 0;
    int big_dim = 0;
    Matrix embedding;
    std::vector<DilationBlock> blocks;
    HermitianMatrix S;
    HermitianMatrix P;
};

// Construct the minimal dilation of a normalized measure. Blocks are ordered
// by ascending support point; within a block, eigenpairs of the effect with
// eigenvalue > 1e-10 * (1 + ||effect||_2) enter in ascending order, which
// makes the output deterministic.
NaimarkDilation dilate_minimal(const FiniteOVM& f);

// The measure (lambda_i, V* projection_i V); round-trips dilate_minimal.
FiniteOVM compress(const NaimarkDilation& d);

// V* S^k V, the k-th moment computed through the dilation.
HermitianMatrix moment_via_dilation(const NaimarkDilation& d, int k);

// True iff P commutes with every block projection, i.e. the compressed
// measure is spectral. Threshold: tol * (1 + big_dim) on each commutator's
// Frobenius norm.
bool p_commutes(const NaimarkDilation& d, double tol = 1e-8);

}  // namespace ovm
