#include "ovm/dilation.hpp"

#include <cmath>
#include <stdexcept>

namespace ovm {

NaimarkDilation dilate_minimal(const FiniteOVM& f) {
    if (!f.normalized())
        throw std::invalid_argument("dilate_minimal: measure is not semispectral");

    struct BlockData {
        double lambda;
        RealVector kept_values;  // eigenvalues > rank_tol, ascending
        Matrix kept_vectors;
    };
    std::vector<BlockData> data;
    int big_dim = 0;
    for (const Atom& atom : f.atoms()) {
        const SpectralDecomposition sd = eig(atom.effect);
        const double norm2 = sd.eigenvalues.size() > 0 ? sd.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
        const double rank_tol = 1e-10 * (1.0 + norm2);
        Eigen::Index first = 0;
        while (first < sd.eigenvalues.size() && sd.eigenvalues(first) <= rank_tol) ++first;
        const Eigen::Index rank = sd.eigenvalues.size() - first;
        if (rank == 0) continue;  // numerically zero effect carries no component
        data.push_back({atom.lambda, sd.eigenvalues.tail(rank),
                        sd.eigenvectors.rightCols(rank)});
        big_dim += static_cast<int>(rank);
    }

    NaimarkDilation result;
    result.small_dim = f.dim();
    result.big_dim = big_dim;
    result.embedding = Matrix::Zero(big_dim, f.dim());
    RealVector s_diag = RealVector::Zero(big_dim);

    int offset = 0;
    for (const BlockData& block : data) {
        const int rank = static_cast<int>(block.kept_values.size());
        for (int j = 0; j < rank; ++j) {
            result.embedding.row(offset + j) =
                std::sqrt(block.kept_values(j)) * block.kept_vectors.col(j).adjoint();
            s_diag(offset + j) = block.lambda;
        }
        Matrix projection = Matrix::Zero(big_dim, big_dim);
        projection.block(offset, offset, rank, rank) = Matrix::Identity(rank, rank);
        result.blocks.push_back({block.lambda, HermitianMatrix(projection)});
        offset += rank;
    }

    result.S = HermitianMatrix::FromDiagonal(s_diag);
    result.P = HermitianMatrix(result.embedding * result.embedding.adjoint());
    return result;
}

FiniteOVM compress(const NaimarkDilation& d) {
    std::vector<Atom> atoms;
    atoms.reserve(d.blocks.size());
    for (const DilationBlock& block : d.blocks) {
        atoms.push_back({block.lambda,
                         HermitianMatrix(d.embedding.adjoint() * block.projection.mat() *
                                         d.embedding)});
    }
    return FiniteOVM(d.small_dim, std::move(atoms));
}

HermitianMatrix moment_via_dilation(const NaimarkDilation& d, int k) {
    const HermitianMatrix sk = matrix_power(d.S, k);
    return HermitianMatrix(d.embedding.adjoint() * sk.mat() * d.embedding);
}

bool p_commutes(const NaimarkDilation& d, double tol) {
    if (tol < 0.0) throw std::invalid_argument("p_commutes: tol must be nonnegative");
    const double bound = tol * (1.0 + d.big_dim);
    for (const DilationBlock& block : d.blocks) {
        const Matrix commutator =
            d.P.mat() * block.projection.mat() - block.projection.mat() * d.P.mat();
        if (commutator.norm() > bound) return false;
    }
    return true;
}

}  // namespace ovm
