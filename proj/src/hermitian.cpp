#include "ovm/hermitian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ovm {

namespace {

std::string dims_str(const HermitianMatrix& a) {
    return std::to_string(a.dim()) + "x" + std::to_string(a.dim());
}

}  // namespace

HermitianMatrix::HermitianMatrix(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("HermitianMatrix: input must be square, got " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    m_ = 0.5 * (a + a.adjoint().eval());
}

HermitianMatrix HermitianMatrix::Zero(int dim) {
    if (dim < 0) throw std::invalid_argument("HermitianMatrix::Zero: negative dimension");
    return HermitianMatrix(Matrix::Zero(dim, dim));
}

HermitianMatrix HermitianMatrix::Identity(int dim) {
    if (dim < 0) throw std::invalid_argument("HermitianMatrix::Identity: negative dimension");
    return HermitianMatrix(Matrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::FromDiagonal(const RealVector& diag) {
    Matrix m = Matrix::Zero(diag.size(), diag.size());
    for (Eigen::Index i = 0; i < diag.size(); ++i) m(i, i) = diag(i);
    return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::Scalar(double value) {
    Matrix m(1, 1);
    m(0, 0) = value;
    return HermitianMatrix(m);
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("HermitianMatrix operator+: dimension mismatch");
    return HermitianMatrix(a.m_ + b.m_);
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("HermitianMatrix operator-: dimension mismatch");
    return HermitianMatrix(a.m_ - b.m_);
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix(s * a.m_);
}

SpectralDecomposition eig(const HermitianMatrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.mat());
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eig: eigensolver did not converge within its iteration cap (dim " << dims_str(a)
            << ", Frobenius norm " << a.frobenius_norm() << ")";
        throw std::runtime_error(msg.str());
    }
    SpectralDecomposition sd{solver.eigenvalues(), solver.eigenvectors()};
    // Fix each eigenvector's phase: largest-modulus component real-positive.
    for (Eigen::Index j = 0; j < sd.eigenvectors.cols(); ++j) {
        Eigen::Index pivot = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < sd.eigenvectors.rows(); ++i) {
            const double mag = std::abs(sd.eigenvectors(i, j));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (best > 0.0) {
            const Complex phase = std::conj(sd.eigenvectors(pivot, j)) / best;
            sd.eigenvectors.col(j) *= phase;
        }
    }
    return sd;
}

HermitianMatrix apply_function(const HermitianMatrix& a, const ScalarFunction& f,
                               Interval domain) {
    const SpectralDecomposition sd = eig(a);
    const double radius = sd.eigenvalues.size() > 0 ? sd.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    const double slack = 1e-10 * (1.0 + radius);
    RealVector values(sd.eigenvalues.size());
    for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i) {
        const double mu = sd.eigenvalues(i);
        if (mu < domain.lo - slack || mu > domain.hi + slack) {
            std::ostringstream msg;
            msg << "apply_function: eigenvalue " << mu << " lies outside the domain ["
                << domain.lo << ", " << domain.hi << "] beyond slack " << slack;
            throw std::domain_error(msg.str());
        }
        values(i) = f(domain.clamp(mu));
    }
    return HermitianMatrix(sd.eigenvectors * values.asDiagonal() * sd.eigenvectors.adjoint());
}

HermitianMatrix matrix_power(const HermitianMatrix& a, int k) {
    if (k < 0) throw std::invalid_argument("matrix_power: exponent must be nonnegative");
    Matrix result = Matrix::Identity(a.dim(), a.dim());
    for (int i = 0; i < k; ++i) result = (result * a.mat()).eval();
    return HermitianMatrix(result);
}

double operator_norm(const HermitianMatrix& a) {
    if (a.dim() == 0) return 0.0;
    const SpectralDecomposition sd = eig(a);
    return sd.eigenvalues.cwiseAbs().maxCoeff();
}

bool is_psd(const HermitianMatrix& a, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_psd: tol must be nonnegative");
    if (a.dim() == 0) return true;
    const SpectralDecomposition sd = eig(a);
    const double norm2 = sd.eigenvalues.cwiseAbs().maxCoeff();
    return sd.eigenvalues.minCoeff() >= -tol * (1.0 + norm2);
}

bool is_projection(const HermitianMatrix& a, double tol) {
    if (tol < 0.0) throw std::invalid_argument("is_projection: tol must be nonnegative");
    const Matrix defect = a.mat() * a.mat() - a.mat();
    return defect.norm() <= tol * (1.0 + a.frobenius_norm());
}

bool approx_eq(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("approx_eq: dimension mismatch (" + dims_str(a) + " vs " +
                                    dims_str(b) + ")");
    const double scale = 1.0 + std::max(a.frobenius_norm(), b.frobenius_norm());
    return (a.mat() - b.mat()).norm() <= tol * scale;
}

ScalarFunction real_odd_root(int p) {
    if (p < 1 || p % 2 == 0)
        throw std::invalid_argument("real_odd_root: p must be a positive odd integer");
    return [p](double t) {
        if (t == 0.0) return 0.0;
        return std::copysign(std::pow(std::abs(t), 1.0 / p), t);
    };
}

}  // namespace ovm
