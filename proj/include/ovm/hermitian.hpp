// hermitian.hpp — dense complex Hermitian matrices: spectral decomposition,
// functional calculus, and the tolerance-based predicates the rest of the
// library is built on.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <limits>
#include <string>

namespace ovm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Default relative Frobenius tolerance treated as "equality". All predicates
// take an explicit tol so callers can tighten or loosen it.
inline constexpr double kDefaultTol = 1e-10;

// Closed real interval; endpoints may be infinite.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    static Interval real_line() { return {}; }
    static Interval nonnegative() { return {0.0, std::numeric_limits<double>::infinity()}; }

    bool contains(double x) const { return lo <= x && x <= hi; }
    double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
};

/// Complex square matrix with Hermitian symmetry.
///
/// Construction symmetrizes A <- (A + A*)/2 instead of rejecting slightly
/// asymmetric input: products like V*XV pick up asymmetry at machine epsilon
/// and must stay representable. Values are immutable after construction and
/// safe to share across threads.
class HermitianMatrix {
public:
    HermitianMatrix() = default;                  // empty (dim 0)
    explicit HermitianMatrix(const Matrix& a);

    static HermitianMatrix Zero(int dim);
    static HermitianMatrix Identity(int dim);
    static HermitianMatrix FromDiagonal(const RealVector& diag);
    static HermitianMatrix Scalar(double value);  // 1x1

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& mat() const { return m_; }
    Complex operator()(int row, int col) const { return m_(row, col); }

    double frobenius_norm() const { return m_.norm(); }

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

private:
    Matrix m_;
};

/// Eigensystem of a Hermitian matrix: eigenvalues ascending, eigenvector
/// columns unitary. Output is deterministic for identical input; each
/// eigenvector's phase is fixed by making its largest-modulus component
/// real and positive.
struct SpectralDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const {
        return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
    }
};

SpectralDecomposition eig(const HermitianMatrix& a);

using ScalarFunction = std::function<double(double)>;

/// Functional calculus: U diag(f(mu_i)) U*. Every eigenvalue must lie in
/// `domain` up to a slack of 1e-10 * (1 + spectral radius); eigenvalues
/// within the slack are clamped to the boundary, anything farther out raises
/// std::domain_error naming the offending eigenvalue.
HermitianMatrix apply_function(const HermitianMatrix& a, const ScalarFunction& f,
                               Interval domain);

// A^k by repeated multiplication, k >= 0 (k = 0 gives the identity).
HermitianMatrix matrix_power(const HermitianMatrix& a, int k);

// max |eigenvalue|
double operator_norm(const HermitianMatrix& a);

// min eigenvalue >= -tol * (1 + ||A||_2)
bool is_psd(const HermitianMatrix& a, double tol = kDefaultTol);

// ||A^2 - A||_F <= tol * (1 + ||A||_F)
bool is_projection(const HermitianMatrix& a, double tol = kDefaultTol);

// ||A - B||_F <= tol * (1 + max(||A||_F, ||B||_F)); throws on dimension mismatch
bool approx_eq(const HermitianMatrix& a, const HermitianMatrix& b, double tol = kDefaultTol);

// sign(t) * |t|^{1/p} for odd p; the inverse of t -> t^p on the whole line
ScalarFunction real_odd_root(int p);

}  // namespace ovm
