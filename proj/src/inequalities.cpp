#include "ovm/inequalities.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ovm {

namespace {

constexpr double kContractionSlack = 1e-12;

void require_eps_list(std::span<const double> eps_list) {
    if (eps_list.empty()) throw std::invalid_argument("lieb_ruskai: eps list must be nonempty");
    double previous = std::numeric_limits<double>::infinity();
    for (double eps : eps_list) {
        if (!(eps > 0.0)) throw std::invalid_argument("lieb_ruskai: eps values must be positive");
        if (!(eps < previous))
            throw std::invalid_argument("lieb_ruskai: eps list must be strictly decreasing");
        previous = eps;
    }
}

}  // namespace

CompressionMap::CompressionMap(const HermitianMatrix& projection, double tol) {
    if (!is_projection(projection, tol))
        throw std::invalid_argument("CompressionMap: input is not an orthogonal projection");
    const SpectralDecomposition sd = eig(projection);
    // projection eigenvalues sit at 0 and 1; count the range directions
    Eigen::Index first = 0;
    while (first < sd.eigenvalues.size() && sd.eigenvalues(first) < 0.5) ++first;
    projection_ = projection;
    basis_ = sd.eigenvectors.rightCols(sd.eigenvalues.size() - first);
}

CompressionMap CompressionMap::from_isometry(const Matrix& isometry, double tol) {
    const Matrix gram = isometry.adjoint() * isometry;
    if ((gram - Matrix::Identity(gram.rows(), gram.cols())).norm() >
        tol * (1.0 + std::sqrt(static_cast<double>(gram.rows()))))
        throw std::invalid_argument("CompressionMap::from_isometry: columns are not orthonormal");
    HermitianMatrix projection(isometry * isometry.adjoint());
    return CompressionMap(std::move(projection), isometry);
}

HermitianMatrix CompressionMap::apply(const HermitianMatrix& x) const {
    return HermitianMatrix(apply_raw(x.mat()));
}

Matrix CompressionMap::apply_raw(const Matrix& x) const {
    if (x.rows() != basis_.rows() || x.cols() != basis_.rows())
        throw std::invalid_argument("CompressionMap: operand dimension mismatch");
    return basis_.adjoint() * x * basis_;
}

HermitianMatrix kadison_gap(const CompressionMap& c, const HermitianMatrix& a) {
    const HermitianMatrix compressed = c.apply(a);
    return c.apply(matrix_power(a, 2)) - matrix_power(compressed, 2);
}

HermitianMatrix kadison_gap_residual_form(const CompressionMap& c, const HermitianMatrix& a) {
    const Matrix& p = c.projection().mat();
    const Matrix ap = a.mat() * p;
    const Matrix identity = Matrix::Identity(p.rows(), p.cols());
    return HermitianMatrix(c.apply_raw(ap.adjoint() * (identity - p) * ap));
}

HermitianMatrix hansen_gap(const HermitianMatrix& a, const HermitianMatrix& c, double s) {
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("hansen_gap: exponent must lie in (0, 1)");
    if (a.dim() != c.dim()) throw std::invalid_argument("hansen_gap: dimension mismatch");
    if (operator_norm(c) > 1.0 + kContractionSlack)
        throw std::invalid_argument("hansen_gap: C is not a contraction");
    const ScalarFunction f = [s](double t) { return std::pow(t, s); };
    const HermitianMatrix conjugated(c.mat() * a.mat() * c.mat());
    const HermitianMatrix lhs = apply_function(conjugated, f, Interval::nonnegative());
    const HermitianMatrix fa = apply_function(a, f, Interval::nonnegative());
    return lhs - HermitianMatrix(c.mat() * fa.mat() * c.mat());
}

std::pair<bool, bool> hansen_equality_case(const HermitianMatrix& a, const HermitianMatrix& p,
                                           double s, double tol) {
    if (!is_projection(p, kDefaultTol))
        throw std::invalid_argument("hansen_equality_case: P is not an orthogonal projection");
    if (approx_eq(p, HermitianMatrix::Identity(p.dim()), kDefaultTol))
        throw std::invalid_argument("hansen_equality_case: P must be a proper projection");
    const HermitianMatrix gap = hansen_gap(a, p, s);
    // Both sides of the inequality vanish identically on ker P (f(0) = 0), so
    // the informative part of the gap lives on ran P. Restricting avoids the
    // t^s amplification of roundoff in the exactly-zero eigenvalues of PAP.
    const CompressionMap range(p);
    const HermitianMatrix restricted = range.apply(gap);
    const double scale = 1.0 + a.frobenius_norm();
    const bool gap_zero = restricted.frobenius_norm() <= tol * scale;
    const bool commutes = (p.mat() * a.mat() - a.mat() * p.mat()).norm() <= tol * scale;
    return {gap_zero, commutes};
}

std::vector<HermitianMatrix> lieb_ruskai_path(const CompressionMap& c, const HermitianMatrix& a,
                                              const HermitianMatrix& b,
                                              std::span<const double> eps_list) {
    require_eps_list(eps_list);
    if (a.dim() != c.big_dim() || b.dim() != c.big_dim())
        throw std::invalid_argument("lieb_ruskai: operands must live on the big space");
    const HermitianMatrix head = c.apply(matrix_power(a, 2));
    const HermitianMatrix gram = c.apply(matrix_power(b, 2));
    const Matrix cross = c.apply_raw(a.mat() * b.mat());  // apply(A*B); adjoint is apply(B*A)
    std::vector<HermitianMatrix> path;
    path.reserve(eps_list.size());
    for (double eps : eps_list) {
        const HermitianMatrix resolvent = apply_function(
            gram, [eps](double t) { return 1.0 / (t + eps); }, Interval::nonnegative());
        path.emplace_back(head.mat() - cross * resolvent.mat() * cross.adjoint());
    }
    return path;
}

HermitianMatrix lieb_ruskai_gap(const CompressionMap& c, const HermitianMatrix& a,
                                const HermitianMatrix& b, std::span<const double> eps_list) {
    return lieb_ruskai_path(c, a, b, eps_list).back();
}

HermitianMatrix lieb_ruskai_gap_pinv(const CompressionMap& c, const HermitianMatrix& a,
                                     const HermitianMatrix& b, double rank_tol) {
    const HermitianMatrix head = c.apply(matrix_power(a, 2));
    const HermitianMatrix gram = c.apply(matrix_power(b, 2));
    const Matrix cross = c.apply_raw(a.mat() * b.mat());
    const double cutoff = rank_tol * (1.0 + operator_norm(gram));
    const HermitianMatrix pinv = apply_function(
        gram, [cutoff](double t) { return t > cutoff ? 1.0 / t : 0.0; },
        Interval::nonnegative());
    return HermitianMatrix(head.mat() - cross * pinv.mat() * cross.adjoint());
}

}  // namespace ovm
