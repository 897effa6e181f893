#include "ovm/counterexample.hpp"

#include "ovm/characterization.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace ovm {

namespace {

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// Bisection for strictly decreasing g with g(lo) > target > g(hi).
double bisect_decreasing(const std::function<double(double)>& g, double lo, double hi,
                         double target) {
    if (!(g(lo) > target) || !(g(hi) <= target))
        throw std::runtime_error("solve_params: bisection bracket does not straddle the target");
    for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double relative_defect(double lhs, double rhs) {
    return std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
}

}  // namespace

std::array<double, 3> system_residuals(const CounterexampleParams& params) {
    const double weights = std::abs(params.alpha + params.beta - 1.0);
    const auto equation = [&](int k) {
        const double lhs = params.alpha * pow_int(params.lambda1, k) +
                           params.beta * pow_int(params.lambda2, k);
        return relative_defect(lhs, pow_int(params.tau, k));
    };
    return {weights, equation(params.p), equation(params.q)};
}

CounterexampleParams solve_params(int p, int q, double tau, double lambda1) {
    if (p < 1 || q < 1) throw std::invalid_argument("solve_params: exponents must be positive");
    if (p > q) throw std::invalid_argument("solve_params: requires p <= q");
    if (tau == 0.0) throw std::invalid_argument("solve_params: tau must be nonzero");
    if (in_omega(p, q)) {
        throw std::invalid_argument(
            "solve_params: no counterexample exists for p odd < q even — matching moments at "
            "such a pair force the measure to be spectral");
    }

    CounterexampleParams params;
    params.p = p;
    params.q = q;
    params.tau = tau;

    if (p == q) {
        params.alpha = 0.5;
        params.beta = 0.5;
        params.lambda1 = 0.0;
        params.lambda2 = std::pow(2.0, 1.0 / p);
    } else if (p % 2 == 0 && q % 2 == 0) {
        params.alpha = 0.5;
        params.beta = 0.5;
        params.lambda1 = -1.0;
        params.lambda2 = 1.0;
    } else {
        if (!(lambda1 > 1.0))
            throw std::invalid_argument("solve_params: lambda1 must exceed 1");
        const double target =
            (1.0 - pow_int(lambda1, p)) / (1.0 - pow_int(lambda1, q));  // in (0, 1)
        double x = 0.0;
        if (p % 2 == 0) {
            // p even, q odd: (1 - x^p)/(1 + x^q) sweeps (0,1) on (0,1)
            const auto phi = [p, q](double v) {
                return (1.0 - pow_int(v, p)) / (1.0 + pow_int(v, q));
            };
            x = bisect_decreasing(phi, 0.0, 1.0, target);
        } else {
            // p, q both odd: (1 + x^p)/(1 + x^q) sweeps (0,1) on (1,inf)
            const auto psi = [p, q](double v) {
                return (1.0 + pow_int(v, p)) / (1.0 + pow_int(v, q));
            };
            double hi = 2.0;
            while (psi(hi) > target) {
                hi *= 2.0;
                if (hi > 0x1p60) throw std::runtime_error("solve_params: bracket expansion failed");
            }
            x = bisect_decreasing(psi, 1.0, hi, target);
        }
        params.lambda1 = lambda1;
        params.lambda2 = -x;
        const double a = 1.0;
        const double b = (pow_int(lambda1, p) - 1.0) / (1.0 - pow_int(params.lambda2, p));
        params.alpha = a / (a + b);
        params.beta = b / (a + b);
    }

    params.lambda1 *= tau;
    params.lambda2 *= tau;

    const std::array<double, 3> residuals = system_residuals(params);
    for (double r : residuals) {
        if (!(r <= 1e-10))
            throw std::runtime_error("solve_params: solved parameters fail the moment system "
                                     "(residual " +
                                     std::to_string(r) + ")");
    }
    return params;
}

std::pair<HermitianMatrix, FiniteOVM> build_povm(const CounterexampleParams& params, int dim) {
    if (dim < 1) throw std::invalid_argument("build_povm: dim must be positive");
    const HermitianMatrix identity = HermitianMatrix::Identity(dim);
    const HermitianMatrix t = params.tau * identity;
    FiniteOVM f(dim, {{params.lambda1, params.alpha * identity},
                      {params.lambda2, params.beta * identity}});
    return {t, std::move(f)};
}

HermitianMatrix build_dilation_matrix(const CounterexampleParams& params) {
    const double off =
        std::sqrt(params.alpha * params.beta) * (params.lambda1 - params.lambda2);
    Matrix s(2, 2);
    s << params.alpha * params.lambda1 + params.beta * params.lambda2, off, off,
        params.beta * params.lambda1 + params.alpha * params.lambda2;
    return HermitianMatrix(s);
}

double compressed_power(const CounterexampleParams& params, int n) {
    if (n < 0) throw std::invalid_argument("compressed_power: n must be nonnegative");
    return params.alpha * pow_int(params.lambda1, n) + params.beta * pow_int(params.lambda2, n);
}

FibonacciExample fibonacci_example() {
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    const double denom = 1.0 + phi * phi;
    Matrix s(2, 2);
    s << 0.0, 1.0, 1.0, 1.0;
    FiniteOVM f(1, {{1.0 - phi, HermitianMatrix::Scalar(phi * phi / denom)},
                    {phi, HermitianMatrix::Scalar(1.0 / denom)}});
    return {HermitianMatrix::Identity(1), HermitianMatrix(s), std::move(f)};
}

HermitianMatrix tensor_example(const HermitianMatrix& t, int n) {
    if (n < 1) throw std::invalid_argument("tensor_example: n must be positive");
    if (t.frobenius_norm() == 0.0)
        throw std::invalid_argument(
            "tensor_example: T must be nonzero, otherwise the compression is trivially spectral");
    const int d = t.dim();
    Matrix s = Matrix::Zero(2 * d, 2 * d);
    s.block(0, d, d, d) = t.mat();
    s.block(d, 0, d, d) = t.mat();
    s.block(d, d, d, d) = t.mat();
    return matrix_power(HermitianMatrix(s), n);
}

}  // namespace ovm
