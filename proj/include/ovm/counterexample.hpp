// counterexample.hpp — explicit counterexample synthesis: for every exponent
// pair outside the forcing set, solve the two-atom weight system and
// materialize a non-spectral measure whose p-th and q-th moments match a
// scalar operator, together with its explicit 2x2 dilation matrix.

#pragma once

#include "ovm/hermitian.hpp"
#include "ovm/povm.hpp"

#include <array>
#include <utility>

namespace ovm {

/// Parameters (p, q, tau, alpha, beta, lambda1, lambda2) with
/// alpha + beta = 1 and
///   alpha lambda1^p + beta lambda2^p = tau^p,
///   alpha lambda1^q + beta lambda2^q = tau^q.
struct CounterexampleParams {
    int p = 0;
    int q = 0;
    double tau = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

// Residuals of the defining system: |alpha+beta-1| and the two moment
// equations as relative defects. Used for verification transcripts.
std::array<double, 3> system_residuals(const CounterexampleParams& params);

/// Solve the weight system for (p, q) outside the forcing set, p <= q,
/// tau != 0. Solves at tau = 1 and rescales the support points afterwards.
/// Cases:
///   p = q:            alpha = beta = 1/2, lambda = {0, 2^(1/p)},
///   p, q both even:   alpha = beta = 1/2, lambda = {-1, 1},
///   p even, q odd:    lambda2 = -x with (1 - x^p)/(1 + x^q) bisected on (0,1),
///   p, q both odd:    lambda2 = -x with (1 + x^p)/(1 + x^q) bisected on (1,inf).
/// In the last two cases lambda1 (> 1, default 2) is a free parameter; the
/// default gives exact rational roots for the shipped fixtures. Conditioning
/// as lambda1 approaches 1 or infinity is unspecified. Bisection runs to a
/// bracket width of 1e-14 with a 200-iteration cap.
/// For p odd < q even the system has no solution and the call refuses:
/// matching moments at such a pair force the measure to be spectral.
CounterexampleParams solve_params(int p, int q, double tau, double lambda1 = 2.0);

// The scalar-operator instance in dimension `dim`: T = tau * I and the
// two-atom measure alpha at lambda1, beta at lambda2 (both effects multiples
// of the identity). Moments match T at k = p, q; the measure is not spectral.
std::pair<HermitianMatrix, FiniteOVM> build_povm(const CounterexampleParams& params, int dim);

// The explicit 2x2 selfadjoint dilation matrix
//   [ alpha l1 + beta l2          sqrt(alpha beta)(l1 - l2) ]
//   [ sqrt(alpha beta)(l1 - l2)   beta l1 + alpha l2        ]
// whose n-th power has (1,1) entry alpha l1^n + beta l2^n; it never commutes
// with diag(1, 0).
HermitianMatrix build_dilation_matrix(const CounterexampleParams& params);

// Closed form for the (1,1) entry of the n-th power, for cross-checking the
// matrix route: alpha lambda1^n + beta lambda2^n.
double compressed_power(const CounterexampleParams& params, int n);

/// The golden-ratio instance: T = 1, S = [[0,1],[1,1]] (powers carry the
/// Fibonacci numbers), and the two-atom measure it compresses to. Moments
/// match T only at k = 2, 3.
struct FibonacciExample {
    HermitianMatrix t;
    HermitianMatrix s;
    FiniteOVM f;
};
FibonacciExample fibonacci_example();

// n-th power of the block matrix [[0, T], [T, T]] for selfadjoint T != 0;
// the blocks are Fibonacci multiples of T^n, so the (1,1) block equals T^n
// exactly for n = 2, 3 and for no other n >= 1.
HermitianMatrix tensor_example(const HermitianMatrix& t, int n);

}  // namespace ovm
