// verify.hpp — seeded property suites over random corpora: the inequality
// gaps, Hankel/variance positivity, the two-moment theorem stress searches,
// the counterexample grid, and the dilation equivalences. Shared by the CLI
// `verify` command and the acceptance harness.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ovm::verify {

struct SuiteOptions {
    int trials = 500;
    std::uint64_t seed = 42;
    int dim_max = 4;
    double tol = 1e-9;
};

struct SuiteResult {
    std::string suite;
    bool passed = true;
    long checks = 0;
    // named summary statistics, e.g. worst PSD deficit or smallest residual
    std::vector<std::pair<std::string, double>> stats;
    // human-readable dumps of failing instances (empty when passed)
    std::vector<std::string> failures;

    void fail(std::string message);
    double stat(const std::string& name) const;
};

// Kadison gap: PSD on random compressions, equality iff commutation, and the
// direct route agrees with the algebraic residual form.
SuiteResult run_kadison(const SuiteOptions& options);

// Hansen gap: PSD for random PSD/contraction/exponent triples; equality-case
// agreement for proper projections.
SuiteResult run_hansen(const SuiteOptions& options);

// Lieb–Ruskai bound along eps = 1e-2 .. 1e-12: PSD at every eps, convergence
// at the tail, agreement with the pseudoinverse oracle.
SuiteResult run_lieb_ruskai(const SuiteOptions& options);

// Hankel moment matrices PSD up to n = 4 and the intrinsic noise operator
// PSD, on one random corpus.
SuiteResult run_hankel(const SuiteOptions& options);

// Two-moment stress: for every forcing pair (p odd < q even, both <= 8),
// with T recovered from the p-th moment of a random non-spectral measure,
// the q-th moment never matches; plus the positive-case variant with
// fractional exponent pairs (1/2, 2) and (1, 3) on nonnegative supports.
SuiteResult run_theorem(const SuiteOptions& options);

// Counterexample grid: every (p, q) outside the forcing set with
// p <= q <= 8 and tau in {1, -1, 2, 0.5} solves, satisfies the moment
// system, and yields a non-spectral measure whose dilation matrix has the
// required compressed powers and a non-commuting projection.
SuiteResult run_counterexample_grid(const SuiteOptions& options);

// Dilation equivalences on a mixed corpus: spectrality iff the dilation
// projection commutes, compression moments equal direct moments, and the
// enlarged dimension equals the sum of effect ranks.
SuiteResult run_dilation(const SuiteOptions& options);

// Scalar grid search confirming that no two-atom weight system is solvable
// within 1e-6 for p odd < q even (both <= 8) with distinct support points.
SuiteResult run_holder_obstruction(const SuiteOptions& options);

// Names accepted by run_suites / the CLI --suite flag.
const std::vector<std::string>& suite_names();

// `which` is a suite name or "all".
std::vector<SuiteResult> run_suites(const std::string& which, const SuiteOptions& options);

}  // namespace ovm::verify
