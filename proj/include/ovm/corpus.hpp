// corpus.hpp — seeded random instance generation for property suites and
// test corpora. Every draw derives deterministically from a 64-bit seed, so
// corpora are reproducible entry by entry; independent trials use
// derive_seed(seed, trial_index).

#pragma once

#include "ovm/hermitian.hpp"
#include "ovm/povm.hpp"

#include <cstdint>
#include <vector>

namespace ovm::corpus {

// splitmix64 stream; platform-independent, unlike <random> distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);        // inclusive bounds

private:
    std::uint64_t state_;
};

// Independent stream for (seed, index) so trials can run in any order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

Matrix random_complex(Rng& rng, int rows, int cols);        // entries in [-1,1] + i[-1,1]
HermitianMatrix random_hermitian(Rng& rng, int dim);        // Hermitian part of the above
HermitianMatrix random_psd(Rng& rng, int dim, double ridge = 0.0);  // Y Y* + ridge I
HermitianMatrix random_projection(Rng& rng, int dim, int rank);

// `count` points in [lo, hi] with pairwise distance >= min_separation and
// magnitude >= min_abs.
std::vector<double> random_support(Rng& rng, int count, double lo, double hi,
                                   double min_separation, double min_abs = 0.0);

/// Normalized random POVM, the reproducible corpus recipe:
/// draw G_i = Y_i Y_i* + 0.1 I, set Sum = sum_i G_i, and take
/// effects = Sum^{-1/2} G_i Sum^{-1/2}; support points are drawn in
/// `support` with magnitude >= 0.4 and pairwise separation >= 0.15. The
/// ridge keeps every effect bounded below and the support floors keep the
/// instances non-spectral by a margin that stays visible through high
/// moment powers.
FiniteOVM random_povm(Rng& rng, int dim, int atoms, Interval support = {-2.0, 2.0});

/// Random spectral measure: the eigenprojections of a random Hermitian
/// matrix grouped into `atoms` nonempty blocks (atoms <= dim), attached to
/// well-separated support points.
FiniteOVM random_spectral(Rng& rng, int dim, int atoms, Interval support = {-2.0, 2.0});

}  // namespace ovm::corpus
