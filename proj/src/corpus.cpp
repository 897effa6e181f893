#include "ovm/corpus.hpp"

#include <cmath>
#include <stdexcept>

namespace ovm::corpus {

namespace {

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double kEffectRidge = 0.1;
constexpr double kSupportSeparation = 0.15;
constexpr double kSupportMinAbs = 0.4;

}  // namespace

std::uint64_t Rng::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
}

double Rng::uniform() {
    // 53 mantissa bits -> [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix(seed ^ mix(index + 0x632be59bd9b4e019ULL));
}

Matrix random_complex(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return m;
}

HermitianMatrix random_hermitian(Rng& rng, int dim) {
    return HermitianMatrix(random_complex(rng, dim, dim));
}

HermitianMatrix random_psd(Rng& rng, int dim, double ridge) {
    const Matrix y = random_complex(rng, dim, dim);
    return HermitianMatrix(y * y.adjoint() + ridge * Matrix::Identity(dim, dim));
}

HermitianMatrix random_projection(Rng& rng, int dim, int rank) {
    if (rank < 0 || rank > dim)
        throw std::invalid_argument("random_projection: rank must be in [0, dim]");
    const SpectralDecomposition sd = eig(random_hermitian(rng, dim));
    const Matrix basis = sd.eigenvectors.leftCols(rank);
    return HermitianMatrix(basis * basis.adjoint());
}

std::vector<double> random_support(Rng& rng, int count, double lo, double hi,
                                   double min_separation, double min_abs) {
    if (count < 1) throw std::invalid_argument("random_support: count must be positive");
    if (hi - lo < min_separation * (count - 1))
        throw std::invalid_argument("random_support: range too small for the separation");
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(count));
    int attempts = 0;
    while (static_cast<int>(points.size()) < count) {
        if (++attempts > 100000)
            throw std::runtime_error("random_support: failed to place separated points");
        const double candidate = rng.uniform(lo, hi);
        bool ok = std::abs(candidate) >= min_abs;
        for (double existing : points) {
            if (std::abs(candidate - existing) < min_separation) {
                ok = false;
                break;
            }
        }
        if (ok) points.push_back(candidate);
    }
    return points;
}

FiniteOVM random_povm(Rng& rng, int dim, int atoms, Interval support) {
    if (atoms < 1) throw std::invalid_argument("random_povm: need at least one atom");
    std::vector<HermitianMatrix> parts;
    parts.reserve(static_cast<std::size_t>(atoms));
    HermitianMatrix sum = HermitianMatrix::Zero(dim);
    for (int i = 0; i < atoms; ++i) {
        parts.push_back(random_psd(rng, dim, kEffectRidge));
        sum = sum + parts.back();
    }
    // sum >= atoms * ridge * I, so the inverse square root is well-posed
    const HermitianMatrix scale = apply_function(
        sum, [](double t) { return 1.0 / std::sqrt(t); }, Interval{1e-9, Interval{}.hi});
    const std::vector<double> points =
        random_support(rng, atoms, support.lo, support.hi, kSupportSeparation, kSupportMinAbs);
    std::vector<Atom> result;
    result.reserve(parts.size());
    for (int i = 0; i < atoms; ++i) {
        result.push_back(
            {points[static_cast<std::size_t>(i)],
             HermitianMatrix(scale.mat() * parts[static_cast<std::size_t>(i)].mat() *
                             scale.mat())});
    }
    return FiniteOVM(dim, std::move(result));
}

FiniteOVM random_spectral(Rng& rng, int dim, int atoms, Interval support) {
    if (atoms < 1 || atoms > dim)
        throw std::invalid_argument("random_spectral: atoms must be in [1, dim]");
    const SpectralDecomposition sd = eig(random_hermitian(rng, dim));
    // split dim eigendirections into `atoms` nonempty groups
    std::vector<int> sizes(static_cast<std::size_t>(atoms), 1);
    for (int extra = 0; extra < dim - atoms; ++extra)
        sizes[static_cast<std::size_t>(rng.uniform_int(0, atoms - 1))] += 1;
    const std::vector<double> points =
        random_support(rng, atoms, support.lo, support.hi, kSupportSeparation, kSupportMinAbs);
    std::vector<Atom> result;
    int offset = 0;
    for (int g = 0; g < atoms; ++g) {
        const int size = sizes[static_cast<std::size_t>(g)];
        const Matrix basis = sd.eigenvectors.middleCols(offset, size);
        result.push_back({points[static_cast<std::size_t>(g)],
                          HermitianMatrix(basis * basis.adjoint())});
        offset += size;
    }
    return FiniteOVM(dim, std::move(result));
}

}  // namespace ovm::corpus
