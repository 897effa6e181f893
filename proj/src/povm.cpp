#include "ovm/povm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ovm {

namespace {

constexpr double kDropNorm = 1e-14;
constexpr double kMergeTol = 1e-12;

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

void require_normalized(const FiniteOVM& f, const char* op) {
    if (!f.normalized()) {
        throw std::invalid_argument(std::string(op) +
                                    ": measure is not semispectral (effects do not sum to the "
                                    "identity)");
    }
}

}  // namespace

FiniteOVM::FiniteOVM(int dim, std::vector<Atom> atoms) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("FiniteOVM: dim must be positive");
    for (const Atom& atom : atoms) {
        if (atom.effect.dim() != dim) {
            throw std::invalid_argument("FiniteOVM: effect at lambda=" +
                                        std::to_string(atom.lambda) + " has dimension " +
                                        std::to_string(atom.effect.dim()) + ", expected " +
                                        std::to_string(dim));
        }
        if (!std::isfinite(atom.lambda))
            throw std::invalid_argument("FiniteOVM: support point is not finite");
    }

    std::erase_if(atoms, [](const Atom& a) { return a.effect.frobenius_norm() < kDropNorm; });
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.lambda < b.lambda; });

    double max_abs = 0.0;
    for (const Atom& a : atoms) max_abs = std::max(max_abs, std::abs(a.lambda));
    const double merge_radius = kMergeTol * (1.0 + max_abs);

    for (const Atom& atom : atoms) {
        if (!atoms_.empty() && atom.lambda - atoms_.back().lambda <= merge_radius) {
            atoms_.back().effect = atoms_.back().effect + atom.effect;
        } else {
            atoms_.push_back(atom);
        }
    }

    for (const Atom& atom : atoms_) {
        if (!is_psd(atom.effect, 1e-10)) {
            const SpectralDecomposition sd = eig(atom.effect);
            std::ostringstream msg;
            msg << "FiniteOVM: effect at lambda=" << atom.lambda
                << " is not positive semidefinite (min eigenvalue " << sd.eigenvalues.minCoeff()
                << ")";
            throw std::invalid_argument(msg.str());
        }
    }

    normalized_ = approx_eq(total(), HermitianMatrix::Identity(dim_), 1e-10);
}

HermitianMatrix FiniteOVM::total() const {
    HermitianMatrix sum = HermitianMatrix::Zero(dim_);
    for (const Atom& atom : atoms_) sum = sum + atom.effect;
    return sum;
}

HermitianMatrix FiniteOVM::measure_of(std::span<const Interval> sets) const {
    HermitianMatrix sum = HermitianMatrix::Zero(dim_);
    for (const Atom& atom : atoms_) {
        for (const Interval& set : sets) {
            if (set.contains(atom.lambda)) {
                sum = sum + atom.effect;
                break;
            }
        }
    }
    return sum;
}

HermitianMatrix moment(const FiniteOVM& f, int k) {
    require_normalized(f, "moment");
    if (k < 0) throw std::invalid_argument("moment: k must be nonnegative");
    if (k == 0) return HermitianMatrix::Identity(f.dim());
    Matrix sum = Matrix::Zero(f.dim(), f.dim());
    for (const Atom& atom : f.atoms()) sum += pow_int(atom.lambda, k) * atom.effect.mat();
    return HermitianMatrix(sum);
}

HermitianMatrix moment_real(const FiniteOVM& f, double r) {
    require_normalized(f, "moment_real");
    if (r < 0.0 || !std::isfinite(r))
        throw std::invalid_argument("moment_real: exponent must be a finite nonnegative real");
    Matrix sum = Matrix::Zero(f.dim(), f.dim());
    for (const Atom& atom : f.atoms()) {
        if (atom.lambda < 0.0) {
            throw std::domain_error("moment_real: support point " + std::to_string(atom.lambda) +
                                    " is negative; the measure must be supported in [0, inf)");
        }
        const double weight = (atom.lambda == 0.0 && r == 0.0) ? 1.0 : std::pow(atom.lambda, r);
        sum += weight * atom.effect.mat();
    }
    return HermitianMatrix(sum);
}

HermitianMatrix variance(const FiniteOVM& f) {
    const HermitianMatrix first = moment(f, 1);
    return moment(f, 2) - matrix_power(first, 2);
}

bool is_spectral(const FiniteOVM& f, double tol) {
    require_normalized(f, "is_spectral");
    for (const Atom& atom : f.atoms()) {
        if (!is_projection(atom.effect, tol)) return false;
    }
    const auto& atoms = f.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            const Matrix product = atoms[i].effect.mat() * atoms[j].effect.mat();
            const double scale =
                1.0 + atoms[i].effect.frobenius_norm() * atoms[j].effect.frobenius_norm();
            if (product.norm() > tol * scale) return false;
        }
    }
    return true;
}

HermitianMatrix hankel(const FiniteOVM& f, int n) {
    require_normalized(f, "hankel");
    if (n < 0) throw std::invalid_argument("hankel: n must be nonnegative");
    const int d = f.dim();
    std::vector<HermitianMatrix> moments;
    moments.reserve(2 * n + 1);
    for (int k = 0; k <= 2 * n; ++k) moments.push_back(moment(f, k));
    Matrix h = Matrix::Zero((n + 1) * d, (n + 1) * d);
    for (int j = 0; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) {
            h.block(j * d, k * d, d, d) = moments[static_cast<std::size_t>(j + k)].mat();
        }
    }
    return HermitianMatrix(h);
}

FiniteOVM pushforward(const FiniteOVM& f, const SupportMap& omega) {
    require_normalized(f, "pushforward");
    std::vector<Atom> mapped;
    mapped.reserve(f.atoms().size());
    for (const Atom& atom : f.atoms()) {
        const double image = omega(atom.lambda);
        if (!std::isfinite(image)) {
            throw std::domain_error("pushforward: map sends support point " +
                                    std::to_string(atom.lambda) + " to a non-finite value");
        }
        mapped.push_back({image, atom.effect});
    }
    return FiniteOVM(f.dim(), std::move(mapped));
}

FiniteOVM rescale(const FiniteOVM& f, double tau) {
    if (tau == 0.0) throw std::invalid_argument("rescale: tau must be nonzero");
    return pushforward(f, [tau](double x) { return tau * x; });
}

}  // namespace ovm
