#include "ovm/corpus.hpp"
#include "ovm/hermitian.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace ovm;

namespace {

HermitianMatrix diag2(double a, double b) {
    RealVector d(2);
    d << a, b;
    return HermitianMatrix::FromDiagonal(d);
}

const double kGolden = 0.5 * (1.0 + std::sqrt(5.0));

}  // namespace

TEST_CASE("construction symmetrizes the input") {
    Matrix raw(2, 2);
    raw << Complex(1.0, 0.0), Complex(2.0, 1.0), Complex(0.0, 0.0), Complex(3.0, 0.0);
    const HermitianMatrix a(raw);
    CHECK(a(0, 1) == Complex(1.0, 0.5));
    CHECK(a(1, 0) == Complex(1.0, -0.5));
    CHECK(a(0, 0).imag() == 0.0);

    CHECK_THROWS_AS(HermitianMatrix(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("eig on fixed instances") {
    SUBCASE("already diagonal") {
        const SpectralDecomposition sd = eig(diag2(3.0, 1.0));
        CHECK(sd.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(sd.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));
    }
    SUBCASE("golden ratio matrix") {
        Matrix m(2, 2);
        m << 0.0, 1.0, 1.0, 1.0;
        const SpectralDecomposition sd = eig(HermitianMatrix(m));
        CHECK(sd.eigenvalues(0) == doctest::Approx(1.0 - kGolden).epsilon(1e-14));
        CHECK(sd.eigenvalues(1) == doctest::Approx(kGolden).epsilon(1e-14));
    }
    SUBCASE("identity") {
        const SpectralDecomposition sd = eig(HermitianMatrix::Identity(5));
        for (int i = 0; i < 5; ++i) CHECK(sd.eigenvalues(i) == doctest::Approx(1.0));
        CHECK((sd.reconstruct() - Matrix::Identity(5, 5)).norm() < 1e-12);
    }
}

TEST_CASE("eig reconstruction, unitarity, order, determinism on random input") {
    for (int trial = 0; trial < 50; ++trial) {
        corpus::Rng rng(corpus::derive_seed(7, static_cast<std::uint64_t>(trial)));
        const int dim = rng.uniform_int(1, 8);
        const HermitianMatrix a = corpus::random_hermitian(rng, dim);
        const SpectralDecomposition sd = eig(a);

        const double radius = sd.eigenvalues.cwiseAbs().maxCoeff();
        CHECK((sd.reconstruct() - a.mat()).norm() <= 1e-10 * (1.0 + radius));
        CHECK((sd.eigenvectors.adjoint() * sd.eigenvectors - Matrix::Identity(dim, dim)).norm() <=
              1e-10);
        for (int i = 0; i + 1 < dim; ++i) CHECK(sd.eigenvalues(i) <= sd.eigenvalues(i + 1));

        const SpectralDecomposition again = eig(a);
        CHECK((sd.eigenvectors - again.eigenvectors).norm() == 0.0);
        CHECK((sd.eigenvalues - again.eigenvalues).norm() == 0.0);
    }
}

TEST_CASE("apply_function on fixed instances") {
    SUBCASE("square root") {
        const HermitianMatrix r = apply_function(
            diag2(4.0, 1.0), [](double t) { return std::sqrt(t); }, Interval::nonnegative());
        CHECK(approx_eq(r, diag2(2.0, 1.0), 1e-12));
    }
    SUBCASE("odd cube root crosses zero") {
        const HermitianMatrix r =
            apply_function(diag2(1.0, -8.0), real_odd_root(3), Interval::real_line());
        CHECK(approx_eq(r, diag2(1.0, -2.0), 1e-12));
    }
    SUBCASE("square of the golden matrix") {
        Matrix m(2, 2), expected(2, 2);
        m << 0.0, 1.0, 1.0, 1.0;
        expected << 1.0, 1.0, 1.0, 2.0;
        const HermitianMatrix r = apply_function(
            HermitianMatrix(m), [](double t) { return t * t; }, Interval::real_line());
        CHECK(approx_eq(r, HermitianMatrix(expected), 1e-12));
    }
    SUBCASE("domain violation reports the eigenvalue") {
        CHECK_THROWS_WITH_AS(
            apply_function(diag2(-1.0, 1.0), [](double t) { return std::sqrt(t); },
                           Interval::nonnegative()),
            doctest::Contains("-1"), std::domain_error);
    }
    SUBCASE("slightly out-of-domain eigenvalues clamp") {
        const HermitianMatrix r =
            apply_function(diag2(-1e-12, 4.0), [](double t) { return std::sqrt(t); },
                           Interval::nonnegative());
        CHECK(r(0, 0).real() == 0.0);
    }
}

TEST_CASE("is_psd") {
    CHECK(is_psd(HermitianMatrix::Identity(3), 1e-10));
    Matrix m(2, 2);
    m << 1.0, 2.0, 2.0, 1.0;  // eigenvalues 3 and -1
    CHECK_FALSE(is_psd(HermitianMatrix(m), 1e-10));
    CHECK(is_psd(diag2(0.0, 5.0), 1e-10));
    CHECK_THROWS_AS(is_psd(diag2(1.0, 1.0), -1.0), std::invalid_argument);
}

TEST_CASE("is_projection") {
    CHECK(is_projection(diag2(1.0, 0.0), 1e-10));
    CHECK_FALSE(is_projection(HermitianMatrix::Scalar(0.5), 1e-10));

    corpus::Rng rng(11);
    Matrix v = corpus::random_complex(rng, 4, 1);
    v.normalize();
    CHECK(is_projection(HermitianMatrix(v * v.adjoint()), 1e-10));
}

TEST_CASE("approx_eq") {
    const HermitianMatrix a = diag2(1.0, 1.0);
    CHECK(approx_eq(a, a, 0.0));
    CHECK(approx_eq(a, diag2(1.0, 1.0 + 5e-11), 1e-10));
    CHECK_FALSE(approx_eq(diag2(1.0, 0.0), diag2(0.0, 1.0), 1e-10));
    CHECK_THROWS_AS(approx_eq(a, HermitianMatrix::Identity(3)), std::invalid_argument);
}

TEST_CASE("functional calculus is multiplicative on polynomials") {
    const auto poly = [](const std::array<double, 5>& c) {
        return [c](double t) {
            double value = 0.0;
            for (int k = 4; k >= 0; --k) value = value * t + c[static_cast<std::size_t>(k)];
            return value;
        };
    };
    for (int trial = 0; trial < 25; ++trial) {
        corpus::Rng rng(corpus::derive_seed(13, static_cast<std::uint64_t>(trial)));
        const int dim = rng.uniform_int(1, 6);
        const HermitianMatrix a = corpus::random_hermitian(rng, dim);
        std::array<double, 5> cf{}, cg{};
        for (auto& c : cf) c = rng.uniform(-1.0, 1.0);
        for (auto& c : cg) c = rng.uniform(-1.0, 1.0);
        const auto f = poly(cf);
        const auto g = poly(cg);
        const HermitianMatrix product = apply_function(
            a, [&](double t) { return f(t) * g(t); }, Interval::real_line());
        const HermitianMatrix fa = apply_function(a, f, Interval::real_line());
        const HermitianMatrix ga = apply_function(a, g, Interval::real_line());
        CHECK((product.mat() - fa.mat() * ga.mat()).norm() <=
              1e-9 * (1.0 + product.frobenius_norm()));
    }
}

TEST_CASE("odd powers invert through the odd root") {
    // spectra are kept away from zero: the root's derivative diverges there
    // and would amplify roundoff in the powered matrix past any fixed bound
    for (int p : {1, 3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            corpus::Rng rng(corpus::derive_seed(100 + static_cast<std::uint64_t>(p),
                                                static_cast<std::uint64_t>(trial)));
            const int dim = rng.uniform_int(1, 6);
            const Matrix basis = eig(corpus::random_hermitian(rng, dim)).eigenvectors;
            RealVector spectrum(dim);
            for (int i = 0; i < dim; ++i)
                spectrum(i) = (rng.uniform_int(0, 1) ? 1.0 : -1.0) * rng.uniform(0.1, 2.0);
            const HermitianMatrix a(basis * spectrum.asDiagonal() * basis.adjoint());
            const HermitianMatrix power = matrix_power(a, p);
            const HermitianMatrix back =
                apply_function(power, real_odd_root(p), Interval::real_line());
            CHECK(approx_eq(back, a, 1e-8));
        }
    }
    CHECK_THROWS_AS(real_odd_root(2), std::invalid_argument);
    CHECK_THROWS_AS(real_odd_root(0), std::invalid_argument);
}

TEST_CASE("square root is operator monotone") {
    const ScalarFunction root = [](double t) { return std::sqrt(t); };
    for (int trial = 0; trial < 25; ++trial) {
        corpus::Rng rng(corpus::derive_seed(17, static_cast<std::uint64_t>(trial)));
        const int dim = rng.uniform_int(1, 6);
        const HermitianMatrix a = corpus::random_psd(rng, dim);
        const HermitianMatrix b = a + corpus::random_psd(rng, dim);
        const HermitianMatrix gap = apply_function(b, root, Interval::nonnegative()) -
                                    apply_function(a, root, Interval::nonnegative());
        CHECK(eig(gap).eigenvalues.minCoeff() >= -1e-9);
    }
}

TEST_CASE("matrix_power basics") {
    const HermitianMatrix a = diag2(2.0, -1.0);
    CHECK(approx_eq(matrix_power(a, 0), HermitianMatrix::Identity(2), 0.0));
    CHECK(approx_eq(matrix_power(a, 3), diag2(8.0, -1.0), 1e-14));
    CHECK_THROWS_AS(matrix_power(a, -1), std::invalid_argument);
}
