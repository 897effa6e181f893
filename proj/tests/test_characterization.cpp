#include "ovm/characterization.hpp"

#include "ovm/corpus.hpp"
#include "ovm/counterexample.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace ovm;

namespace {

FiniteOVM scalar_measure(std::vector<std::pair<double, double>> atoms) {
    std::vector<Atom> list;
    for (const auto& [lambda, weight] : atoms)
        list.push_back({lambda, HermitianMatrix::Scalar(weight)});
    return FiniteOVM(1, std::move(list));
}

FiniteOVM spectral_of_diag(std::vector<double> values) {
    const int dim = static_cast<int>(values.size());
    std::vector<Atom> atoms;
    for (int i = 0; i < dim; ++i) {
        Matrix e = Matrix::Zero(dim, dim);
        e(i, i) = 1.0;
        atoms.push_back({values[static_cast<std::size_t>(i)], HermitianMatrix(e)});
    }
    return FiniteOVM(dim, std::move(atoms));
}

bool all_match(const Verdict& v) {
    bool result = true;
    for (bool m : v.moments_match) result = result && m;
    return result;
}

}  // namespace

TEST_CASE("in_omega") {
    CHECK(in_omega(1, 2));
    CHECK_FALSE(in_omega(2, 3));
    CHECK(in_omega(3, 4));
    CHECK_FALSE(in_omega(2, 4));
    CHECK_FALSE(in_omega(3, 5));
    CHECK_FALSE(in_omega(4, 3));  // requires p < q
    CHECK_THROWS_AS(in_omega(0, 2), std::invalid_argument);
}

TEST_CASE("certify_two_moment on the golden-ratio instance") {
    const FibonacciExample example = fibonacci_example();
    const Verdict v = certify_two_moment(example.t, example.f, 2, 3);
    CHECK(v.moments_match[0]);
    CHECK(v.moments_match[1]);
    CHECK_FALSE(v.pair_in_omega);
    CHECK_FALSE(v.direct_spectral);
    CHECK(v.theorem_consistent);
    CHECK(v.residuals[0] <= 1e-12);
    CHECK(v.residuals[1] <= 1e-12);
}

TEST_CASE("certify_two_moment on a spectral instance") {
    RealVector d(2);
    d << 1.0, 2.0;
    const HermitianMatrix t = HermitianMatrix::FromDiagonal(d);
    const FiniteOVM f = spectral_of_diag({1.0, 2.0});
    const Verdict v = certify_two_moment(t, f, 1, 2);
    CHECK(v.pair_in_omega);
    CHECK(all_match(v));
    CHECK(v.direct_spectral);
    CHECK(v.theorem_consistent);
}

TEST_CASE("certify_two_moment on the (1,3) two-atom instance") {
    // alpha 4/5 at 2, beta 1/5 at -3: both odd moments equal one
    CHECK(0.8 * 2.0 + 0.2 * (-3.0) == doctest::Approx(1.0));
    CHECK(0.8 * 8.0 + 0.2 * (-27.0) == doctest::Approx(1.0));
    const FiniteOVM f = scalar_measure({{2.0, 0.8}, {-3.0, 0.2}});
    const Verdict v = certify_two_moment(HermitianMatrix::Scalar(1.0), f, 1, 3);
    CHECK(all_match(v));
    CHECK_FALSE(v.pair_in_omega);
    CHECK_FALSE(v.direct_spectral);
    CHECK(v.theorem_consistent);
}

TEST_CASE("certify_two_moment validates its input") {
    const FibonacciExample example = fibonacci_example();
    CHECK_THROWS_AS(certify_two_moment(HermitianMatrix::Identity(2), example.f, 2, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(certify_two_moment(example.t, example.f, 3, 2), std::invalid_argument);
}

TEST_CASE("recover_T_odd") {
    SUBCASE("inverts spectral measures") {
        const FiniteOVM f = spectral_of_diag({1.0, -2.0});
        RealVector d(2);
        d << 1.0, -2.0;
        CHECK(approx_eq(recover_T_odd(f, 3), HermitianMatrix::FromDiagonal(d), 1e-10));
    }
    SUBCASE("golden-ratio measure recovers the scalar one") {
        CHECK(recover_T_odd(fibonacci_example().f, 3)(0, 0).real() ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("first moment of the symmetric measure vanishes") {
        const FiniteOVM f = scalar_measure({{-1.0, 0.5}, {1.0, 0.5}});
        CHECK(std::abs(recover_T_odd(f, 1)(0, 0).real()) <= 1e-14);
    }
    SUBCASE("even exponents are rejected") {
        CHECK_THROWS_AS(recover_T_odd(fibonacci_example().f, 2), std::invalid_argument);
    }
}

TEST_CASE("certify_positive") {
    SUBCASE("spectral instance certifies") {
        RealVector d(2);
        d << 1.0, 4.0;
        const HermitianMatrix t = HermitianMatrix::FromDiagonal(d);
        const FiniteOVM f = spectral_of_diag({1.0, 4.0});
        const Verdict v = certify_positive(t, f, 0.5, 2.0);
        CHECK(v.pair_in_omega);
        CHECK(all_match(v));
        CHECK(v.direct_spectral);
        CHECK(v.theorem_consistent);
    }
    SUBCASE("half-moment candidate misses the second moment") {
        const FiniteOVM f = scalar_measure({{1.0, 0.25}, {4.0, 0.75}});
        // candidate from the half moment: (1/4 + 3/4 * 2)^2 = 49/16
        const HermitianMatrix t = HermitianMatrix::Scalar(49.0 / 16.0);
        const Verdict v = certify_positive(t, f, 0.5, 2.0);
        CHECK(v.moments_match[0]);
        CHECK_FALSE(v.moments_match[1]);
        // direct arithmetic: moment_2 = 1/4 + 12 = 49/4, T^2 = (49/16)^2
        const double expected_residual = std::abs(49.0 / 4.0 - std::pow(49.0 / 16.0, 2.0));
        CHECK(v.residuals[1] == doctest::Approx(expected_residual).epsilon(1e-12));
        CHECK(v.theorem_consistent);
    }
    SUBCASE("recovered candidates never match the second exponent on random instances") {
        for (int trial = 0; trial < 40; ++trial) {
            corpus::Rng rng(corpus::derive_seed(47, static_cast<std::uint64_t>(trial)));
            const FiniteOVM f = corpus::random_povm(rng, rng.uniform_int(1, 3),
                                                    rng.uniform_int(2, 4), Interval{0.0, 2.5});
            if (is_spectral(f, 1e-9)) continue;
            const HermitianMatrix t = apply_function(
                moment_real(f, 0.5), [](double x) { return x * x; }, Interval::nonnegative());
            const Verdict v = certify_positive(t, f, 0.5, 2.0);
            CHECK(v.moments_match[0]);
            CHECK(v.residuals[1] > 1e-6);
            CHECK(v.theorem_consistent);
        }
    }
    SUBCASE("validation") {
        const FiniteOVM f = scalar_measure({{1.0, 1.0}});
        CHECK_THROWS_AS(certify_positive(HermitianMatrix::Scalar(1.0), f, 2.0, 2.0),
                        std::invalid_argument);
        CHECK_THROWS_AS(certify_positive(HermitianMatrix::Scalar(-1.0), f, 0.5, 2.0),
                        std::invalid_argument);
        const FiniteOVM negative = scalar_measure({{-1.0, 0.5}, {1.0, 0.5}});
        CHECK_THROWS_AS(certify_positive(HermitianMatrix::Scalar(1.0), negative, 0.5, 2.0),
                        std::domain_error);
    }
}

TEST_CASE("search_violation finds nothing on forcing pairs") {
    CHECK_FALSE(search_violation(1, 2, 500, 42, 3).has_value());
    CHECK_FALSE(search_violation(3, 4, 500, 7, 3).has_value());
}

TEST_CASE("search_violation surfaces injected counterexamples") {
    const CounterexampleParams params = solve_params(2, 3, 1.0);
    const auto instance = build_povm(params, 1);
    const std::vector<std::pair<HermitianMatrix, FiniteOVM>> injected = {instance};

    SUBCASE("without the injection every trial is skipped (p even)") {
        CHECK_FALSE(search_violation(2, 3, 100, 42, 3).has_value());
    }
    SUBCASE("the injected instance is reported with a consistent verdict") {
        const auto witness = search_violation(2, 3, 100, 42, 3, injected);
        REQUIRE(witness.has_value());
        CHECK(witness->trial == -1);
        CHECK(all_match(witness->verdict));
        CHECK_FALSE(witness->verdict.direct_spectral);
        CHECK(witness->verdict.theorem_consistent);  // (2,3) is outside the forcing set
    }
}

TEST_CASE("matched moments inside the forcing set extend to every exponent") {
    // build spectral instances, certify at a forcing pair, and confirm the
    // match propagates to all powers up to 2q
    for (int trial = 0; trial < 20; ++trial) {
        corpus::Rng rng(corpus::derive_seed(53, static_cast<std::uint64_t>(trial)));
        const int dim = rng.uniform_int(2, 4);
        const FiniteOVM f = corpus::random_spectral(rng, dim, rng.uniform_int(1, dim));
        const HermitianMatrix t = moment(f, 1);
        const int q = 2 * rng.uniform_int(1, 4);
        const int p = 2 * rng.uniform_int(1, q / 2) - 1;  // odd, < q
        const Verdict v = certify_two_moment(t, f, p, q);
        REQUIRE(v.pair_in_omega);
        REQUIRE(all_match(v));
        CHECK(v.direct_spectral);
        for (int k = 0; k <= 2 * q; ++k)
            CHECK(approx_eq(matrix_power(t, k), moment(f, k), 1e-8));
    }
}

TEST_CASE("power-mean obstruction on scalar two-atom measures") {
    // |alpha l1^p + beta l2^p| <= (alpha l1^q + beta l2^q)^(p/q) for
    // p odd < q even, strict unless the support degenerates
    for (int trial = 0; trial < 200; ++trial) {
        corpus::Rng rng(corpus::derive_seed(59, static_cast<std::uint64_t>(trial)));
        const double alpha = rng.uniform(0.05, 0.95);
        const double l1 = rng.uniform(-3.0, 3.0);
        const double l2 = rng.uniform(-3.0, 3.0);
        const int p = 2 * rng.uniform_int(1, 4) - 1;
        const int q = p + 1 + 2 * rng.uniform_int(0, 3);
        if (q % 2 != 0 || q > 8) continue;
        const double mp = alpha * std::pow(l1, p) + (1.0 - alpha) * std::pow(l2, p);
        const double mq = alpha * std::pow(l1, q) + (1.0 - alpha) * std::pow(l2, q);
        CHECK(std::abs(mp) <= std::pow(mq, static_cast<double>(p) / q) + 1e-12);
    }
}
