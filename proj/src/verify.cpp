#include "ovm/verify.hpp"

#include "ovm/characterization.hpp"
#include "ovm/corpus.hpp"
#include "ovm/counterexample.hpp"
#include "ovm/dilation.hpp"
#include "ovm/hermitian.hpp"
#include "ovm/inequalities.hpp"
#include "ovm/json_io.hpp"
#include "ovm/povm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace ovm::verify {

namespace {

constexpr std::size_t kMaxFailureDumps = 5;

double min_eigenvalue(const HermitianMatrix& a) {
    if (a.dim() == 0) return 0.0;
    return eig(a).eigenvalues.minCoeff();
}

double pow_int(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer), format, a, b);
    return buffer;
}

// Tracks the worst value of a named statistic (max or min).
struct Extreme {
    double max = -std::numeric_limits<double>::infinity();
    double min = std::numeric_limits<double>::infinity();
    void record(double v) {
        max = std::max(max, v);
        min = std::min(min, v);
    }
};

std::uint64_t suite_salt(const std::string& name) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (char c : name) {
        hash ^= static_cast<std::uint8_t>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

corpus::Rng trial_rng(const SuiteOptions& options, const std::string& suite,
                      std::uint64_t trial) {
    return corpus::Rng(corpus::derive_seed(options.seed ^ suite_salt(suite), trial));
}

// A on the big space commuting with the projection of `c`.
HermitianMatrix commuting_operand(corpus::Rng& rng, const HermitianMatrix& p, bool psd) {
    const int dim = p.dim();
    const HermitianMatrix x = psd ? corpus::random_psd(rng, dim) : corpus::random_hermitian(rng, dim);
    const HermitianMatrix y = psd ? corpus::random_psd(rng, dim) : corpus::random_hermitian(rng, dim);
    const Matrix comp = Matrix::Identity(dim, dim) - p.mat();
    return HermitianMatrix(p.mat() * x.mat() * p.mat() + comp * y.mat() * comp);
}

}  // namespace

void SuiteResult::fail(std::string message) {
    passed = false;
    if (failures.size() < kMaxFailureDumps) failures.push_back(std::move(message));
}

double SuiteResult::stat(const std::string& name) const {
    for (const auto& [key, value] : stats) {
        if (key == name) return value;
    }
    throw std::out_of_range("SuiteResult: no statistic named " + name);
}

SuiteResult run_kadison(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "kadison";
    Extreme psd_deficit, route_gap;
    const int dim_cap = std::max(2, options.dim_max);
    for (int trial = 0; trial < options.trials; ++trial) {
        corpus::Rng rng = trial_rng(options, result.suite, static_cast<std::uint64_t>(trial));
        const int dim = rng.uniform_int(2, dim_cap);
        const HermitianMatrix p = corpus::random_projection(rng, dim, rng.uniform_int(1, dim - 1));
        const CompressionMap map(p);
        const bool make_commuting = trial % 4 == 3;
        const HermitianMatrix a =
            make_commuting ? commuting_operand(rng, p, false) : corpus::random_hermitian(rng, dim);

        const HermitianMatrix gap = kadison_gap(map, a);
        const double deficit = -min_eigenvalue(gap);
        psd_deficit.record(deficit);
        if (deficit > 1e-9)
            result.fail(fmt("trial %.0f: kadison gap min eigenvalue %.3e", trial, -deficit));

        const double scale = 1.0 + a.frobenius_norm();
        const double commutator = (p.mat() * a.mat() - a.mat() * p.mat()).norm();
        const bool commutes = commutator <= 1e-8 * scale;
        const bool gap_zero = gap.frobenius_norm() <= 1e-8 * scale;
        if (commutes != gap_zero)
            result.fail(fmt("equality case disagrees: commutator %.3e, gap norm %.3e", commutator,
                            gap.frobenius_norm()));

        const HermitianMatrix residual_route = kadison_gap_residual_form(map, a);
        const double route = (gap.mat() - residual_route.mat()).norm();
        route_gap.record(route);
        if (route > 1e-9 * scale)
            result.fail(fmt("algebraic route deviates by %.3e", route));
        result.checks += 3;
    }
    result.stats = {{"max_psd_deficit", std::max(psd_deficit.max, 0.0)},
                    {"max_route_deviation", route_gap.max}};
    return result;
}

SuiteResult run_hansen(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "hansen";
    Extreme psd_deficit;
    const double exponents[] = {0.25, 0.5, 0.75};
    const int dim_cap = std::max(2, options.dim_max);
    for (int trial = 0; trial < options.trials; ++trial) {
        corpus::Rng rng = trial_rng(options, result.suite, static_cast<std::uint64_t>(trial));
        const int dim = rng.uniform_int(2, dim_cap);
        const double s = exponents[trial % 3];
        const bool projection_case = trial % 2 == 0;

        HermitianMatrix c = HermitianMatrix::Identity(dim);
        if (projection_case) {
            c = corpus::random_projection(rng, dim, rng.uniform_int(1, dim - 1));
        } else {
            const HermitianMatrix h = corpus::random_hermitian(rng, dim);
            const double norm = operator_norm(h);
            c = (norm > 0.0 ? rng.uniform(0.2, 1.0) / norm : 1.0) * h;
        }
        const HermitianMatrix a = trial % 5 == 4 && projection_case
                                      ? commuting_operand(rng, c, true)
                                      : corpus::random_psd(rng, dim);

        const HermitianMatrix gap = hansen_gap(a, c, s);
        const double deficit = -min_eigenvalue(gap);
        psd_deficit.record(deficit);
        if (deficit > 1e-9)
            result.fail(fmt("trial %.0f: hansen gap min eigenvalue %.3e", trial, -deficit));
        result.checks += 1;

        if (projection_case) {
            const auto [gap_zero, commutes] = hansen_equality_case(a, c, s, 1e-8);
            if (gap_zero != commutes)
                result.fail(fmt("equality case disagrees at trial %.0f (s=%.2f)", trial, s));
            result.checks += 1;
        }
    }
    result.stats = {{"max_psd_deficit", std::max(psd_deficit.max, 0.0)}};
    return result;
}

SuiteResult run_lieb_ruskai(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "lieb-ruskai";
    Extreme psd_deficit, tail_step, pinv_gap;
    std::vector<double> eps_list;
    for (int e = 2; e <= 12; ++e) eps_list.push_back(std::pow(10.0, -e));
    const int dim_cap = std::max(2, options.dim_max);
    for (int trial = 0; trial < options.trials; ++trial) {
        corpus::Rng rng = trial_rng(options, result.suite, static_cast<std::uint64_t>(trial));
        const int dim = rng.uniform_int(2, dim_cap);
        const HermitianMatrix p = corpus::random_projection(rng, dim, rng.uniform_int(1, dim - 1));
        const CompressionMap map(p);
        const HermitianMatrix a = corpus::random_hermitian(rng, dim);
        HermitianMatrix b = corpus::random_hermitian(rng, dim);
        if (trial % 4 == 1) b = HermitianMatrix::Identity(dim);
        if (trial % 4 == 3) b = a;

        const std::vector<HermitianMatrix> path = lieb_ruskai_path(map, a, b, eps_list);
        for (const HermitianMatrix& g : path) {
            const double deficit = -min_eigenvalue(g);
            psd_deficit.record(deficit);
            if (deficit > 1e-8)
                result.fail(fmt("trial %.0f: G(eps) min eigenvalue %.3e", trial, -deficit));
        }
        const std::size_t n = path.size();
        const double step = (path[n - 1].mat() - path[n - 2].mat()).cwiseAbs().maxCoeff();
        tail_step.record(step);
        if (step > 1e-6) result.fail(fmt("trial %.0f: eps tail step %.3e", trial, step));

        const HermitianMatrix pinv = lieb_ruskai_gap_pinv(map, a, b);
        const double oracle = (path.back().mat() - pinv.mat()).norm();
        pinv_gap.record(oracle);
        if (oracle > 1e-6 * (1.0 + pinv.frobenius_norm()))
            result.fail(fmt("trial %.0f: pseudoinverse oracle deviates by %.3e", trial, oracle));

        // quadratic forms must not increase as eps shrinks
        Matrix h = corpus::random_complex(rng, map.range_dim(), 1);
        h.normalize();
        double previous = std::numeric_limits<double>::infinity();
        const double slack = 1e-9 * (1.0 + path.front().frobenius_norm());
        for (const HermitianMatrix& g : path) {
            const double value = (h.adjoint() * g.mat() * h).eval()(0, 0).real();
            if (value > previous + slack)
                result.fail(fmt("trial %.0f: quadratic form increased by %.3e", trial,
                                value - previous));
            previous = value;
        }
        result.checks += static_cast<long>(2 * n + 2);
    }
    result.stats = {{"max_psd_deficit", std::max(psd_deficit.max, 0.0)},
                    {"max_tail_step", tail_step.max},
                    {"max_pinv_deviation", pinv_gap.max}};
    return result;
}

SuiteResult run_hankel(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "hankel";
    Extreme hankel_deficit, var_deficit;
    for (int trial = 0; trial < options.trials; ++trial) {
        corpus::Rng rng = trial_rng(options, result.suite, static_cast<std::uint64_t>(trial));
        const int dim = rng.uniform_int(1, std::max(1, options.dim_max));
        const FiniteOVM f = corpus::random_povm(rng, dim, rng.uniform_int(2, 5));
        for (int n = 0; n <= 4; ++n) {
            const double deficit = -min_eigenvalue(hankel(f, n));
            hankel_deficit.record(deficit);
            if (deficit > 1e-8) {
                result.fail(fmt("trial %.0f: hankel min eigenvalue %.3e", trial, -deficit) +
                            "\n  " + io::povm_to_json(f).dump());
            }
            result.checks += 1;
        }
        const double vdeficit = -min_eigenvalue(variance(f));
        var_deficit.record(vdeficit);
        if (vdeficit > 1e-9)
            result.fail(fmt("trial %.0f: variance min eigenvalue %.3e", trial, -vdeficit));
        result.checks += 1;
    }
    result.stats = {{"max_hankel_deficit", std::max(hankel_deficit.max, 0.0)},
                    {"max_variance_deficit", std::max(var_deficit.max, 0.0)}};
    return result;
}

SuiteResult run_theorem(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "theorem";
    Extreme q_residual, p_residual, beta_residual;
    long witnesses = 0;

    // integer forcing pairs: p odd < q even, q <= 8
    std::vector<std::pair<int, int>> pairs;
    for (int p = 1; p <= 8; p += 2)
        for (int q = p + 1; q <= 8; ++q)
            if (q % 2 == 0) pairs.emplace_back(p, q);

    for (std::size_t pair_idx = 0; pair_idx < pairs.size(); ++pair_idx) {
        const auto [p, q] = pairs[pair_idx];
        for (int trial = 0; trial < options.trials; ++trial) {
            corpus::Rng rng = trial_rng(options, result.suite,
                                        pair_idx * static_cast<std::uint64_t>(options.trials) +
                                            static_cast<std::uint64_t>(trial));
            const int dim = rng.uniform_int(1, std::max(1, options.dim_max));
            const FiniteOVM f = corpus::random_povm(rng, dim, rng.uniform_int(2, 5));
            if (is_spectral(f, 1e-9)) continue;
            const HermitianMatrix t = recover_T_odd(f, p);
            const Verdict v = certify_two_moment(t, f, p, q, options.tol);
            p_residual.record(v.residuals[0]);
            q_residual.record(v.residuals[1]);
            if (!v.moments_match[0])
                result.fail(fmt("(p=%.0f) recovered candidate misses its own moment, residual %.3e",
                                p, v.residuals[0]));
            if (v.residuals[1] <= 1e-6) {
                result.fail(fmt("two-moment near-miss at q residual %.3e (pair %.0f)",
                                v.residuals[1], static_cast<double>(pair_idx)) +
                            "\n  " + io::povm_to_json(f).dump());
            }
            if (!v.theorem_consistent) {
                ++witnesses;
                result.fail("falsification verdict:\n  " + io::verdict_to_json(v).dump() +
                            "\n  " + io::povm_to_json(f).dump());
            }
            result.checks += 1;
        }
    }

    // positive-case pairs on nonnegative support
    const std::pair<double, double> fractional[] = {{0.5, 2.0}, {1.0, 3.0}};
    for (std::size_t pair_idx = 0; pair_idx < 2; ++pair_idx) {
        const double alpha = fractional[pair_idx].first;
        const double beta = fractional[pair_idx].second;
        for (int trial = 0; trial < options.trials; ++trial) {
            corpus::Rng rng = trial_rng(options, "theorem-positive",
                                        pair_idx * static_cast<std::uint64_t>(options.trials) +
                                            static_cast<std::uint64_t>(trial));
            const int dim = rng.uniform_int(1, std::max(1, options.dim_max));
            const FiniteOVM f =
                corpus::random_povm(rng, dim, rng.uniform_int(2, 5), Interval{0.0, 2.5});
            if (is_spectral(f, 1e-9)) continue;
            const HermitianMatrix t = apply_function(
                moment_real(f, alpha), [alpha](double x) { return std::pow(x, 1.0 / alpha); },
                Interval::nonnegative());
            const Verdict v = certify_positive(t, f, alpha, beta, options.tol);
            beta_residual.record(v.residuals[1]);
            if (v.residuals[1] <= 1e-6) {
                result.fail(fmt("positive-case near-miss at beta residual %.3e", v.residuals[1]) +
                            "\n  " + io::povm_to_json(f).dump());
            }
            if (!v.theorem_consistent) {
                ++witnesses;
                result.fail("positive-case falsification:\n  " + io::verdict_to_json(v).dump());
            }
            result.checks += 1;
        }
    }

    result.stats = {{"min_q_residual", q_residual.min},
                    {"max_p_residual", p_residual.max},
                    {"min_beta_residual", beta_residual.min},
                    {"witnesses", static_cast<double>(witnesses)}};
    return result;
}

SuiteResult run_holder_obstruction(const SuiteOptions&) {
    SuiteResult result;
    result.suite = "holder";
    double min_residual = std::numeric_limits<double>::infinity();
    long combos = 0;
    std::vector<double> grid;
    for (int i = -60; i <= 60; ++i) grid.push_back(i * 0.05);

    for (int p = 1; p <= 8; p += 2) {
        for (int q = p + 1; q <= 8; ++q) {
            if (q % 2 != 0) continue;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                for (std::size_t j = i + 1; j < grid.size(); ++j) {
                    const double l1 = grid[i];
                    const double l2 = grid[j];
                    const double den = pow_int(l1, p) - pow_int(l2, p);
                    if (std::abs(den) < 1e-9) continue;  // p odd: only l1 == l2
                    // weight that matches the p-th moment exactly
                    const double alpha = (1.0 - pow_int(l2, p)) / den;
                    if (!(alpha > 0.0 && alpha < 1.0)) continue;
                    const double residual =
                        std::abs(alpha * pow_int(l1, q) + (1.0 - alpha) * pow_int(l2, q) - 1.0);
                    ++combos;
                    min_residual = std::min(min_residual, residual);
                    if (residual <= 1e-6) {
                        result.fail(fmt("solvable two-atom system found: lambda %.3f / %.3f", l1,
                                        l2));
                    }
                }
            }
            result.checks += 1;
        }
    }
    result.stats = {{"min_grid_residual", min_residual},
                    {"grid_combinations", static_cast<double>(combos)}};
    return result;
}

SuiteResult run_counterexample_grid(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "counterexample-grid";
    Extreme system_residual, power_deviation, determinant, commutator_norm, dilation_deviation;
    const double taus[] = {1.0, -1.0, 2.0, 0.5};

    for (int p = 1; p <= 8; ++p) {
        for (int q = p; q <= 8; ++q) {
            if (in_omega(p, q)) {
                // the solver must refuse on the forcing set
                bool refused = false;
                try {
                    (void)solve_params(p, q, 1.0);
                } catch (const std::invalid_argument&) {
                    refused = true;
                }
                if (!refused)
                    result.fail(fmt("solver accepted forcing pair (%.0f, %.0f)", p, q));
                result.checks += 1;
                continue;
            }
            for (double tau : taus) {
                const CounterexampleParams params = solve_params(p, q, tau);
                for (double r : system_residuals(params)) {
                    system_residual.record(r);
                    if (r > 1e-10)
                        result.fail(fmt("system residual %.3e at tau %.2f", r, tau));
                }
                if (!(params.alpha > 0.0 && params.alpha < 1.0 && params.beta > 0.0 &&
                      params.beta < 1.0))
                    result.fail(fmt("weights outside (0,1) for pair (%.0f, %.0f)", p, q));
                if (std::abs(params.lambda1 - params.lambda2) < 1e-9)
                    result.fail(fmt("support points collapse for pair (%.0f, %.0f)", p, q));

                // dilation matrix: repeated multiplication vs the closed form
                const HermitianMatrix s = build_dilation_matrix(params);
                HermitianMatrix power = HermitianMatrix::Identity(2);
                for (int n = 1; n <= 2 * q; ++n) {
                    power = HermitianMatrix(power.mat() * s.mat());
                    const double expected = compressed_power(params, n);
                    const double deviation = std::abs(power(0, 0).real() - expected);
                    power_deviation.record(deviation / (1.0 + std::abs(expected)));
                    if (deviation > 1e-9 * (1.0 + std::abs(expected)))
                        result.fail(fmt("compressed power deviates by %.3e at n=%.0f", deviation,
                                        n));
                    if ((n == p || n == q) &&
                        std::abs(power(0, 0).real() - pow_int(tau, n)) >
                            1e-9 * (1.0 + std::abs(pow_int(tau, n))))
                        result.fail(fmt("moment entry misses tau^k at k=%.0f (tau %.2f)", n, tau));
                }

                // determinant identity for the bisection cases, at tau = 1
                if (p != q && !(p % 2 == 0 && q % 2 == 0)) {
                    const double l1 = params.lambda1 / tau;
                    const double l2 = params.lambda2 / tau;
                    const double det = (pow_int(l1, p) - 1.0) * (pow_int(l2, q) - 1.0) -
                                       (pow_int(l2, p) - 1.0) * (pow_int(l1, q) - 1.0);
                    const double scale = 1.0 + std::abs(pow_int(l1, q)) * (1.0 + std::abs(pow_int(l2, q)));
                    determinant.record(std::abs(det) / scale);
                    if (std::abs(det) > 1e-9 * scale)
                        result.fail(fmt("determinant identity fails: %.3e", det));
                }

                // the measure matches the scalar operator but is not spectral
                const auto [t, f] = build_povm(params, 1);
                const Verdict v = certify_two_moment(t, f, p, q, options.tol);
                if (!(v.moments_match[0] && v.moments_match[1]))
                    result.fail(fmt("counterexample moments fail to match at (%.0f, %.0f)", p, q));
                if (is_spectral(f, 1e-8) || v.direct_spectral)
                    result.fail(fmt("counterexample measure is spectral at (%.0f, %.0f)", p, q));
                if (!v.theorem_consistent)
                    result.fail("verdict inconsistent outside the forcing set");

                const Matrix proj = (Matrix(2, 2) << 1, 0, 0, 0).finished();
                const double comm = (proj * s.mat() - s.mat() * proj).norm();
                commutator_norm.record(comm);
                if (comm <= 1e-6)
                    result.fail(fmt("dilation matrix commutes with the corner projection: %.3e",
                                    comm));

                // cross-module: the minimal dilation reproduces the explicit matrix
                const NaimarkDilation d = dilate_minimal(f);
                if (d.big_dim != 2) result.fail(fmt("unexpected dilation size %.0f", d.big_dim));
                const RealVector dilation_eigs = eig(d.S).eigenvalues;
                const RealVector explicit_eigs = eig(s).eigenvalues;
                for (Eigen::Index i = 0; i < dilation_eigs.size(); ++i) {
                    const double dev = std::abs(dilation_eigs(i) - explicit_eigs(i));
                    dilation_deviation.record(dev);
                    if (dev > 1e-9 * (1.0 + std::abs(explicit_eigs(i))))
                        result.fail(fmt("dilation spectrum deviates by %.3e", dev));
                }
                for (int n = 0; n <= 2 * q; ++n) {
                    const double via = moment_via_dilation(d, n)(0, 0).real();
                    const double expected = compressed_power(params, n);
                    if (std::abs(via - expected) > 1e-9 * (1.0 + std::abs(expected)))
                        result.fail(fmt("dilation moment deviates at n=%.0f", n));
                }
                result.checks += 1;
            }
        }
    }

    const SuiteResult holder = run_holder_obstruction(options);
    if (!holder.passed) {
        result.passed = false;
        for (const std::string& failure : holder.failures) result.failures.push_back(failure);
    }
    result.checks += holder.checks;

    result.stats = {{"max_system_residual", system_residual.max},
                    {"max_power_deviation", power_deviation.max},
                    {"max_determinant_residual", determinant.max},
                    {"min_commutator_norm", commutator_norm.min},
                    {"min_holder_residual", holder.stat("min_grid_residual")}};
    return result;
}

SuiteResult run_dilation(const SuiteOptions& options) {
    SuiteResult result;
    result.suite = "dilation";
    Extreme moment_deviation, identity_deviation, roundtrip_deviation;
    for (int trial = 0; trial < options.trials; ++trial) {
        corpus::Rng rng = trial_rng(options, result.suite, static_cast<std::uint64_t>(trial));
        const bool spectral_case = trial % 3 == 2;
        const int dim = rng.uniform_int(spectral_case ? 2 : 1, std::max(2, options.dim_max));
        const FiniteOVM f = spectral_case
                                ? corpus::random_spectral(rng, dim, rng.uniform_int(1, dim))
                                : corpus::random_povm(rng, dim, rng.uniform_int(2, 5));
        const NaimarkDilation d = dilate_minimal(f);

        const bool spectral = is_spectral(f, 1e-9);
        const bool commutes = p_commutes(d, 1e-8);
        if (spectral != commutes) {
            result.fail(fmt("spectrality/commutation disagree at trial %.0f", trial) + "\n  " +
                        io::povm_to_json(f).dump());
        }

        // independent rank count for minimality
        int rank_sum = 0;
        for (const Atom& atom : f.atoms()) {
            const RealVector values = eig(atom.effect).eigenvalues;
            const double rank_tol = 1e-10 * (1.0 + values.cwiseAbs().maxCoeff());
            for (Eigen::Index i = 0; i < values.size(); ++i)
                if (values(i) > rank_tol) ++rank_sum;
        }
        if (rank_sum != d.big_dim)
            result.fail(fmt("minimality violated: rank sum %.0f vs big_dim %.0f", rank_sum,
                            d.big_dim));

        for (int k = 0; k <= 6; ++k) {
            const HermitianMatrix via = moment_via_dilation(d, k);
            const HermitianMatrix direct = moment(f, k);
            const double deviation = (via.mat() - direct.mat()).norm();
            moment_deviation.record(deviation / (1.0 + direct.frobenius_norm()));
            if (deviation > 1e-9 * (1.0 + direct.frobenius_norm()))
                result.fail(fmt("dilation moment deviates by %.3e at k=%.0f", deviation, k));
        }

        // round trip
        const FiniteOVM back = compress(d);
        if (back.atom_count() != f.atom_count()) {
            result.fail(fmt("round trip changed the atom count at trial %.0f", trial));
        } else {
            for (int i = 0; i < f.atom_count(); ++i) {
                const auto& original = f.atoms()[static_cast<std::size_t>(i)];
                const auto& recovered = back.atoms()[static_cast<std::size_t>(i)];
                const double dev = (original.effect.mat() - recovered.effect.mat()).norm() +
                                   std::abs(original.lambda - recovered.lambda);
                roundtrip_deviation.record(dev);
                if (dev > 1e-9 * (1.0 + original.effect.frobenius_norm()))
                    result.fail(fmt("round trip deviates by %.3e", dev));
            }
        }

        // compression identity on the dilation projection
        const HermitianMatrix x = corpus::random_hermitian(rng, d.big_dim);
        const Matrix& pm = d.P.mat();
        const Matrix lhs =
            pm * x.mat() * x.mat() * pm - (pm * x.mat() * pm) * (pm * x.mat() * pm);
        const Matrix xp = x.mat() * pm;
        const Matrix rhs = xp.adjoint() * (Matrix::Identity(d.big_dim, d.big_dim) - pm) * xp;
        const double identity_dev = (lhs - rhs).norm();
        identity_deviation.record(identity_dev / (1.0 + rhs.norm()));
        if (identity_dev > 1e-9 * (1.0 + rhs.norm()))
            result.fail(fmt("compression identity deviates by %.3e", identity_dev));

        result.checks += 4;
    }
    result.stats = {{"max_moment_deviation", moment_deviation.max},
                    {"max_identity_deviation", identity_deviation.max},
                    {"max_roundtrip_deviation", roundtrip_deviation.max}};
    return result;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "kadison", "hansen",  "lieb-ruskai",         "hankel",
        "theorem", "dilation", "counterexample-grid"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& which, const SuiteOptions& options) {
    const auto run_one = [&options](const std::string& name) -> SuiteResult {
        if (name == "kadison") return run_kadison(options);
        if (name == "hansen") return run_hansen(options);
        if (name == "lieb-ruskai") return run_lieb_ruskai(options);
        if (name == "hankel") return run_hankel(options);
        if (name == "theorem") return run_theorem(options);
        if (name == "dilation") return run_dilation(options);
        if (name == "counterexample-grid") return run_counterexample_grid(options);
        throw std::invalid_argument("unknown suite: " + name);
    };
    std::vector<SuiteResult> results;
    if (which == "all") {
        for (const std::string& name : suite_names()) results.push_back(run_one(name));
    } else {
        results.push_back(run_one(which));
    }
    return results;
}

}  // namespace ovm::verify
