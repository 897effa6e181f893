#include "ovm/report.hpp"

#include "ovm/characterization.hpp"
#include "ovm/counterexample.hpp"
#include "ovm/dilation.hpp"
#include "ovm/json_io.hpp"
#include "ovm/povm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ovm::cli {

namespace {

using nlohmann::json;

std::string num(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string status_name(ExitStatus status) {
    switch (status) {
        case ExitStatus::pass: return "pass";
        case ExitStatus::violation: return "violation";
        case ExitStatus::input_error: return "input_error";
    }
    return "unknown";
}

std::string render_matrix(const HermitianMatrix& m, const std::string& indent) {
    std::ostringstream out;
    for (int i = 0; i < m.dim(); ++i) {
        out << indent << "[";
        for (int j = 0; j < m.dim(); ++j) {
            const Complex z = m(i, j);
            out << " " << num(z.real());
            if (z.imag() != 0.0) out << (z.imag() > 0 ? "+" : "") << num(z.imag()) << "i";
        }
        out << " ]\n";
    }
    return out.str();
}

struct ReportBuilder {
    RunReport report;
    std::ostringstream body;

    explicit ReportBuilder(std::string command) { report.command = std::move(command); }

    void input_file(const std::string& path) {
        report.inputs.emplace_back(path, io::file_digest(path));
    }

    void residual(const std::string& name, double value) {
        report.residual_summary.emplace_back(name, value);
    }

    void check(bool ok, const std::string& what) {
        if (!ok) {
            report.exit_status = ExitStatus::violation;
            body << "FAILED: " << what << "\n";
        }
    }

    RunReport finish() {
        report.results["text"] = body.str();
        return std::move(report);
    }

    RunReport input_error(const std::string& message) {
        report.exit_status = ExitStatus::input_error;
        report.error_message = message;
        return std::move(report);
    }
};

double min_eigenvalue(const HermitianMatrix& a) { return eig(a).eigenvalues.minCoeff(); }

long long fibonacci(int n) {  // f_{-1} = 1, f_0 = 0, f_1 = 1, ...
    if (n == -1) return 1;
    long long prev = 1, current = 0;
    for (int i = 0; i < n; ++i) {
        const long long next = prev + current;
        prev = current;
        current = next;
    }
    return current;
}

}  // namespace

std::string RunReport::to_text() const {
    std::ostringstream out;
    out << "== ovm " << command << " ==\n";
    for (const auto& [path, digest] : inputs) out << "input " << path << " sha:" << digest << "\n";
    if (exit_status == ExitStatus::input_error) {
        out << "input error: " << error_message << "\n";
        out << "status: " << status_name(exit_status) << "\n";
        return out.str();
    }
    if (results.contains("text")) out << results.at("text").get<std::string>();
    if (!residual_summary.empty()) {
        out << "residual summary:\n";
        for (const auto& [name, value] : residual_summary)
            out << "  " << name << " = " << num(value) << "\n";
    }
    out << "status: " << status_name(exit_status) << "\n";
    return out.str();
}

json RunReport::to_json() const {
    json inputs_doc = json::array();
    for (const auto& [path, digest] : inputs)
        inputs_doc.push_back(json{{"path", path}, {"digest", digest}});
    json residuals_doc = json::object();
    for (const auto& [name, value] : residual_summary) residuals_doc[name] = value;
    json doc{{"command", command},
             {"inputs", std::move(inputs_doc)},
             {"results", results},
             {"residual_summary", std::move(residuals_doc)},
             {"exit_status", status_name(exit_status)}};
    if (!error_message.empty()) doc["error"] = error_message;
    return doc;
}

RunReport cmd_check(const std::string& file, int max_moment, int max_hankel,
                    const GlobalOptions& global) {
    ReportBuilder builder("check");
    try {
        builder.input_file(file);
        const FiniteOVM f = io::load_povm(file);
        if (!f.normalized()) {
            const double defect =
                operator_norm(f.total() - HermitianMatrix::Identity(f.dim()));
            return builder.input_error("measure is not semispectral: ||sum of effects - I|| = " +
                                       num(defect));
        }

        builder.body << "dim " << f.dim() << ", " << f.atom_count() << " atoms\n";
        json moments_doc = json::array();
        for (int k = 0; k <= max_moment; ++k) {
            const HermitianMatrix mk = moment(f, k);
            builder.body << "moment " << k << ":\n" << render_matrix(mk, "  ");
            moments_doc.push_back(io::matrix_to_json(mk));
        }
        builder.report.results["moments"] = std::move(moments_doc);

        const HermitianMatrix var = variance(f);
        const double var_min = min_eigenvalue(var);
        builder.body << "variance:\n" << render_matrix(var, "  ");
        builder.body << "variance min eigenvalue: " << num(var_min) << "\n";
        builder.report.results["variance"] = io::matrix_to_json(var);
        builder.check(var_min >= -1e-8, "intrinsic noise operator must be PSD");

        const bool spectral = is_spectral(f, global.tol);
        builder.body << "spectral: " << (spectral ? "true" : "false") << "\n";
        builder.report.results["spectral"] = spectral;

        double worst_hankel = 0.0;
        json hankel_doc = json::array();
        for (int n = 0; n <= max_hankel; ++n) {
            const double h_min = min_eigenvalue(hankel(f, n));
            builder.body << "hankel n=" << n << " min eigenvalue: " << num(h_min) << "\n";
            hankel_doc.push_back(json{{"n", n}, {"min_eigenvalue", h_min}});
            worst_hankel = std::min(worst_hankel, h_min);
            builder.check(h_min >= -1e-8, "hankel moment matrix must be PSD");
        }
        builder.report.results["hankel"] = std::move(hankel_doc);

        const double defect = operator_norm(f.total() - HermitianMatrix::Identity(f.dim()));
        builder.residual("normalization_defect", defect);
        builder.residual("variance_psd_deficit", std::max(0.0, -var_min));
        builder.residual("hankel_psd_deficit", std::max(0.0, -worst_hankel));
        return builder.finish();
    } catch (const io::InputError& error) {
        return builder.input_error(error.what());
    } catch (const std::invalid_argument& error) {
        return builder.input_error(error.what());
    }
}

RunReport cmd_dilate(const std::string& file, const std::string& out,
                     const GlobalOptions& global) {
    ReportBuilder builder("dilate");
    try {
        builder.input_file(file);
        const FiniteOVM f = io::load_povm(file);
        const NaimarkDilation d = dilate_minimal(f);

        builder.body << "small_dim " << d.small_dim << ", big_dim " << d.big_dim << "\n";
        const bool commutes = p_commutes(d, 1e-8);
        const bool spectral = is_spectral(f, global.tol);
        builder.body << "projection commutes with the dilation: "
                     << (commutes ? "true" : "false") << "\n";
        builder.check(commutes == spectral,
                      "commutation must agree with the spectrality of the measure");

        double worst = 0.0;
        for (int k = 0; k <= 6; ++k) {
            const HermitianMatrix via = moment_via_dilation(d, k);
            const HermitianMatrix direct = moment(f, k);
            const double deviation = (via.mat() - direct.mat()).norm();
            worst = std::max(worst, deviation);
            builder.body << "moment " << k << " compression residual: " << num(deviation) << "\n";
            builder.check(deviation <= 1e-9 * (1.0 + direct.frobenius_norm()),
                          "compression moments must reproduce direct moments");
        }

        const FiniteOVM back = compress(d);
        double roundtrip = std::abs(static_cast<double>(back.atom_count() - f.atom_count()));
        if (back.atom_count() == f.atom_count()) {
            for (int i = 0; i < f.atom_count(); ++i) {
                const auto& original = f.atoms()[static_cast<std::size_t>(i)];
                const auto& recovered = back.atoms()[static_cast<std::size_t>(i)];
                roundtrip = std::max(roundtrip,
                                     (original.effect.mat() - recovered.effect.mat()).norm());
            }
        }
        builder.body << "dilate->compress round-trip residual: " << num(roundtrip) << "\n";
        builder.check(roundtrip <= 1e-9 * (1.0 + std::sqrt(static_cast<double>(f.dim()))),
                      "dilate->compress must round-trip the measure");

        builder.report.results["big_dim"] = d.big_dim;
        builder.report.results["commutes"] = commutes;
        builder.residual("max_moment_residual", worst);
        builder.residual("roundtrip_residual", roundtrip);

        if (!out.empty()) {
            io::save_json(io::dilation_to_json(d), out);
            builder.body << "dilation written to " << out << "\n";
        }
        return builder.finish();
    } catch (const io::InputError& error) {
        return builder.input_error(error.what());
    } catch (const std::invalid_argument& error) {
        return builder.input_error(error.what());
    }
}

RunReport cmd_counterexample(int p, int q, double tau, int dim, const std::string& out,
                             const GlobalOptions& global) {
    ReportBuilder builder("counterexample");
    if (p < 1 || q < 1 || p > q)
        return builder.input_error("exponents must satisfy 1 <= p <= q");
    if (tau == 0.0) return builder.input_error("tau must be nonzero");
    if (dim < 1) return builder.input_error("dim must be positive");
    if (in_omega(p, q)) {
        return builder.input_error(
            "no counterexample exists at (p, q) = (" + std::to_string(p) + ", " +
            std::to_string(q) +
            "): for p odd < q even, two matching moments force the measure to be spectral");
    }
    try {
        const CounterexampleParams params = solve_params(p, q, tau);
        const auto [t, f] = build_povm(params, dim);
        const HermitianMatrix s = build_dilation_matrix(params);

        builder.body << "alpha " << num(params.alpha) << ", beta " << num(params.beta)
                     << ", lambda1 " << num(params.lambda1) << ", lambda2 "
                     << num(params.lambda2) << "\n";
        builder.body << "dilation matrix:\n" << render_matrix(s, "  ");

        const std::array<double, 3> residuals = system_residuals(params);
        builder.body << "weight residual " << num(residuals[0]) << ", p-equation residual "
                     << num(residuals[1]) << ", q-equation residual " << num(residuals[2])
                     << "\n";
        for (double r : residuals)
            builder.check(r <= 1e-10, "weight system must hold to 1e-10");

        json transcript;
        transcript["system_residuals"] = residuals;

        double power_residual = 0.0;
        for (int k : {p, q}) {
            HermitianMatrix sk = matrix_power(s, k);
            const double expected = std::pow(tau, k);
            power_residual =
                std::max(power_residual, std::abs(sk(0, 0).real() - expected));
        }
        builder.body << "compressed power residual at k=p,q: " << num(power_residual) << "\n";
        builder.check(power_residual <= 1e-9 * (1.0 + std::pow(std::abs(tau), q)),
                      "dilation matrix powers must reproduce tau^k");
        transcript["compressed_power_residual"] = power_residual;

        const Verdict verdict = certify_two_moment(t, f, p, q, global.tol);
        builder.check(verdict.moments_match[0] && verdict.moments_match[1],
                      "measure moments must match the scalar operator at p and q");
        const bool spectral = is_spectral(f, global.tol);
        builder.check(!spectral, "counterexample measure must not be spectral");
        builder.body << "measure spectral: " << (spectral ? "true" : "false") << "\n";
        transcript["verdict"] = io::verdict_to_json(verdict);

        const Matrix proj = (Matrix(2, 2) << 1.0, 0.0, 0.0, 0.0).finished();
        const double commutator = (proj * s.mat() - s.mat() * proj).norm();
        builder.body << "||PS - SP|| = " << num(commutator) << "\n";
        builder.check(commutator > 1e-6, "dilation matrix must not commute with the projection");
        transcript["commutator_norm"] = commutator;

        builder.report.results["params"] = io::params_to_json(params);
        builder.report.results["povm"] = io::povm_to_json(f);
        builder.report.results["s_matrix"] = io::matrix_to_json(s);
        builder.report.results["transcript"] = transcript;
        builder.residual("max_system_residual",
                         std::max({residuals[0], residuals[1], residuals[2]}));
        builder.residual("compressed_power_residual", power_residual);

        if (!out.empty()) {
            io::save_json(json{{"params", io::params_to_json(params)},
                               {"povm", io::povm_to_json(f)},
                               {"s_matrix", io::matrix_to_json(s)},
                               {"transcript", transcript}},
                          out);
            builder.body << "counterexample written to " << out << "\n";
        }
        return builder.finish();
    } catch (const std::runtime_error& error) {
        // solver failure is a violation, not an input problem
        ReportBuilder failed("counterexample");
        failed.check(false, error.what());
        return failed.finish();
    }
}

RunReport cmd_fibonacci(int max_k, const GlobalOptions& global) {
    ReportBuilder builder("fibonacci");
    const FibonacciExample example = fibonacci_example();
    const NaimarkDilation d = dilate_minimal(example.f);

    builder.body << "k   (S^k)_11      via dilation   recursion   matches T\n";
    double worst = 0.0;
    for (int k = 0; k <= max_k; ++k) {
        const double direct = matrix_power(example.s, k)(0, 0).real();
        const double via = moment_via_dilation(d, k)(0, 0).real();
        const double oracle = static_cast<double>(fibonacci(k - 1));
        const bool matches_t = std::abs(direct - 1.0) <= global.tol;
        char line[128];
        std::snprintf(line, sizeof(line), "%-3d %-13.10g %-14.10g %-11.10g %s\n", k, direct, via,
                      oracle, matches_t ? "yes" : "no");
        builder.body << line;
        const double scale = 1.0 + std::abs(oracle);
        worst = std::max(worst, std::abs(direct - oracle) / scale);
        worst = std::max(worst, std::abs(via - oracle) / scale);
        builder.check(std::abs(direct - oracle) <= 1e-9 * scale,
                      "matrix powers must follow the recursion");
        builder.check(std::abs(via - oracle) <= 1e-9 * scale,
                      "dilation moments must follow the recursion");
        if (k >= 1)
            builder.check(matches_t == (k == 2 || k == 3),
                          "moments must match T exactly at k = 2, 3");
    }

    const bool spectral = is_spectral(example.f, global.tol);
    const double var = variance(example.f)(0, 0).real();
    builder.body << "measure spectral: " << (spectral ? "true" : "false") << "\n";
    builder.body << "intrinsic noise: " << num(var) << "\n";
    builder.check(!spectral, "the golden-ratio measure is not spectral");
    builder.check(std::abs(var - 1.0) <= 1e-10, "intrinsic noise must equal 1");

    builder.report.results["spectral"] = spectral;
    builder.report.results["variance"] = var;
    builder.residual("max_recursion_residual", worst);
    return builder.finish();
}

RunReport cmd_verify(const std::string& suite, int trials, std::uint64_t seed, int dim_max,
                     const GlobalOptions& global) {
    ReportBuilder builder("verify");
    bool known = suite == "all";
    for (const std::string& name : verify::suite_names()) known = known || name == suite;
    if (!known) return builder.input_error("unknown suite: " + suite);
    if (trials < 1) return builder.input_error("trials must be positive");
    if (dim_max < 1) return builder.input_error("dim-max must be positive");

    verify::SuiteOptions options{trials, seed, dim_max, global.tol};
    const std::vector<verify::SuiteResult> results = verify::run_suites(suite, options);
    json suites_doc = json::array();
    for (const verify::SuiteResult& r : results) {
        builder.body << "suite " << r.suite << ": " << (r.passed ? "pass" : "FAIL") << " ("
                     << r.checks << " checks)";
        for (const auto& [name, value] : r.stats) builder.body << " " << name << "=" << num(value);
        builder.body << "\n";
        for (const std::string& failure : r.failures) builder.body << "  " << failure << "\n";
        builder.check(r.passed, "suite " + r.suite);
        json stats_doc = json::object();
        for (const auto& [name, value] : r.stats) stats_doc[name] = value;
        suites_doc.push_back(json{{"suite", r.suite},
                                  {"passed", r.passed},
                                  {"checks", r.checks},
                                  {"stats", std::move(stats_doc)},
                                  {"failures", r.failures}});
        if (!r.stats.empty()) builder.residual(r.suite + "." + r.stats.front().first,
                                               r.stats.front().second);
    }
    builder.report.results["suites"] = std::move(suites_doc);
    return builder.finish();
}

}  // namespace ovm::cli
