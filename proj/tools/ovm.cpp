// ovm — command-line front end for finitely-supported operator-valued
// measures: check stored measures, build minimal dilations, synthesize
// counterexamples, and run the verification suites.

#include "ovm/report.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"operator-valued measure toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global --tol/--json are accepted after the subcommand

    ovm::cli::GlobalOptions global;
    app.add_option("--tol", global.tol, "relative tolerance for moment matching")
        ->capture_default_str();
    app.add_flag("--json", global.json_output, "emit the machine-readable JSON transcript");

    std::string check_file;
    int check_moments = 6;
    int check_hankel = 3;
    CLI::App* check = app.add_subcommand("check", "moments, noise, spectrality, Hankel status");
    check->add_option("file", check_file, "measure document")->required();
    check->add_option("--moments", check_moments, "highest moment to print")
        ->capture_default_str();
    check->add_option("--hankel", check_hankel, "highest Hankel order to test")
        ->capture_default_str();

    std::string dilate_file;
    std::string dilate_out;
    CLI::App* dilate = app.add_subcommand("dilate", "construct the minimal dilation");
    dilate->add_option("file", dilate_file, "measure document")->required();
    dilate->add_option("--out", dilate_out, "write the dilation document here");

    int ce_p = 0;
    int ce_q = 0;
    double ce_tau = 1.0;
    int ce_dim = 1;
    std::string ce_out;
    CLI::App* counterexample =
        app.add_subcommand("counterexample", "synthesize a certified counterexample");
    counterexample->add_option("--p", ce_p, "first exponent")->required();
    counterexample->add_option("--q", ce_q, "second exponent")->required();
    counterexample->add_option("--tau", ce_tau, "scalar operator value")->capture_default_str();
    counterexample->add_option("--dim", ce_dim, "dimension of the measure")
        ->capture_default_str();
    counterexample->add_option("--out", ce_out, "write params + measure + matrix here");

    int fib_max_k = 20;
    CLI::App* fibonacci = app.add_subcommand("fibonacci", "the golden-ratio example");
    fibonacci->add_option("--max-k", fib_max_k, "highest power in the table")
        ->capture_default_str();

    std::string verify_suite = "all";
    int verify_trials = 500;
    std::uint64_t verify_seed = 42;
    int verify_dim_max = 4;
    CLI::App* verify = app.add_subcommand("verify", "run the seeded property suites");
    verify->add_option("--suite", verify_suite,
                       "all|kadison|hansen|lieb-ruskai|hankel|theorem|dilation|"
                       "counterexample-grid")
        ->capture_default_str();
    verify->add_option("--trials", verify_trials, "trials per suite")->capture_default_str();
    verify->add_option("--seed", verify_seed, "corpus seed")->capture_default_str();
    verify->add_option("--dim-max", verify_dim_max, "largest measure dimension")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    ovm::cli::RunReport report;
    if (check->parsed()) {
        report = ovm::cli::cmd_check(check_file, check_moments, check_hankel, global);
    } else if (dilate->parsed()) {
        report = ovm::cli::cmd_dilate(dilate_file, dilate_out, global);
    } else if (counterexample->parsed()) {
        report = ovm::cli::cmd_counterexample(ce_p, ce_q, ce_tau, ce_dim, ce_out, global);
    } else if (fibonacci->parsed()) {
        report = ovm::cli::cmd_fibonacci(fib_max_k, global);
    } else {
        report = ovm::cli::cmd_verify(verify_suite, verify_trials, verify_seed, verify_dim_max,
                                      global);
    }

    if (global.json_output) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << report.to_text();
    }
    return report.exit_code();
}
