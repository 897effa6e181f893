// report.hpp — command implementations behind the `ovm` CLI. Each command
// builds a RunReport with a text rendering, a machine JSON transcript, and a
// stable exit status (0 pass, 1 violation, 2 input_error). Identical
// (command, seed) pairs produce byte-identical reports.

#pragma once

#include "ovm/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ovm::cli {

enum class ExitStatus { pass = 0, violation = 1, input_error = 2 };

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, digest)
    nlohmann::json results;
    std::vector<std::pair<std::string, double>> residual_summary;  // max residual per check
    ExitStatus exit_status = ExitStatus::pass;
    std::string error_message;

    std::string to_text() const;
    nlohmann::json to_json() const;
    int exit_code() const { return static_cast<int>(exit_status); }
};

struct GlobalOptions {
    double tol = 1e-9;
    bool json_output = false;
};

// Moments, intrinsic noise, spectrality and Hankel positivity of a stored
// measure.
RunReport cmd_check(const std::string& file, int max_moment, int max_hankel,
                    const GlobalOptions& global);

// Minimal dilation of a stored measure; optionally writes the dilation
// document.
RunReport cmd_dilate(const std::string& file, const std::string& out,
                     const GlobalOptions& global);

// Counterexample synthesis at (p, q, tau) in dimension dim; refuses pairs in
// the forcing set. Optionally writes params + measure + dilation matrix with
// a verification transcript.
RunReport cmd_counterexample(int p, int q, double tau, int dim, const std::string& out,
                             const GlobalOptions& global);

// The golden-ratio example with the compressed-power table up to max_k.
RunReport cmd_fibonacci(int max_k, const GlobalOptions& global);

// Seeded property suites; see verify.hpp.
RunReport cmd_verify(const std::string& suite, int trials, std::uint64_t seed, int dim_max,
                     const GlobalOptions& global);

}  // namespace ovm::cli
