// json_io.hpp — the on-disk document formats: matrices as {"re", "im"}
// row-major parts, measures as {"dim", "atoms"}, dilations, counterexample
// parameters, and verdicts. Readers validate shape and invariants and raise
// InputError with a field path on malformed documents.

#pragma once

#include "ovm/characterization.hpp"
#include "ovm/counterexample.hpp"
#include "ovm/dilation.hpp"
#include "ovm/hermitian.hpp"
#include "ovm/povm.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ovm::io {

using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const json& doc, const std::string& field = "matrix");

json complex_matrix_to_json(const Matrix& m);
Matrix complex_matrix_from_json(const json& doc, const std::string& field = "matrix");

json povm_to_json(const FiniteOVM& f);
FiniteOVM povm_from_json(const json& doc);

json dilation_to_json(const NaimarkDilation& d);
NaimarkDilation dilation_from_json(const json& doc);

json params_to_json(const CounterexampleParams& params);
CounterexampleParams params_from_json(const json& doc);

json verdict_to_json(const Verdict& v);

json load_json(const std::string& path);
FiniteOVM load_povm(const std::string& path);
void save_json(const json& doc, const std::string& path);

// FNV-1a digest of a file's bytes, as fixed-width hex; used to fingerprint
// command inputs in reports.
std::string file_digest(const std::string& path);

}  // namespace ovm::io
