#include "ovm/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ovm::io {

namespace {

Eigen::MatrixXd real_part_from_json(const json& part, const std::string& field) {
    if (!part.is_array() || part.empty())
        throw InputError(field + ": expected a nonempty array of rows");
    const std::size_t rows = part.size();
    std::size_t cols = 0;
    Eigen::MatrixXd m;
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = part[i];
        if (!row.is_array())
            throw InputError(field + "[" + std::to_string(i) + "]: expected an array");
        if (i == 0) {
            cols = row.size();
            if (cols != rows) throw InputError(field + ": matrix must be square");
            m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
        } else if (row.size() != cols) {
            throw InputError(field + "[" + std::to_string(i) + "]: ragged row");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const json& entry = row[j];
            if (!entry.is_number())
                throw InputError(field + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "]: expected a number");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry.get<double>();
        }
    }
    return m;
}

json real_part_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

const json& require_field(const json& doc, const std::string& key, const std::string& where) {
    if (!doc.is_object() || !doc.contains(key))
        throw InputError(where + ": missing field \"" + key + "\"");
    return doc.at(key);
}

double require_number(const json& doc, const std::string& key, const std::string& where) {
    const json& value = require_field(doc, key, where);
    if (!value.is_number()) throw InputError(where + "." + key + ": expected a number");
    return value.get<double>();
}

int require_int(const json& doc, const std::string& key, const std::string& where) {
    const json& value = require_field(doc, key, where);
    if (!value.is_number_integer()) throw InputError(where + "." + key + ": expected an integer");
    return value.get<int>();
}

}  // namespace

json complex_matrix_to_json(const Matrix& m) {
    return json{{"re", real_part_to_json(m.real())}, {"im", real_part_to_json(m.imag())}};
}

Matrix complex_matrix_from_json(const json& doc, const std::string& field) {
    const Eigen::MatrixXd re = real_part_from_json(require_field(doc, "re", field), field + ".re");
    const Eigen::MatrixXd im = real_part_from_json(require_field(doc, "im", field), field + ".im");
    if (re.rows() != im.rows() || re.cols() != im.cols())
        throw InputError(field + ": re and im shapes differ");
    Matrix m(re.rows(), re.cols());
    m.real() = re;
    m.imag() = im;
    return m;
}

json matrix_to_json(const HermitianMatrix& m) { return complex_matrix_to_json(m.mat()); }

HermitianMatrix matrix_from_json(const json& doc, const std::string& field) {
    const Matrix m = complex_matrix_from_json(doc, field);
    const double asym = (m - m.adjoint().eval()).norm();
    if (asym > 1e-8 * (1.0 + m.norm()))
        throw InputError(field + ": matrix is not Hermitian (asymmetry " + std::to_string(asym) +
                         ")");
    return HermitianMatrix(m);
}

json povm_to_json(const FiniteOVM& f) {
    json atoms = json::array();
    for (const Atom& atom : f.atoms())
        atoms.push_back(json{{"lambda", atom.lambda}, {"effect", matrix_to_json(atom.effect)}});
    return json{{"dim", f.dim()}, {"atoms", std::move(atoms)}};
}

FiniteOVM povm_from_json(const json& doc) {
    const int dim = require_int(doc, "dim", "povm");
    const json& atoms_doc = require_field(doc, "atoms", "povm");
    if (!atoms_doc.is_array()) throw InputError("povm.atoms: expected an array");
    std::vector<Atom> atoms;
    atoms.reserve(atoms_doc.size());
    for (std::size_t i = 0; i < atoms_doc.size(); ++i) {
        const std::string where = "povm.atoms[" + std::to_string(i) + "]";
        const json& entry = atoms_doc[i];
        const double lambda = require_number(entry, "lambda", where);
        HermitianMatrix effect =
            matrix_from_json(require_field(entry, "effect", where), where + ".effect");
        atoms.push_back({lambda, std::move(effect)});
    }
    try {
        return FiniteOVM(dim, std::move(atoms));
    } catch (const std::invalid_argument& error) {
        throw InputError(std::string("povm: ") + error.what());
    }
}

json dilation_to_json(const NaimarkDilation& d) {
    json blocks = json::array();
    for (const DilationBlock& block : d.blocks)
        blocks.push_back(
            json{{"lambda", block.lambda}, {"projection", matrix_to_json(block.projection)}});
    return json{{"small_dim", d.small_dim},
                {"big_dim", d.big_dim},
                {"embedding",
                 json{{"re", real_part_to_json(d.embedding.real())},
                      {"im", real_part_to_json(d.embedding.imag())}}},
                {"blocks", std::move(blocks)}};
}

NaimarkDilation dilation_from_json(const json& doc) {
    NaimarkDilation d;
    d.small_dim = require_int(doc, "small_dim", "dilation");
    d.big_dim = require_int(doc, "big_dim", "dilation");
    const json& embedding = require_field(doc, "embedding", "dilation");
    // the embedding is a rectangular block, so bypass the square-matrix reader
    const json& re_doc = require_field(embedding, "re", "dilation.embedding");
    const json& im_doc = require_field(embedding, "im", "dilation.embedding");
    if (!re_doc.is_array() || !im_doc.is_array() || re_doc.size() != im_doc.size())
        throw InputError("dilation.embedding: malformed re/im arrays");
    d.embedding.resize(d.big_dim, d.small_dim);
    if (static_cast<int>(re_doc.size()) != d.big_dim)
        throw InputError("dilation.embedding: row count differs from big_dim");
    for (int i = 0; i < d.big_dim; ++i) {
        const json& re_row = re_doc[static_cast<std::size_t>(i)];
        const json& im_row = im_doc[static_cast<std::size_t>(i)];
        if (!re_row.is_array() || static_cast<int>(re_row.size()) != d.small_dim ||
            !im_row.is_array() || static_cast<int>(im_row.size()) != d.small_dim)
            throw InputError("dilation.embedding: row " + std::to_string(i) + " is malformed");
        for (int j = 0; j < d.small_dim; ++j) {
            d.embedding(i, j) = Complex(re_row[static_cast<std::size_t>(j)].get<double>(),
                                        im_row[static_cast<std::size_t>(j)].get<double>());
        }
    }
    const json& blocks = require_field(doc, "blocks", "dilation");
    if (!blocks.is_array()) throw InputError("dilation.blocks: expected an array");
    Matrix s = Matrix::Zero(d.big_dim, d.big_dim);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const std::string where = "dilation.blocks[" + std::to_string(i) + "]";
        const double lambda = require_number(blocks[i], "lambda", where);
        HermitianMatrix projection = matrix_from_json(
            require_field(blocks[i], "projection", where), where + ".projection");
        if (projection.dim() != d.big_dim)
            throw InputError(where + ".projection: dimension differs from big_dim");
        s += lambda * projection.mat();
        d.blocks.push_back({lambda, std::move(projection)});
    }
    d.S = HermitianMatrix(s);
    d.P = HermitianMatrix(d.embedding * d.embedding.adjoint());
    return d;
}

json params_to_json(const CounterexampleParams& params) {
    return json{{"p", params.p},         {"q", params.q},           {"tau", params.tau},
                {"alpha", params.alpha}, {"beta", params.beta},     {"lambda1", params.lambda1},
                {"lambda2", params.lambda2}};
}

CounterexampleParams params_from_json(const json& doc) {
    CounterexampleParams params;
    params.p = require_int(doc, "p", "params");
    params.q = require_int(doc, "q", "params");
    params.tau = require_number(doc, "tau", "params");
    params.alpha = require_number(doc, "alpha", "params");
    params.beta = require_number(doc, "beta", "params");
    params.lambda1 = require_number(doc, "lambda1", "params");
    params.lambda2 = require_number(doc, "lambda2", "params");
    return params;
}

json verdict_to_json(const Verdict& v) {
    return json{{"moments_match", v.moments_match},
                {"pair_in_omega", v.pair_in_omega},
                {"direct_spectral", v.direct_spectral},
                {"theorem_consistent", v.theorem_consistent},
                {"residuals", v.residuals}};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& error) {
        throw InputError(path + ": " + error.what());
    }
}

FiniteOVM load_povm(const std::string& path) { return povm_from_json(load_json(path)); }

void save_json(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << doc.dump(2) << "\n";
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char byte = 0;
    while (in.get(byte)) {
        hash ^= static_cast<std::uint8_t>(byte);
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

}  // namespace ovm::io
