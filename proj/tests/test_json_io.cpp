#include "ovm/json_io.hpp"

#include "ovm/corpus.hpp"
#include "ovm/counterexample.hpp"
#include "ovm/dilation.hpp"

#include <doctest.h>

#include <cstdlib>
#include <string>

using namespace ovm;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
    if (const char* dir = std::getenv("OVM_FIXTURE_DIR"))
        return std::string(dir) + "/" + name;
    return "tests/fixtures/" + name;  // running from the source root
}

}  // namespace

TEST_CASE("matrix documents round-trip") {
    for (int trial = 0; trial < 20; ++trial) {
        corpus::Rng rng(corpus::derive_seed(89, static_cast<std::uint64_t>(trial)));
        const HermitianMatrix a = corpus::random_hermitian(rng, rng.uniform_int(1, 5));
        const HermitianMatrix back = io::matrix_from_json(io::matrix_to_json(a));
        CHECK((a.mat() - back.mat()).norm() == 0.0);
    }
}

TEST_CASE("malformed matrix documents raise field-level errors") {
    CHECK_THROWS_AS(io::matrix_from_json(json{{"re", {{1.0, 0.0}}}}), io::InputError);
    CHECK_THROWS_AS(
        io::matrix_from_json(json{{"re", {{1.0, 0.0}, {0.0, 1.0}}}, {"im", {{0.0}}}}),
        io::InputError);
    CHECK_THROWS_AS(io::matrix_from_json(json{{"re", {{1.0, 0.0}}}, {"im", {{0.0, 0.0}}}}),
                    io::InputError);  // non-square
    // non-Hermitian content
    CHECK_THROWS_AS(io::matrix_from_json(json{{"re", {{0.0, 1.0}, {0.0, 0.0}}},
                                              {"im", {{0.0, 0.0}, {0.0, 0.0}}}}),
                    io::InputError);
}

TEST_CASE("povm documents round-trip") {
    for (int trial = 0; trial < 10; ++trial) {
        corpus::Rng rng(corpus::derive_seed(97, static_cast<std::uint64_t>(trial)));
        const FiniteOVM f = corpus::random_povm(rng, rng.uniform_int(1, 4),
                                                rng.uniform_int(2, 5));
        const FiniteOVM back = io::povm_from_json(io::povm_to_json(f));
        REQUIRE(back.atom_count() == f.atom_count());
        for (int i = 0; i < f.atom_count(); ++i) {
            CHECK(back.atoms()[static_cast<std::size_t>(i)].lambda ==
                  f.atoms()[static_cast<std::size_t>(i)].lambda);
            CHECK(approx_eq(back.atoms()[static_cast<std::size_t>(i)].effect,
                            f.atoms()[static_cast<std::size_t>(i)].effect, 1e-14));
        }
    }
}

TEST_CASE("the stored golden-ratio fixture matches the built-in example") {
    const FiniteOVM stored = io::load_povm(fixture("fibonacci_povm.json"));
    const FiniteOVM built = fibonacci_example().f;
    REQUIRE(stored.atom_count() == 2);
    CHECK(stored.atoms()[0].lambda == doctest::Approx(built.atoms()[0].lambda).epsilon(1e-15));
    CHECK(stored.atoms()[1].lambda == doctest::Approx(built.atoms()[1].lambda).epsilon(1e-15));
    CHECK(approx_eq(stored.atoms()[0].effect, built.atoms()[0].effect, 1e-14));
    CHECK(approx_eq(stored.atoms()[1].effect, built.atoms()[1].effect, 1e-14));
    CHECK(stored.normalized());
}

TEST_CASE("povm documents validate invariants") {
    json doc = json::parse(R"({"dim": 1, "atoms": [
        {"lambda": 0.0, "effect": {"re": [[-0.2]], "im": [[0.0]]}},
        {"lambda": 1.0, "effect": {"re": [[1.2]], "im": [[0.0]]}}]})");
    CHECK_THROWS_AS(io::povm_from_json(doc), io::InputError);

    json missing = json::parse(R"({"dim": 1})");
    CHECK_THROWS_WITH_AS(io::povm_from_json(missing), doctest::Contains("atoms"),
                         io::InputError);

    json wrong_dim = json::parse(R"({"dim": 2, "atoms": [
        {"lambda": 0.0, "effect": {"re": [[1.0]], "im": [[0.0]]}}]})");
    CHECK_THROWS_AS(io::povm_from_json(wrong_dim), io::InputError);
}

TEST_CASE("dilation documents round-trip with derived fields") {
    const FiniteOVM f = fibonacci_example().f;
    const NaimarkDilation d = dilate_minimal(f);
    const NaimarkDilation back = io::dilation_from_json(io::dilation_to_json(d));
    CHECK(back.small_dim == d.small_dim);
    CHECK(back.big_dim == d.big_dim);
    CHECK((back.embedding - d.embedding).norm() == 0.0);
    CHECK((back.S.mat() - d.S.mat()).norm() <= 1e-15);
    CHECK((back.P.mat() - d.P.mat()).norm() <= 1e-15);
    REQUIRE(back.blocks.size() == d.blocks.size());
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
        CHECK((back.blocks[i].projection.mat() - d.blocks[i].projection.mat()).norm() == 0.0);
}

TEST_CASE("params documents round-trip") {
    const CounterexampleParams params = solve_params(2, 3, 2.0);
    const CounterexampleParams back = io::params_from_json(io::params_to_json(params));
    CHECK(back.p == 2);
    CHECK(back.q == 3);
    CHECK(back.tau == 2.0);
    CHECK(back.alpha == params.alpha);
    CHECK(back.lambda2 == params.lambda2);
}

TEST_CASE("verdict documents carry the contract keys") {
    const FibonacciExample example = fibonacci_example();
    const json doc = io::verdict_to_json(certify_two_moment(example.t, example.f, 2, 3));
    CHECK(doc.contains("moments_match"));
    CHECK(doc.contains("pair_in_omega"));
    CHECK(doc.contains("direct_spectral"));
    CHECK(doc.contains("theorem_consistent"));
    CHECK(doc.contains("residuals"));
    CHECK(doc["moments_match"].size() == 2);
    CHECK(doc["pair_in_omega"] == false);
}

TEST_CASE("file loading reports parse errors as input errors") {
    CHECK_THROWS_AS(io::load_povm(fixture("does_not_exist.json")), io::InputError);
}
