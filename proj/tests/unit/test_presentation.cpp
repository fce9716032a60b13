#include <random>

#include "doctest.h"
#include "superym/io.hpp"
#include "superym/presentation.hpp"
#include "superym/resolution.hpp"
#include "superym/verify.hpp"
#include "test_util.hpp"

using namespace sym;

namespace {

SymPresentation quartic_free_fixture() {
    SymPresentation p;
    p.n = 3;
    p.s = 2;
    p.gamma.n = 3;
    p.gamma.s = 2;
    const Matrix I = {{1, 0}, {0, 1}}, Zm = {{1, 0}, {0, -1}}, Xm = {{0, 1}, {1, 0}};
    p.gamma.mats = {I, Zm, Xm};
    p.metric = Matrix{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    p.gamma_tilde = std::vector<Matrix>{Matrix{{-1, 0}, {0, -1}}, Zm, Xm};
    return p;
}

}  // namespace

TEST_CASE("canonical preset") {
    const auto p = SymPresentation::preset(3, 1);
    CHECK(p.gamma.mats.size() == 3);
    CHECK(p.gamma.mats[0] == Matrix{{1}});
    CHECK(p.gamma.mats[1] == Matrix{{0}});
    CHECK(p.orthonormal());
    CHECK(check_nondegenerate(p).nondegenerate);
    const auto rels = build_relations(p);
    REQUIRE(rels.size() == 4);
    for (std::size_t i = 0; i < 3; ++i) CHECK(rels[i].weight(p.alphabet()) == 6);
    CHECK(rels[3].weight(p.alphabet()) == 5);
    // r_{1,1} = [x1, z1]
    CHECK(rels[3] == super_commutator(p.alphabet(), TensorPoly::letter(0), TensorPoly::letter(3)));
}

TEST_CASE("validation rejects malformed Gamma") {
    SymPresentation p = SymPresentation::preset(2, 2);
    p.gamma.mats[0][0][1] = 1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    SymPresentation q = SymPresentation::preset(2, 2);
    q.gamma.mats.pop_back();
    CHECK_THROWS_AS(q.validate(), std::invalid_argument);
    SymPresentation r = SymPresentation::preset(2, 1);
    r.metric = Matrix{{1, 1}, {1, 1}};
    CHECK_THROWS(r.metric_upper());
}

TEST_CASE("degenerate Gamma is detected") {
    SymPresentation p = SymPresentation::preset(2, 2);
    p.gamma.mats = {Matrix{{1, 0}, {0, 0}}, Matrix{{1, 0}, {0, 0}}};
    CHECK_FALSE(check_nondegenerate(p).nondegenerate);
    SymPresentation q = SymPresentation::preset(2, 2);
    q.gamma.mats = {Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 1}}};
    const auto nd = check_nondegenerate(q);
    CHECK(nd.nondegenerate);
    CHECK(nd.witness.size() == 2);
}

TEST_CASE("superpotential reproduces the relations for random Gamma") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        const auto p = testing::random_presentation(rng, 3, 2);
        CHECK(superpotential_check(p).ok());
        CHECK(omega_identity(p));
    }
}

TEST_CASE("superpotential with a general metric") {
    SymPresentation p = quartic_free_fixture();
    CHECK(superpotential_check(p).ok());
    CHECK(omega_identity(p));
}

TEST_CASE("equivariance fixture with vanishing quartic form") {
    const auto p = quartic_free_fixture();
    CHECK(check_equivariance_identity(p));
    CHECK(quartic_form(p).is_zero());
    const auto derived = derive_gamma_tilde(p);
    CHECK(equivariance_holds(p, derived));
}

TEST_CASE("canonical (3,1) has a nonzero quartic form") {
    CHECK_FALSE(quartic_form(SymPresentation::preset(3, 1)).is_zero());
}

TEST_CASE("normalization keeps the Hilbert series") {
    std::mt19937 rng(5);
    const auto p = testing::random_nondegenerate(rng, 3, 2);
    const auto np = normalize_presentation(p);
    CHECK(np.presentation.n == 3);
    CHECK(check_nondegenerate(np.presentation).nondegenerate);
}

TEST_CASE("presentation JSON round trip and hash") {
    const auto p = quartic_free_fixture();
    const json j = presentation_to_json(p);
    const auto q = presentation_from_json(j);
    CHECK(presentation_to_json(q) == j);
    CHECK(presentation_hash(p) == presentation_hash(q));
    CHECK(presentation_hash(p) != presentation_hash(SymPresentation::preset(3, 2)));
    CHECK(presentation_hash(p).size() == 16);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK_THROWS(presentation_from_json(json::parse(R"({"n":2,"s":1,"gamma":[[["1"]]]})")));
    CHECK_THROWS(presentation_from_json(json::parse(R"({"n":1,"s":1,"gamma":[[["1/0"]]]})")));
}
