#include <random>

#include "doctest.h"
#include "superym/assoc_model.hpp"
#include "superym/freegens.hpp"
#include "superym/lie_model.hpp"
#include "superym/resolution.hpp"
#include "superym/verify.hpp"
#include "test_util.hpp"

using namespace sym;

TEST_CASE("free Lie algebra without relations") {
    const Alphabet a({{"a", Parity::Even, 1}, {"b", Parity::Even, 1}});
    const LieQuotientModel m(a, {}, 6);
    const std::vector<std::size_t> witt = {2, 1, 2, 3, 6, 9};
    for (int w = 1; w <= 6; ++w) CHECK(m.dim(w) == witt[w - 1]);
}

TEST_CASE("free super Lie algebra on one odd generator") {
    const Alphabet a({{"z", Parity::Odd, 1}});
    const LieQuotientModel m(a, {}, 4);
    CHECK(m.dim(1) == 1);
    CHECK(m.dim(2) == 1);  // [z,z]
    CHECK(m.dim(3) == 0);  // [z,[z,z]] = 0
    CHECK(m.dim(4) == 0);
}

TEST_CASE("Lie model agrees with the Hilbert series") {
    for (auto [n, s] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {3, 0}}) {
        const auto p = SymPresentation::preset(n, s);
        const auto nu = dims_ym(p, 10);
        const auto m = LieQuotientModel::for_presentation(p, 9);
        for (int w = 1; w <= 10; ++w) CHECK(static_cast<std::int64_t>(m.dim(w)) == nu[w - 1]);
    }
}

TEST_CASE("Hilbert series is independent of a random nondegenerate Gamma") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 3; ++trial) {
        const auto p = testing::random_nondegenerate(rng, 3, 2);
        const auto nu = dims_ym(p, 9);
        const auto m = LieQuotientModel::for_presentation(p, 8);
        for (int w = 1; w <= 9; ++w) CHECK(static_cast<std::int64_t>(m.dim(w)) == nu[w - 1]);
    }
}

TEST_CASE("relations vanish in the Lie model") {
    const auto p = SymPresentation::preset(3, 1);
    const auto m = LieQuotientModel::for_presentation(p, 6);
    for (const auto& r : build_relations(p)) CHECK(m.in_ideal(r));
    const auto x12 = lie_expand(p.alphabet(), BracketExpr::right_normed({0, 1}));
    CHECK_FALSE(m.in_ideal(x12));
    CHECK(m.expansion(m.coordinates(x12)) == x12);
}

TEST_CASE("exported algebra is a nilpotent super Lie algebra") {
    auto m = LieQuotientModel::for_presentation(SymPresentation::preset(3, 1), 5);
    const auto g = m.export_algebra();
    const auto v = validate(g);
    CHECK(v.ok());
    CHECK(g.dim() == 15);
}

TEST_CASE("associative model matches the enveloping Hilbert series") {
    const auto p = SymPresentation::preset(3, 1);
    const auto A = AssocQuotientModel::for_presentation(p, 14);
    const auto h = hilbert_series_YM(p, 14);
    for (int w = 0; w <= 14; ++w) CHECK(Scalar(static_cast<long>(A.dim(w))) == h[w]);
}

TEST_CASE("associative normal forms are idempotent") {
    const auto p = SymPresentation::preset(2, 2);
    const auto A = AssocQuotientModel::for_presentation(p, 10);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> g(0, 3);
    for (int trial = 0; trial < 30; ++trial) {
        Word w;
        while (w.weight(p.alphabet()) < 8) w.push_back(g(rng));
        if (w.weight(p.alphabet()) > 10) continue;
        const auto nf = A.normal_form(TensorPoly::word(w));
        CHECK(A.normal_form(nf) == nf);
        CHECK(A.in_ideal(TensorPoly::word(w) - nf));
    }
}

TEST_CASE("resolution checks at low weight") {
    const auto A = AssocQuotientModel::for_presentation(SymPresentation::preset(3, 1), 10);
    CHECK(verify_resolution(A, 10, ResolutionSide::Left).ok());
    CHECK(verify_resolution(A, 10, ResolutionSide::Right).ok());
}

TEST_CASE("resolution check fails on a non-Koszul relation set") {
    // k[a]/(a^2) has an infinite minimal resolution.
    const Alphabet a({{"a", Parity::Even, 2}});
    const AssocQuotientModel A(a, {TensorPoly::word({0, 0})}, 12);
    CHECK_FALSE(verify_resolution(A, 12, ResolutionSide::Left).ok());
    CHECK_THROWS(verify_resolution(A, 14, ResolutionSide::Left));
}

TEST_CASE("ym(1,1) complex is not exact at weight 9") {
    const auto A = AssocQuotientModel::for_presentation(SymPresentation::preset(1, 1), 10);
    const auto r = verify_resolution(A, 10, ResolutionSide::Left);
    for (const auto& w : r.weights) CHECK(w.ok() == (w.weight != 9));
}

TEST_CASE("semidirect decomposition") {
    CHECK(semidirect_check(SymPresentation::preset(3, 1), 9).ok());
    CHECK(semidirect_check(SymPresentation::preset(2, 2), 9).ok());
}

TEST_CASE("free generators of tym for s = 0") {
    auto m = LieQuotientModel::for_presentation(SymPresentation::preset(3, 0), 7);
    m.compute_structure_constants();
    const auto r = extract_free_generators(m, IdealSpec::Tym, 3, 0, 8);
    CHECK(r.ok());
    CHECK_THROWS(parse_ideal_spec("nope"));
    CHECK(to_string(parse_ideal_spec("k1s")) == "k1s");
}
