#include <random>

#include "doctest.h"
#include "superym/ce.hpp"
#include "superym/dixmier.hpp"
#include "superym/io.hpp"
#include "test_util.hpp"

using namespace sym;

namespace {

EvenFunctional central(const SuperLieAlgebra& g) {
    EvenFunctional f(g.dim());
    f[g.index_of("z")] = 1;
    return f;
}

// Change of basis e'_i = sum_j M_ij e_j within each (parity, weight) block.
SuperLieAlgebra change_basis(const SuperLieAlgebra& g, const Matrix& M) {
    const std::size_t n = g.dim();
    const Matrix Minv = dense_inverse(M);
    auto row = [&](const Matrix& A, std::size_t i) {
        std::map<int, Scalar> acc;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_zero(A[i][j])) acc[static_cast<int>(j)] = A[i][j];
        return sparse_from_map(acc);
    };
    std::vector<BasisLabel> labels = g.basis();
    for (auto& l : labels) l.name += "'";
    SuperLieAlgebra h(labels);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const SparseVec b = g.bracket(row(M, i), row(M, j));
            std::map<int, Scalar> acc;
            for (const auto& [k, c] : b)
                for (std::size_t m = 0; m < n; ++m)
                    if (!is_zero(Minv[k][m])) acc[static_cast<int>(m)] += c * Minv[k][m];
            h.set_bracket(static_cast<int>(i), static_cast<int>(j), sparse_from_map(acc));
        }
    return h;
}

}  // namespace

TEST_CASE("Heisenberg weights") {
    for (auto [r, t] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}, {2, 3}, {1, 0}}) {
        const auto g = heis(r, t);
        CHECK(validate(g).ok());
        const auto w = weight_of(g, central(g));
        CHECK(w.weyl == static_cast<std::size_t>(r));
        CHECK(w.clifford == static_cast<std::size_t>(t));
        const auto P = vergne_polarization(g, central(g));
        CHECK(P.ok);
        CHECK(P.subalgebra);
        CHECK(P.subordinate);
    }
    const auto g = heis(2, 3);
    CHECK(weight_of(g, EvenFunctional(g.dim())) == IdealWeight{0, 0});
}

TEST_CASE("Kirillov form symmetry") {
    const auto g = heis(2, 3);
    const auto K = kirillov_form(g, central(g));
    CHECK(K.cross_zero);
    for (std::size_t i = 0; i < K.even_block.size(); ++i)
        for (std::size_t j = 0; j < K.even_block.size(); ++j) CHECK(K.even_block[i][j] == -K.even_block[j][i]);
    for (std::size_t i = 0; i < K.odd_block.size(); ++i)
        for (std::size_t j = 0; j < K.odd_block.size(); ++j) CHECK(K.odd_block[i][j] == K.odd_block[j][i]);
}

TEST_CASE("weight is invariant under a block change of basis") {
    std::mt19937 rng(17);
    const auto g = heis(1, 2);
    for (int trial = 0; trial < 5; ++trial) {
        const std::size_t n = g.dim();
        Matrix M = identity_matrix(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && g.label(i).parity == g.label(j).parity && g.label(i).name != "z" &&
                    g.label(j).name != "z")
                    M[i][j] = testing::small_rational(rng, 2);
        if (is_zero(dense_det(M))) continue;
        const auto h = change_basis(g, M);
        CHECK(validate(h).ok());
        EvenFunctional f(n);
        f[h.index_of("z'")] = 1;
        CHECK(weight_of(h, f) == weight_of(g, central(g)));
    }
}

TEST_CASE("Clifford-Weyl arithmetic") {
    CWAlgebra cw(1, 1);
    const auto p = cw.letter(cw.p(0)), q = cw.letter(cw.q(0)), c = cw.letter(cw.c());
    CHECK(cw.add(cw.multiply(p, q), cw.scale(cw.multiply(q, p), -1)) == cw.scale(cw.unit(), -1));
    CHECK(cw.multiply(c, c) == cw.scale(cw.unit(), Scalar(1, 2)));
    CWAlgebra cw2(0, 2);
    const auto a = cw2.letter(cw2.a(0)), b = cw2.letter(cw2.b(0));
    CHECK(cw2.multiply(a, a).empty());
    CHECK(cw2.add(cw2.multiply(b, a), cw2.multiply(a, b)) == cw2.unit());
}

TEST_CASE("Clifford-Weyl associativity on random words") {
    std::mt19937 rng(23);
    CWAlgebra cw(2, 3);
    std::uniform_int_distribution<int> letter(0, static_cast<int>(cw.letters()) - 1), len(1, 4);
    auto random_element = [&] {
        std::vector<int> w;
        for (int k = len(rng); k > 0; --k) w.push_back(letter(rng));
        return cw.add(cw.normal_form(w), cw.scale(cw.letter(letter(rng)), testing::small_rational(rng)));
    };
    for (int trial = 0; trial < 30; ++trial) {
        const auto u = random_element(), v = random_element(), w = random_element();
        CHECK(cw.multiply(cw.multiply(u, v), w) == cw.multiply(u, cw.multiply(v, w)));
    }
}

TEST_CASE("polarization of a truncated Yang-Mills algebra") {
    auto m = LieQuotientModel::for_presentation(SymPresentation::preset(3, 1), 2);
    const auto g = m.export_algebra();
    EvenFunctional f(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.label(i).parity == Parity::Even) f[i] = static_cast<long>(i + 1);
    const auto P = vergne_polarization(g, f);
    CHECK(P.ok);
    CHECK(P.subalgebra);
    CHECK(P.subordinate);
    CHECK(P.dim_even == P.target_even);
}

TEST_CASE("functional validation") {
    const auto g = heis(1, 1);
    CHECK_THROWS(make_functional(g, {{"c", Scalar(1)}}));
    CHECK_THROWS(make_functional(g, {{"nope", Scalar(1)}}));
    const auto f = make_functional(g, {{"z", Scalar(2)}});
    CHECK(evaluate(f, {{g.index_of("z"), Scalar(3)}}) == 6);
}

TEST_CASE("algebra JSON round trip") {
    const auto g = heis(2, 3);
    const json j = algebra_to_json(g);
    const auto h = algebra_from_json(j);
    CHECK(algebra_to_json(h) == j);
    CHECK(weight_of(h, central(h)) == weight_of(g, central(g)));
    CHECK_THROWS(algebra_from_json(json::parse(R"({"basis":[{"name":"a","parity":"up"}]})")));
}

TEST_CASE("Chevalley-Eilenberg homology of small algebras") {
    const SuperLieAlgebra odd_line({{"z", Parity::Odd, 3}});
    const auto r = ce_homology(odd_line, 4);
    for (int k = 0; k <= 4; ++k) CHECK(r.betti(k) == 1);
    const SuperLieAlgebra even_line({{"x", Parity::Even, 2}});
    const auto e = ce_homology(even_line, 3);
    CHECK(e.betti(0) == 1);
    CHECK(e.betti(1) == 1);
    CHECK(e.betti(2) == 0);
    const auto h = heis(1, 0);
    const auto rh = ce_homology(h, 3);
    CHECK(rh.betti(1) == 2);
    CHECK(rh.betti(2) == 2);
    CHECK(rh.betti(3) == 1);
}

TEST_CASE("d^2 = 0 on random super Lie algebras") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = testing::random_super_lie(rng);
        CHECK(validate(g).ok());
        CHECK(ce_homology(g, 3).d_squared_zero);
    }
}
