#include <random>

#include "doctest.h"
#include "superym/sparse.hpp"
#include "superym/tensor_poly.hpp"
#include "test_util.hpp"

using namespace sym;

TEST_CASE("rational parsing") {
    CHECK(parse_scalar("3/6") == Scalar(1, 2));
    CHECK(parse_scalar("-4") == Scalar(-4));
    CHECK(parse_scalar(" +2 / -4 ") == Scalar(-1, 2));
    CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
    CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
}

TEST_CASE("alphabet and words") {
    const Alphabet a = Alphabet::sym(3, 2);
    REQUIRE(a.size() == 5);
    CHECK(a[0].name == "x1");
    CHECK(a[3].name == "z1");
    CHECK(a[3].parity == Parity::Odd);
    CHECK(a[0].weight == 2);
    CHECK(a[4].weight == 3);
    CHECK(a.index_of("z2") == 4);
    CHECK(a.index_of("w") == -1);
    const Word w{0, 3, 4};
    CHECK(w.weight(a) == 8);
    CHECK(w.parity(a) == Parity::Even);
    CHECK(w.slice(1, 3) == Word{3, 4});
    CHECK(Word{0}.concat(Word{1, 2}) == Word{0, 1, 2});
    CHECK(Word{1} < Word{0, 0});
}

TEST_CASE("super commutator and Koszul signs") {
    const Alphabet a = Alphabet::sym(1, 2);
    const auto x = TensorPoly::letter(0), z1 = TensorPoly::letter(1), z2 = TensorPoly::letter(2);
    CHECK(super_commutator(a, z1, z1) == TensorPoly::word({1, 1}, 2));
    CHECK(super_commutator(a, x, x).is_zero());
    CHECK(super_commutator(a, z1, z2) == super_commutator(a, z2, z1));
    CHECK(super_commutator(a, x, z1) == super_commutator(a, z1, x) * Scalar(-1));
    CHECK(koszul(Parity::Odd, Parity::Odd) == -1);
    CHECK(koszul(Parity::Odd, Parity::Even) == 1);
}

TEST_CASE("super Jacobi identity on random brackets") {
    std::mt19937 rng(7);
    const Alphabet a = Alphabet::sym(2, 2);
    std::uniform_int_distribution<int> g(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const int i = g(rng), j = g(rng), k = g(rng);
        const auto X = TensorPoly::letter(i), Y = TensorPoly::letter(j), Z = TensorPoly::letter(k);
        const Parity px = a[i].parity, py = a[j].parity, pz = a[k].parity;
        // [X,[Y,Z]] = [[X,Y],Z] + (-1)^{|X||Y|} [Y,[X,Z]]
        const auto lhs = super_commutator(a, X, super_commutator(a, Y, Z));
        const auto rhs = super_commutator(a, super_commutator(a, X, Y), Z) +
                         super_commutator(a, Y, super_commutator(a, X, Z)) * Scalar(koszul(px, py));
        CHECK(lhs == rhs);
        (void)pz;
    }
}

TEST_CASE("lie expansion of right-normed brackets") {
    const Alphabet a = Alphabet::sym(2, 0);
    const auto e = lie_expand(a, BracketExpr::right_normed({0, 1}));
    CHECK(e == TensorPoly::word({0, 1}) - TensorPoly::word({1, 0}));
    CHECK(lie_expand(a, BracketExpr::right_normed({0, 0})).is_zero());
    CHECK(BracketExpr::right_normed({0, 1, 1}).weight(a) == 6);
}

TEST_CASE("derivations satisfy the graded Leibniz rule") {
    const Alphabet a = Alphabet::sym(1, 1);
    // Odd derivation of weight 1: x -> z, z -> 0.
    const Derivation d = extend_derivation(a, {TensorPoly::letter(1), TensorPoly()}, Parity::Odd);
    const auto x = TensorPoly::letter(0), z = TensorPoly::letter(1);
    CHECK(d.apply(x * z) == z * z);
    CHECK(d.apply(z * x) == z * z * Scalar(-1));
    CHECK(d.apply(d.apply(x * x)).is_zero());
    CHECK_THROWS(extend_derivation(a, {TensorPoly::letter(0), TensorPoly()}, Parity::Odd));
}

TEST_CASE("cyclic derivative of a cyclic word") {
    const Alphabet a = Alphabet::sym(2, 0);
    // W = x1 x2 x1 x2: d/dx1 = 2 x2 x1 x2.
    const auto W = TensorPoly::word({0, 1, 0, 1});
    CHECK(cyclic_derivative(a, W, 0) == TensorPoly::word({1, 0, 1}, 2));
}

TEST_CASE("substitution is an algebra map") {
    const Alphabet a = Alphabet::sym(2, 0);
    std::vector<TensorPoly> img = {TensorPoly::letter(1), TensorPoly::letter(0) + TensorPoly::letter(1)};
    const auto p = TensorPoly::word({0, 1}) + TensorPoly::word({1}) * Scalar(3);
    const auto q = TensorPoly::word({1, 0});
    CHECK(substitute(p * q, img) == substitute(p, img) * substitute(q, img));
}

TEST_CASE("echelon rank, reduction and aux tracking") {
    Echelon e;
    CHECK(e.insert({{0, 1}, {2, 1}}, {{0, 1}}));
    CHECK(e.insert({{1, 2}, {2, 2}}, {{1, 1}}));
    CHECK_FALSE(e.insert({{0, 1}, {1, 1}, {2, 2}}, {{2, 1}}));
    CHECK(e.rank() == 2);
    const auto r = e.reduce({{0, 2}, {1, 2}, {2, 4}}, {}, true);
    CHECK(r.residual.empty());
    CHECK(r.aux == SparseVec{{0, Scalar(-2)}, {1, Scalar(-1)}});
    CHECK(sparse_rank({{{0, 1}}, {{0, 2}}, {{1, 1}}}) == 2);
}

TEST_CASE("dense linear algebra") {
    const Matrix m = {{2, 1}, {1, 1}};
    CHECK(dense_det(m) == 1);
    const Matrix inv = dense_inverse(m);
    CHECK(matmul(m, inv) == identity_matrix(2));
    CHECK_THROWS_AS(dense_inverse(Matrix{{1, 2}, {2, 4}}), std::domain_error);
    CHECK(dense_rank(Matrix{{1, 2, 3}, {2, 4, 6}}) == 1);
    const auto ker = dense_kernel(Matrix{{1, 2, 3}}, 3);
    CHECK(ker.size() == 2);
    for (const auto& v : ker) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("random matrix inverse property") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = zero_matrix(4, 4);
        for (auto& row : m)
            for (auto& x : row) x = testing::small_rational(rng);
        if (is_zero(dense_det(m))) continue;
        CHECK(matmul(dense_inverse(m), m) == identity_matrix(4));
        CHECK(dense_det(transpose(m)) == dense_det(m));
    }
}
