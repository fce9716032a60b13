// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "superym/assoc_model.hpp"
#include "superym/ce.hpp"
#include "superym/dixmier.hpp"
#include "superym/freegens.hpp"
#include "superym/lie_model.hpp"
#include "superym/presentation.hpp"
#include "superym/reference_bases.hpp"
#include "superym/resolution.hpp"
#include "superym/surjection.hpp"
#include "superym/verify.hpp"
#include "test_util.hpp"

using namespace sym;

namespace {

struct Check {
    std::ostringstream notes;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << " [" << what << "]";
        }
    }
};

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

void ac1(Check& c) {
    const std::vector<std::int64_t> expected = {0,  3,  1,   3,   2,   6,   6,   12,   15,   33,
                                                42, 77, 114, 213, 314, 555, 876, 1540, 2460, 4242};
    const auto p = SymPresentation::preset(3, 1);
    c.expect(dims_ym(p, 20) == expected, "series dims");
    const auto m = LieQuotientModel::for_presentation(p, 11);
    for (int j = 1; j <= 12; ++j)
        c.expect(static_cast<std::int64_t>(m.dim(j)) == expected[j - 1], "engine dim " + std::to_string(j));
}

void ac2(Check& c) {
    const auto p = SymPresentation::preset(3, 1);
    const std::vector<std::size_t> cumulative = {3, 4, 7, 9, 15, 21, 33};
    for (int l = 1; l <= 7; ++l) {
        const auto m = LieQuotientModel::for_presentation(p, l);
        c.expect(m.total_dim() == cumulative[l - 1], "dim ym/F^" + std::to_string(l));
    }
    for (int l : {5, 7}) {
        const auto m = LieQuotientModel::for_presentation(p, l);
        const auto chk = check_reference_basis(m, ym31_reference_basis(l),
                                               l == 7 ? ym31_reference_relations() : std::vector<BracketRelation>{});
        c.expect(chk.size == cumulative[l - 1], "B" + std::to_string(l) + " size");
        c.expect(chk.independent, "B" + std::to_string(l) + " independent");
        c.expect(chk.spanning, "B" + std::to_string(l) + " spanning");
        for (const auto& [label, ok] : chk.relations) c.expect(ok, label);
    }
}

void ac3(Check& c) {
    const auto p = SymPresentation::preset(3, 1);
    const DensePolynomial den({1, 0, -3, -1, 0, 1, 3, 0, -1});
    const PowerSeries series = PowerSeries(den, 12).inverse();
    const auto A = AssocQuotientModel::for_presentation(p, 12);
    for (int w = 0; w <= 12; ++w)
        c.expect(Scalar(static_cast<long>(A.dim(w))) == series[w], "dim YM_" + std::to_string(w));
    const auto r = verify_resolution(A, 12, ResolutionSide::Left);
    for (const auto& w : r.weights) {
        const long long euler = static_cast<long long>(w.dim[0]) - static_cast<long long>(w.dim[1]) +
                                static_cast<long long>(w.dim[2]) - static_cast<long long>(w.dim[3]);
        c.expect(euler == (w.weight == 0 ? 1 : 0), "euler weight " + std::to_string(w.weight));
    }
}

void ac4(Check& c) {
    for (auto [n, s] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}}) {
        const auto p = SymPresentation::preset(n, s);
        const auto A = AssocQuotientModel::for_presentation(p, 14);
        for (auto side : {ResolutionSide::Left, ResolutionSide::Right}) {
            const auto r = verify_resolution(A, 14, side);
            const std::string tag = "(" + std::to_string(n) + "," + std::to_string(s) + ") " +
                                    (side == ResolutionSide::Left ? "left" : "right");
            c.expect(r.weights.size() == 15, tag + " weights");
            for (const auto& w : r.weights) {
                const std::string at = tag + " w" + std::to_string(w.weight);
                c.expect(w.b1b2_zero, at + " b1b2");
                c.expect(w.b2b3_zero, at + " b2b3");
                c.expect(w.exact, at + " exact");
                c.expect(w.b3_injective, at + " b3 injective");
            }
        }
    }
}

void ac5(Check& c) {
    std::vector<SymPresentation> ps = {SymPresentation::preset(3, 1)};
    std::mt19937 rng(20240501);
    for (int k = 0; k < 10; ++k) ps.push_back(testing::random_presentation(rng, 3, 2));
    for (std::size_t k = 0; k < ps.size(); ++k) {
        c.expect(superpotential_check(ps[k]).ok(), "cyclic derivatives #" + std::to_string(k));
        c.expect(omega_identity(ps[k]), "omega #" + std::to_string(k));
    }
}

void ac6(Check& c) {
    const auto p = SymPresentation::preset(3, 1);
    const auto r = susy_check(p, std::vector<Matrix>{Matrix{{1}}, Matrix{{0}}, Matrix{{0}}});
    c.expect(!r.quartic_zero, "(3,1) quartic nonzero");
    c.expect(!r.all_in_ideal(), "(3,1) some derivative outside <R>");
    const auto f = susy_check(quartic_free_fixture());
    c.expect(f.equivariant, "fixture equivariant");
    c.expect(f.quartic_zero, "fixture quartic zero");
    c.expect(f.all_in_ideal(), "fixture derivatives in <R>");
}

void ac7(Check& c) {
    {
        auto m = LieQuotientModel::for_presentation(SymPresentation::preset(3, 1), 9);
        m.compute_structure_constants();
        const auto r = extract_free_generators(m, IdealSpec::TymHat, 3, 1, 10);
        const std::vector<std::size_t> expected = {1, 1, 3, 1, 2, 1, 2, 1, 2};
        for (int w = 2; w <= 10; ++w) {
            const auto it = std::find_if(r.weights.begin(), r.weights.end(), [&](const auto& x) { return x.weight == w; });
            c.expect(it != r.weights.end() && it->generators == expected[w - 2], "tym-hat w" + std::to_string(w));
            c.expect(it != r.weights.end() && it->expected && it->matches(), "tym-hat series w" + std::to_string(w));
        }
    }
    {
        auto m = LieQuotientModel::for_presentation(SymPresentation::preset(1, 3), 8);
        m.compute_structure_constants();
        const auto r = extract_free_generators(m, IdealSpec::K1s, 1, 3, 9);
        const std::map<int, std::size_t> expected = {{3, 1}, {6, 3}, {9, 2}};
        for (const auto& [w, g] : expected) {
            const auto it = std::find_if(r.weights.begin(), r.weights.end(), [&](const auto& x) { return x.weight == w; });
            c.expect(it != r.weights.end() && it->generators == g, "k1s w" + std::to_string(w));
            c.expect(it != r.weights.end() && it->expected && it->matches(), "k1s series w" + std::to_string(w));
        }
        for (const auto& x : r.weights)
            if (!expected.count(x.weight)) c.expect(x.generators == 0 && x.matches(), "k1s w" + std::to_string(x.weight));
    }
}

void ac8(Check& c) {
    const Alphabet a({{"z1", Parity::Odd, 3}, {"z2", Parity::Odd, 3}});
    const auto z1z1 = TensorPoly::word({0, 0}), z2z2 = TensorPoly::word({1, 1});
    const auto z1z2 = TensorPoly::word({0, 1}), z2z1 = TensorPoly::word({1, 0});
    const AssocQuotientModel A(a, {z1z1 + z2z2, z1z2 + z2z1}, 18);
    for (int w = 1; w <= 18; ++w)
        c.expect(A.dim(w) == (w % 3 == 0 ? 2u : 0u), "dim weight " + std::to_string(w));
    for (int k = 1; k <= 6; ++k) {
        Word pure, mixed;
        for (int i = 0; i < k; ++i) pure.push_back(1);
        mixed.push_back(0);
        for (int i = 1; i < k; ++i) mixed.push_back(1);
        c.expect(sparse_rank({A.nf_word(pure), A.nf_word(mixed)}) == 2, "z1^a z2^b basis weight " + std::to_string(3 * k));
        for (int beta = 0; beta < k; ++beta) {
            Word lhs;
            for (int i = 0; i < beta; ++i) lhs.push_back(1);
            lhs.push_back(0);
            for (int i = beta + 1; i < k; ++i) lhs.push_back(1);
            const Scalar sign = beta % 2 ? -1 : 1;
            c.expect(A.in_ideal(TensorPoly::word(lhs) - TensorPoly::word(mixed) * sign),
                     "sign law beta=" + std::to_string(beta) + " weight " + std::to_string(3 * k));
        }
    }
}

void ac9(Check& c) {
    const SuperLieAlgebra h11({{"z", Parity::Odd, 3}});
    const auto r = ce_homology(h11, 4);
    c.expect(r.d_squared_zero, "h(1,1) d^2");
    for (int k = 0; k <= 4; ++k) c.expect(r.betti(k) == 1, "H_" + std::to_string(k) + "(h(1,1))");
    std::mt19937 rng(4242);
    for (int k = 0; k < 20; ++k) {
        const auto g = testing::random_super_lie(rng);
        c.expect(validate(g).ok(), "random algebra #" + std::to_string(k) + " valid");
        c.expect(ce_homology(g, 4).d_squared_zero, "random algebra #" + std::to_string(k) + " d^2");
    }
}

void ac10(Check& c) {
    for (auto [r, t] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}, {2, 3}}) {
        const auto g = heis(r, t);
        EvenFunctional f(g.dim());
        f[g.index_of("z")] = 1;
        const auto w = weight_of(g, f);
        c.expect(w.weyl == static_cast<std::size_t>(r) && w.clifford == static_cast<std::size_t>(t),
                 "heis(" + std::to_string(r) + "," + std::to_string(t) + ")");
    }
    auto m = LieQuotientModel::for_presentation(SymPresentation::preset(1, 2), 8);
    const auto g = m.export_algebra();
    c.expect(validate(g).ok(), "ym(1,2) valid");
    std::vector<int> even;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.label(i).parity == Parity::Even) even.push_back(static_cast<int>(i));
    // Grid scan with entries in {0, +-1/2, +-1, +-2}.
    const std::vector<Scalar> grid = {-2, -1, Scalar(-1, 2), 0, Scalar(1, 2), 1, 2};
    std::vector<std::size_t> idx(even.size(), 0);
    bool done = even.empty();
    std::size_t scanned = 0;
    while (!done) {
        EvenFunctional f(g.dim());
        for (std::size_t k = 0; k < even.size(); ++k) f[even[k]] = grid[idx[k]];
        const auto w = weight_of(g, f);
        c.expect(w == IdealWeight{0, 0} || w == IdealWeight{0, 2}, "grid functional weight");
        ++scanned;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == grid.size()) idx[k++] = 0;
        done = k == idx.size();
    }
    c.expect(scanned > 0, "grid scanned");
    // Rank reasoning: the even block vanishes and the odd block is linear in f, sum_k f_k B_k.
    std::vector<Matrix> odd_blocks;
    for (int e : even) {
        EvenFunctional f(g.dim());
        f[e] = 1;
        const auto K = kirillov_form(g, f);
        c.expect(dense_rank(K.even_block) == 0, "even block zero");
        c.expect(K.odd_block.size() == 2, "two odd directions");
        odd_blocks.push_back(K.odd_block);
    }
    std::vector<Matrix> nonzero;
    for (const auto& B : odd_blocks)
        if (dense_rank(B) > 0) nonzero.push_back(B);
    c.expect(nonzero.size() == 2, "odd block depends on two parameters");
    if (nonzero.size() == 2) {
        const Matrix &B1 = nonzero[0], &B2 = nonzero[1];
        // det(b B1 + c B2) = d1 b^2 + m b c + d2 c^2; anisotropic over Q when m^2 - 4 d1 d2 < 0.
        const Scalar d1 = dense_det(B1), d2 = dense_det(B2);
        const Scalar mix = B1[0][0] * B2[1][1] + B1[1][1] * B2[0][0] - B1[0][1] * B2[1][0] - B1[1][0] * B2[0][1];
        c.expect(!is_zero(d1) && mix * mix - 4 * d1 * d2 < 0, "odd determinant anisotropic");
    }
}

void ac11(Check& c) {
    const auto p = SymPresentation::preset(3, 1);
    for (auto [r, t] : std::vector<std::pair<int, int>>{{1, 1}, {0, 2}}) {
        const auto S = build_cw_surjection(p, r, t);
        const std::string tag = "(" + std::to_string(r) + "," + std::to_string(t) + ")";
        c.expect(S.weight == IdealWeight{static_cast<std::size_t>(r + 2), static_cast<std::size_t>(t)}, tag + " weight");
        c.expect(S.homomorphism, tag + " homomorphism");
        c.expect(S.surjective, tag + " surjective");
        c.expect(S.fl_vanishes, tag + " F^l vanishes");
        c.expect(S.stabilizer_ok, tag + " stabilizer");
        c.expect(S.independent, tag + " independent");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"AC1 dimension table", ac1},      {"AC2 reference bases", ac2},
        {"AC3 Hilbert and Euler", ac3},    {"AC4 resolutions", ac4},
        {"AC5 superpotential", ac5},       {"AC6 susy criterion", ac6},
        {"AC7 free generators", ac7},      {"AC8 diamond fixture", ac8},
        {"AC9 CE homology", ac9},          {"AC10 Dixmier weights", ac10},
        {"AC11 CW surjection", ac11},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (c.ok ? "PASS " : "FAIL ") << name << " (" << std::fixed << std::setprecision(2) << secs << " s)"
                  << c.notes.str() << std::endl;
        if (!c.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
