#pragma once
#include <random>
#include <vector>

#include "superym/lie_model.hpp"
#include "superym/presentation.hpp"

namespace sym::testing {

inline Scalar small_rational(std::mt19937& rng, int range = 3) {
    std::uniform_int_distribution<int> num(-range, range), den(1, 2);
    Scalar q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Random symmetric Gamma with orthonormal metric.
inline SymPresentation random_presentation(std::mt19937& rng, int n, int s) {
    SymPresentation p;
    p.n = n;
    p.s = s;
    p.gamma.n = n;
    p.gamma.s = s;
    for (int i = 0; i < n; ++i) {
        Matrix m = zero_matrix(s, s);
        for (int a = 0; a < s; ++a)
            for (int b = a; b < s; ++b) m[a][b] = m[b][a] = small_rational(rng);
        p.gamma.mats.push_back(std::move(m));
    }
    return p;
}

// Random nondegenerate Gamma by rejection.
inline SymPresentation random_nondegenerate(std::mt19937& rng, int n, int s) {
    for (;;) {
        SymPresentation p = random_presentation(rng, n, s);
        if (check_nondegenerate(p).nondegenerate) return p;
    }
}

// Nilpotent super Lie algebra: truncation of a free super Lie algebra on 2 or 3 generators
// of weight 1 and random parity, modulo random homogeneous relations of weight 2.
inline SuperLieAlgebra random_super_lie(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1), ngen(2, 3), top(2, 4);
    std::vector<Generator> gens;
    const int k = ngen(rng);
    for (int i = 0; i < k; ++i) gens.push_back({"e" + std::to_string(i + 1), parity_of(coin(rng)), 1});
    Alphabet a(gens);
    std::vector<TensorPoly> rels;
    for (int par = 0; par < 2; ++par) {
        TensorPoly r;
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j)
                if ((bit(gens[i].parity) ^ bit(gens[j].parity)) == par && coin(rng))
                    r += lie_expand(a, BracketExpr::right_normed({i, j})) * small_rational(rng);
        if (!r.is_zero() && coin(rng)) rels.push_back(r);
    }
    LieQuotientModel m(a, rels, top(rng));
    return m.export_algebra();
}

}  // namespace sym::testing
