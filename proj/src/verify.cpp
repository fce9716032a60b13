#include "superym/verify.hpp"

#include <algorithm>

namespace sym {

bool SuperpotentialReport::ok() const {
    return std::all_of(matches.begin(), matches.end(), [](bool b) { return b; });
}

SuperpotentialReport superpotential_check(const SymPresentation& p) {
    const Alphabet A = p.alphabet();
    const TensorPoly W = superpotential(p);
    const auto rels = build_relations(p);
    SuperpotentialReport r;
    for (std::size_t g = 0; g < A.size(); ++g)
        r.matches.push_back(cyclic_derivative(A, W, static_cast<int>(g)) == rels[g]);
    return r;
}

bool SusyReport::all_in_ideal() const {
    for (const auto& row : in_ideal)
        for (bool b : row)
            if (!b) return false;
    return true;
}

SusyReport susy_check(const SymPresentation& p, const std::optional<std::vector<Matrix>>& tilde_override) {
    SusyReport r;
    r.quartic_zero = quartic_form(p).is_zero();
    const Alphabet A = p.alphabet();
    const TensorPoly W = superpotential(p);
    const auto ds = susy_derivations(p, tilde_override);
    if (tilde_override) r.equivariant = equivariance_holds(p, *tilde_override);
    else r.equivariant = check_equivariance_identity(p);
    const auto model = AssocQuotientModel::for_presentation(p, 9);
    for (const auto& d : ds) {
        const TensorPoly dW = d.apply(W);
        std::vector<bool> row;
        for (std::size_t g = 0; g < A.size(); ++g)
            row.push_back(model.in_ideal(cyclic_derivative(A, dW, static_cast<int>(g))));
        r.in_ideal.push_back(std::move(row));
    }
    return r;
}

SemidirectReport semidirect_check(const SymPresentation& p, int max_weight) {
    SemidirectReport r;
    r.max_weight = max_weight;
    const SemidirectMaps m = semidirect_maps(p);
    const Alphabet& ha = m.h_alphabet;
    const Alphabet& ya = m.ym_alphabet;

    const Derivation d(ha, m.d_action, Parity::Even, 2);
    AssocQuotientModel hmodel(ha, {m.h_relation}, max_weight);
    const TensorPoly dr = d.apply(m.h_relation);
    r.d_preserves_relation = !dr.weight(ha) || *dr.weight(ha) > max_weight ? dr.is_zero() : hmodel.in_ideal(dr);

    const auto rels = build_relations(p);
    r.relation_maps_to_ideal = substitute(m.h_relation, m.psi_inv) == rels[0] * Scalar(-1);

    const AssocQuotientModel ymodel(ya, rels, std::max(max_weight, 6));
    const TensorPoly x1 = TensorPoly::letter(p.x(0));
    r.intertwines = true;
    for (std::size_t y = 0; y < ha.size(); ++y) {
        TensorPoly diff = substitute(m.d_action[y], m.psi_inv) - super_commutator(ya, x1, m.psi_inv[y]);
        if (!diff.is_zero() && !ymodel.in_ideal(diff)) r.intertwines = false;
    }
    return r;
}

}  // namespace sym
