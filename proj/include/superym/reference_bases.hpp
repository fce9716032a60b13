#pragma once
#include <string>
#include <vector>

#include "superym/lie_model.hpp"

namespace sym {

// Right-normed bracket [g0,[g1,...]] with a coefficient.
struct BracketTerm {
    Scalar coeff;
    std::vector<int> gens;
};
// Linear combination asserted to vanish in the quotient.
struct BracketRelation {
    std::string label;
    std::vector<BracketTerm> terms;
};

// Ordered bases of ym(3,1)/F^l for the canonical Gamma, as right-normed brackets over x1,x2,x3,z1.
std::vector<std::vector<int>> ym31_reference_basis(int l);  // l = 5, 6 or 7
std::vector<BracketRelation> ym31_reference_relations();    // identities among brackets of weight <= 8

TensorPoly bracket_combination(const Alphabet& a, const std::vector<BracketTerm>& terms);

struct ReferenceBasisCheck {
    std::size_t size = 0;
    std::size_t rank = 0;
    std::size_t model_dim = 0;
    bool independent = false;
    bool spanning = false;
    std::vector<std::pair<std::string, bool>> relations;
    bool relations_hold() const;
    bool ok() const { return independent && spanning && relations_hold(); }
};
// The model must reach the weights of the set and of the relations.
ReferenceBasisCheck check_reference_basis(const LieQuotientModel& model, const std::vector<std::vector<int>>& set,
                                          const std::vector<BracketRelation>& relations);

}  // namespace sym
