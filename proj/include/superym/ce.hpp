#pragma once
#include <vector>

#include "superym/superlie.hpp"

namespace sym {

struct CEBlock {
    int degree = 0;
    int weight = -1;  // -1 when the algebra is not weight graded
    std::size_t dim = 0;
    std::size_t betti = 0;
};

struct CEReport {
    std::vector<CEBlock> blocks;
    bool d_squared_zero = true;
    // Total Betti number in homological degree k.
    std::size_t betti(int k) const;
};

// Super exterior basis of degree k: nondecreasing index lists, even indices not repeated.
std::vector<std::vector<int>> ce_basis(const SuperLieAlgebra& g, int k, int max_weight = -1);

// Image of one basis monomial under d_k with trivial coefficients, in the basis of degree k-1.
std::vector<std::pair<std::vector<int>, Scalar>> ce_differential(const SuperLieAlgebra& g, const std::vector<int>& y);

// Homology with trivial coefficients up to hom_degree_max; max_weight < 0 means no weight bound.
CEReport ce_homology(const SuperLieAlgebra& g, int hom_degree_max, int max_weight = -1);

}  // namespace sym
