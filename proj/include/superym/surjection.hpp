#pragma once
#include <optional>
#include <string>
#include <vector>

#include "superym/dixmier.hpp"
#include "superym/lie_model.hpp"

namespace sym {

struct SurjectionAssignment {
    std::string target;     // Heisenberg basis element
    std::string generator;  // name of the free generator of the ideal
    int weight = 0;
};

struct CWSurjection {
    int r = 0, t = 0;
    int l = 0;          // the quotient is ym/F^l, weights <= l+1
    int d_prime = 0;    // largest generator weight used
    int attempts = 0;   // assignments tried before acceptance
    std::vector<SurjectionAssignment> assignment;
    IdealWeight weight;
    bool homomorphism = false;  // phi respects brackets on the truncated ideal
    bool surjective = false;    // images span heis
    bool fl_vanishes = false;   // F^l maps to zero
    bool stabilizer_ok = false; // g' meets span(x1, x2) trivially
    bool independent = false;   // images of the two distinguished elements are independent
    std::size_t algebra_dim = 0;
    std::vector<std::pair<std::string, Scalar>> f_bar;  // nonzero values of the extended functional
    std::string extension = "zero on x1, x2";
    bool ok() const { return homomorphism && surjective && fl_vanishes && stabilizer_ok && independent; }
};

// Requires n >= 3, s >= 1, and r >= 1 or (r = 0, t >= 2). Throws std::invalid_argument otherwise.
// When l is omitted, the smallest l compatible with the chosen assignment is used.
CWSurjection build_cw_surjection(const SymPresentation& p, int r, int t, std::optional<int> l = std::nullopt,
                                 int threads = 1);

struct WeylSurjectionNote {
    std::vector<TensorPoly> relation_images;  // images of r_{0,i}, r_{1,a} under z_a -> 0
    bool odd_relations_vanish = false;
    bool even_relations_match = false;  // equal to the Yang-Mills relations of ym(n,0)
    std::string delegation;
};
WeylSurjectionNote weyl_surjection_note(const SymPresentation& p, int r);

}  // namespace sym
