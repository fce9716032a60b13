#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superym/alphabet.hpp"
#include "superym/scalar.hpp"
#include "superym/series.hpp"
#include "superym/tensor_poly.hpp"

namespace sym {

// gamma[i] is the symmetric s x s matrix Gamma^i_{ab}.
struct GammaTensor {
    int n = 0;
    int s = 0;
    std::vector<Matrix> mats;
};

struct SymPresentation {
    int n = 0;
    int s = 0;
    GammaTensor gamma;
    std::optional<Matrix> metric;                   // g_{ij}; absent means orthonormal
    std::optional<std::vector<Matrix>> gamma_tilde;  // tilde[i][a][b]

    // Canonical Gamma: Gamma^1 = identity, Gamma^{i>1} = 0, orthonormal metric.
    static SymPresentation preset(int n, int s);

    Alphabet alphabet() const { return Alphabet::sym(n, s); }
    bool orthonormal() const { return !metric.has_value(); }
    Matrix metric_lower() const;  // g_{ij}
    Matrix metric_upper() const;  // g^{ij}, the inverse; throws on singular metric
    void validate() const;        // shapes and symmetry; throws std::invalid_argument
    int x(int i) const { return i; }      // generator index of x_{i+1}
    int z(int a) const { return n + a; }  // generator index of z_{a+1}
};

// r_{0,1..n} followed by r_{1,1..s}.
std::vector<TensorPoly> build_relations(const SymPresentation& p);

struct NondegeneracyResult {
    bool nondegenerate = false;
    std::vector<Scalar> witness;  // lambda in V0*
};
NondegeneracyResult check_nondegenerate(const SymPresentation& p);

bool equivariance_holds(const SymPresentation& p, const std::vector<Matrix>& tilde);
// Uses the supplied gamma_tilde, or derives it; throws when neither is possible.
bool check_equivariance_identity(const SymPresentation& p);
// Solves the equivariance identity for gamma_tilde; throws std::domain_error("inconsistent") or on singular Gamma^i.
std::vector<Matrix> derive_gamma_tilde(const SymPresentation& p);

TensorPoly superpotential(const SymPresentation& p);

struct QuarticForm {
    int s = 0;
    std::vector<Scalar> q;  // q[((a*s+b)*s+c)*s+d]
    const Scalar& at(int a, int b, int c, int d) const { return q[((a * s + b) * s + c) * s + d]; }
    bool is_zero() const;
};
QuarticForm quartic_form(const SymPresentation& p);

// d_c for c = 1..s; needs gamma_tilde (supplied or derivable), or an explicit override.
std::vector<Derivation> susy_derivations(const SymPresentation& p,
                                         const std::optional<std::vector<Matrix>>& tilde_override = std::nullopt);

DensePolynomial hilbert_denominator(int n, int s);
PowerSeries hilbert_series_YM(const SymPresentation& p, int order);
std::vector<std::int64_t> dims_ym(const SymPresentation& p, int max_j);

struct NormalizedPresentation {
    SymPresentation presentation;
    bool normalized = false;  // lambda = x1* and x1* o Gamma = identity
    std::vector<std::string> log;
};
// Coordinate permutation of the x's and rational congruence on the z's.
NormalizedPresentation normalize_presentation(const SymPresentation& p);

// Closed-form generator series of the free ideals.
Scalar hat_W_coeff(int n, int s, int degree);
Scalar W_coeff(int n, int s, int degree);
Scalar tilde_W_coeff(int s, int degree);

// Generator image tables of psi : ym -> a x| h(n,s) and its inverse.
struct SemidirectMaps {
    Alphabet ym_alphabet;        // x1..xn, z1..zs
    Alphabet h_alphabet;         // q2..qn (w2), p2..pn (w4), z'1..z's (w3)
    std::vector<std::string> psi;      // image names of ym generators ("d" for x1)
    std::vector<TensorPoly> psi_inv;   // images in TV(ym) of q_i, p_i, z'_a
    std::vector<TensorPoly> d_action;  // d on q_i, p_i, z'_a as elements of TV(h)
    TensorPoly h_relation;             // sum [q_i,p_i] + 1/2 sum [z'_a,z'_a]
};
SemidirectMaps semidirect_maps(const SymPresentation& p);

}  // namespace sym
