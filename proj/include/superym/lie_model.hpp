#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superym/presentation.hpp"
#include "superym/sparse.hpp"
#include "superym/superlie.hpp"
#include "superym/word_index.hpp"

namespace sym {

struct LieModelOptions {
    bool span_free_component = false;  // also row-reduce the full free Lie component
    int threads = 1;
};

// Coset representative: right-normed bracket [g0,[g1,...]] over generators.
struct LieBasisElement {
    std::vector<int> gens;
    int weight = 0;
    Parity parity = Parity::Even;
    TensorPoly expansion;
    std::string name;
};

// Weight-truncated quotient of the free super Lie algebra by the ideal generated by homogeneous relations.
class LieQuotientModel {
public:
    LieQuotientModel(Alphabet alphabet, std::vector<TensorPoly> relations, int max_weight,
                     LieModelOptions opts = {});
    // ym(n,s)/F^l: weights up to l+1.
    static LieQuotientModel for_presentation(const SymPresentation& p, int l, LieModelOptions opts = {});

    const Alphabet& alphabet() const { return alphabet_; }
    int max_weight() const { return max_w_; }
    const std::vector<TensorPoly>& relations() const { return relations_; }

    std::size_t dim(int w) const;
    std::size_t ideal_dim(int w) const;
    std::optional<std::size_t> free_dim(int w) const;  // present when the free span was computed
    std::size_t total_dim() const { return basis_.size(); }

    const std::vector<LieBasisElement>& basis() const { return basis_; }
    // Global indices of weight w occupy [offset(w), offset(w) + dim(w)).
    std::size_t offset(int w) const;

    // Coordinates (global indices) of a weight-w Lie polynomial modulo the ideal.
    // Throws std::domain_error when p is not in the free Lie component.
    SparseVec coordinates(const TensorPoly& p) const;
    bool in_ideal(const TensorPoly& p) const;
    TensorPoly expansion(const SparseVec& coords) const;

    // [b_i, b_j] in global coordinates (zero beyond the cutoff).
    SparseVec bracket(int i, int j) const;
    void compute_structure_constants(int threads = 1);
    SuperLieAlgebra export_algebra(int threads = 1);

private:
    void build_weight(int w);

    Alphabet alphabet_;
    std::vector<TensorPoly> relations_;
    int max_w_;
    LieModelOptions opts_;
    std::unique_ptr<WordIndex> index_;
    std::vector<LieBasisElement> basis_;
    std::vector<std::size_t> offset_;     // size max_w_+2
    std::vector<std::size_t> ideal_dim_;
    std::vector<std::optional<std::size_t>> free_dim_;
    std::vector<std::vector<TensorPoly>> ideal_basis_;  // independent ideal elements per weight
    std::vector<std::vector<TensorPoly>> free_basis_;
    std::vector<Echelon> ech_;  // ideal rows (aux 0) then representatives (aux = coordinates)
    std::map<std::pair<int, int>, SparseVec> sc_;
    bool sc_done_ = false;
};

// Bracket expression of a basis element as nested arrays of names, e.g. ["x1",["x1","x2"]].
std::string bracket_name(const Alphabet& a, const std::vector<int>& gens);

}  // namespace sym
