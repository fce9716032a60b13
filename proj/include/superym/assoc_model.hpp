#pragma once
#include <memory>
#include <map>
#include <unordered_map>
#include <vector>

#include "superym/presentation.hpp"
#include "superym/sparse.hpp"
#include "superym/word_index.hpp"

namespace sym {

// Weight-truncated quotient TV / <R> with normal words as coset representatives.
// Weight w is presented as (V (x) N) modulo the rows r.m, where N are lower normal words.
class AssocQuotientModel {
public:
    AssocQuotientModel(Alphabet alphabet, std::vector<TensorPoly> relations, int max_weight);
    static AssocQuotientModel for_presentation(const SymPresentation& p, int max_weight);

    const Alphabet& alphabet() const { return alphabet_; }
    int max_weight() const { return max_w_; }
    const std::vector<TensorPoly>& relations() const { return relations_; }

    std::size_t dim(int w) const;
    std::size_t tensor_dim(int w) const;  // number of words of weight w
    std::size_t ideal_dim(int w) const { return tensor_dim(w) - dim(w); }
    const std::vector<Word>& normal_words(int w) const;
    int normal_index(const Word& word) const;  // -1 unless word is normal

    // Coordinates over normal_words(w) of a word of weight w.
    const SparseVec& nf_word(const Word& word) const;
    // Coordinates of a homogeneous polynomial.
    SparseVec nf_coords(const TensorPoly& p, int w) const;
    TensorPoly normal_form(const TensorPoly& p) const;
    bool in_ideal(const TensorPoly& p) const;
    TensorPoly from_coords(const SparseVec& v, int w) const;

private:
    struct Level {
        std::vector<std::size_t> block_start;  // per letter, in positions of V (x) N
        std::size_t total = 0;
        Echelon ech;
        std::vector<int> col_to_normal;        // -1 for pivot columns
        std::vector<Word> normal;
        std::unordered_map<Word, int, WordHash> normal_pos;
    };
    void build_weight(int w);
    SparseVec to_level_columns(int letter, const SparseVec& tail, int w) const;

    Alphabet alphabet_;
    std::vector<TensorPoly> relations_;
    int max_w_;
    std::vector<Level> levels_;
    std::vector<std::size_t> tv_count_;
    mutable std::unordered_map<Word, SparseVec, WordHash> memo_;
};

}  // namespace sym
