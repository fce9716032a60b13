#pragma once
#include <unordered_map>
#include <vector>

#include "superym/alphabet.hpp"
#include "superym/sparse.hpp"
#include "superym/tensor_poly.hpp"
#include "superym/word.hpp"

namespace sym {

// Enumerates the words of each weight in monomial order and assigns columns.
// Column 0 is the largest word, so echelon pivots are leading monomials.
class WordIndex {
public:
    explicit WordIndex(Alphabet a) : alphabet_(std::move(a)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    void ensure(int w);  // not thread-safe; call before concurrent reads
    const std::vector<Word>& words(int w) const;  // ascending monomial order
    std::size_t count(int w) const { return words(w).size(); }
    int column(const Word& word, int w) const;     // -1 when absent
    const Word& word_at_column(int col, int w) const;

    // Coordinates of a weight-w polynomial; throws on foreign words.
    SparseVec to_columns(const TensorPoly& p, int w) const;
    TensorPoly from_columns(const SparseVec& v, int w) const;

private:
    struct Level {
        std::vector<Word> words;
        std::unordered_map<Word, int, WordHash> pos;
    };
    Alphabet alphabet_;
    std::vector<Level> levels_;
    std::vector<bool> built_;
};

}  // namespace sym
