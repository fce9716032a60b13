#include "superym/word_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace sym {

void WordIndex::ensure(int w) {
    if (w < 0) throw std::invalid_argument("negative weight");
    if (static_cast<int>(levels_.size()) <= w) {
        levels_.resize(w + 1);
        built_.resize(w + 1, false);
    }
    if (built_[w]) return;
    Level& L = levels_[w];
    if (w == 0) {
        L.words.push_back(Word{});
    } else {
        for (std::size_t g = 0; g < alphabet_.size(); ++g) {
            const int gw = alphabet_[g].weight;
            if (gw > w) continue;
            ensure(w - gw);
            for (const Word& tail : levels_[w - gw].words) {
                Word x{static_cast<int>(g)};
                L.words.push_back(x.concat(tail));
            }
        }
    }
    L.pos.reserve(L.words.size());
    for (std::size_t i = 0; i < L.words.size(); ++i) L.pos.emplace(L.words[i], static_cast<int>(i));
    built_[w] = true;
}

const std::vector<Word>& WordIndex::words(int w) const {
    if (w < 0 || w >= static_cast<int>(levels_.size()) || !built_[w])
        throw std::logic_error("word index level not built: " + std::to_string(w));
    return levels_[w].words;
}

int WordIndex::column(const Word& word, int w) const {
    const auto& L = levels_.at(w);
    auto it = L.pos.find(word);
    if (it == L.pos.end()) return -1;
    return static_cast<int>(L.words.size()) - 1 - it->second;
}

const Word& WordIndex::word_at_column(int col, int w) const {
    const auto& ws = words(w);
    return ws[ws.size() - 1 - col];
}

SparseVec WordIndex::to_columns(const TensorPoly& p, int w) const {
    words(w);
    SparseVec v;
    v.reserve(p.size());
    for (const auto& [word, c] : p.terms()) {
        int col = column(word, w);
        if (col < 0) throw std::invalid_argument("word of unexpected weight: " + word.str(alphabet_));
        v.emplace_back(col, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

TensorPoly WordIndex::from_columns(const SparseVec& v, int w) const {
    TensorPoly p;
    for (const auto& [col, c] : v) p.add_term(word_at_column(col, w), c);
    return p;
}

}  // namespace sym
