#include "superym/assoc_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace sym {

namespace {
void sort_sparse(SparseVec& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}
}  // namespace

AssocQuotientModel::AssocQuotientModel(Alphabet alphabet, std::vector<TensorPoly> relations, int max_weight)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)), max_w_(max_weight) {
    if (max_w_ < 0) throw std::invalid_argument("negative cutoff");
    for (const auto& r : relations_)
        if (!r.is_zero() && !r.weight(alphabet_)) throw std::invalid_argument("relations must be weight-homogeneous");
    levels_.resize(max_w_ + 1);
    tv_count_.assign(max_w_ + 1, 0);
    tv_count_[0] = 1;
    for (int w = 1; w <= max_w_; ++w)
        for (std::size_t g = 0; g < alphabet_.size(); ++g)
            if (alphabet_[g].weight <= w) tv_count_[w] += tv_count_[w - alphabet_[g].weight];
    for (int w = 0; w <= max_w_; ++w) build_weight(w);
}

AssocQuotientModel AssocQuotientModel::for_presentation(const SymPresentation& p, int max_weight) {
    return AssocQuotientModel(p.alphabet(), build_relations(p), max_weight);
}

SparseVec AssocQuotientModel::to_level_columns(int letter, const SparseVec& tail, int w) const {
    const Level& L = levels_[w];
    SparseVec v;
    v.reserve(tail.size());
    const std::size_t start = L.block_start[letter];
    for (const auto& [k, c] : tail) v.emplace_back(static_cast<int>(L.total - 1 - (start + k)), c);
    sort_sparse(v);
    return v;
}

void AssocQuotientModel::build_weight(int w) {
    Level& L = levels_[w];
    if (w == 0) {
        L.total = 1;
        L.normal.push_back(Word{});
        L.normal_pos.emplace(Word{}, 0);
        L.col_to_normal = {0};
        return;
    }
    L.block_start.assign(alphabet_.size(), 0);
    for (std::size_t g = 0; g < alphabet_.size(); ++g) {
        L.block_start[g] = L.total;
        const int u = w - alphabet_[g].weight;
        if (u >= 0) L.total += levels_[u].normal.size();
    }
    // Rows r.m for normal m.
    for (const auto& r : relations_) {
        if (r.is_zero()) continue;
        const int q = *r.weight(alphabet_);
        if (q > w) continue;
        for (const Word& m : levels_[w - q].normal) {
            std::map<int, Scalar> acc;
            for (const auto& [word, c] : r.terms()) {
                Word full = word.concat(m);
                const int v = full[0];
                SparseVec cols = to_level_columns(v, nf_word(full.slice(1, full.size())), w);
                for (const auto& [col, x] : cols) acc[col] += c * x;
            }
            SparseVec row = sparse_from_map(acc);
            if (!row.empty()) L.ech.insert(row);
        }
    }
    L.col_to_normal.assign(L.total, -1);
    for (std::size_t g = 0; g < alphabet_.size(); ++g) {
        const int u = w - alphabet_[g].weight;
        if (u < 0) continue;
        const auto& tails = levels_[u].normal;
        for (std::size_t k = 0; k < tails.size(); ++k) {
            const int col = static_cast<int>(L.total - 1 - (L.block_start[g] + k));
            if (L.ech.is_pivot(col)) continue;
            Word word = Word{static_cast<int>(g)}.concat(tails[k]);
            L.col_to_normal[col] = static_cast<int>(L.normal.size());
            L.normal_pos.emplace(word, static_cast<int>(L.normal.size()));
            L.normal.push_back(word);
        }
    }
}

std::size_t AssocQuotientModel::dim(int w) const {
    if (w < 0 || w > max_w_) throw std::out_of_range("weight beyond cutoff");
    return levels_[w].normal.size();
}

std::size_t AssocQuotientModel::tensor_dim(int w) const {
    if (w < 0 || w > max_w_) throw std::out_of_range("weight beyond cutoff");
    return tv_count_[w];
}

const std::vector<Word>& AssocQuotientModel::normal_words(int w) const {
    if (w < 0 || w > max_w_) throw std::out_of_range("weight beyond cutoff");
    return levels_[w].normal;
}

int AssocQuotientModel::normal_index(const Word& word) const {
    const int w = word.weight(alphabet_);
    if (w > max_w_) return -1;
    auto it = levels_[w].normal_pos.find(word);
    return it == levels_[w].normal_pos.end() ? -1 : it->second;
}

const SparseVec& AssocQuotientModel::nf_word(const Word& word) const {
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
    const int w = word.weight(alphabet_);
    if (w > max_w_) throw std::out_of_range("normal form: weight beyond cutoff");
    SparseVec out;
    if (word.empty()) {
        out = {{0, Scalar(1)}};
    } else {
        const Level& L = levels_[w];
        SparseVec tail = nf_word(word.slice(1, word.size()));
        auto red = L.ech.reduce(to_level_columns(word[0], tail, w));
        for (const auto& [col, c] : red.residual) out.emplace_back(L.col_to_normal[col], c);
        sort_sparse(out);
    }
    return memo_.emplace(word, std::move(out)).first->second;
}

SparseVec AssocQuotientModel::nf_coords(const TensorPoly& p, int w) const {
    std::map<int, Scalar> acc;
    for (const auto& [word, c] : p.terms()) {
        if (word.weight(alphabet_) != w) throw std::invalid_argument("normal form: inhomogeneous input");
        for (const auto& [k, x] : nf_word(word)) acc[k] += c * x;
    }
    return sparse_from_map(acc);
}

TensorPoly AssocQuotientModel::from_coords(const SparseVec& v, int w) const {
    TensorPoly p;
    for (const auto& [k, c] : v) p.add_term(levels_[w].normal[k], c);
    return p;
}

TensorPoly AssocQuotientModel::normal_form(const TensorPoly& p) const {
    TensorPoly out;
    for (const auto& [word, c] : p.terms()) {
        const int w = word.weight(alphabet_);
        for (const auto& [k, x] : nf_word(word)) out.add_term(levels_[w].normal[k], c * x);
    }
    return out;
}

bool AssocQuotientModel::in_ideal(const TensorPoly& p) const { return normal_form(p).is_zero(); }

}  // namespace sym
