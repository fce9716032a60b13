#include "superym/lie_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace sym {

std::string bracket_name(const Alphabet& a, const std::vector<int>& gens) {
    std::string s = a[gens.back()].name;
    for (std::size_t i = gens.size() - 1; i-- > 0;) s = "[" + a[gens[i]].name + "," + s + "]";
    return s;
}

LieQuotientModel::LieQuotientModel(Alphabet alphabet, std::vector<TensorPoly> relations, int max_weight,
                                   LieModelOptions opts)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)), max_w_(max_weight), opts_(opts) {
    if (max_w_ < 0) throw std::invalid_argument("negative cutoff");
    for (const auto& r : relations_) {
        if (r.is_zero()) continue;
        if (!r.weight(alphabet_) || !r.parity(alphabet_))
            throw std::invalid_argument("relations must be homogeneous");
    }
    index_ = std::make_unique<WordIndex>(alphabet_);
    offset_.assign(max_w_ + 2, 0);
    ideal_dim_.assign(max_w_ + 1, 0);
    free_dim_.assign(max_w_ + 1, std::nullopt);
    ideal_basis_.resize(max_w_ + 1);
    free_basis_.resize(max_w_ + 1);
    ech_.resize(max_w_ + 1);
    for (int w = 0; w <= max_w_; ++w) {
        offset_[w] = basis_.size();
        build_weight(w);
    }
    offset_[max_w_ + 1] = basis_.size();
}

LieQuotientModel LieQuotientModel::for_presentation(const SymPresentation& p, int l, LieModelOptions opts) {
    if (l < 0) throw std::invalid_argument("cutoff l must be nonnegative");
    return LieQuotientModel(p.alphabet(), build_relations(p), l + 1, opts);
}

void LieQuotientModel::build_weight(int w) {
    if (w == 0) return;
    index_->ensure(w);
    const Alphabet& a = alphabet_;
    Echelon& E = ech_[w];
    // Ideal component: relations of weight w and brackets of generators with lower ideal elements.
    auto add_ideal = [&](const TensorPoly& p) {
        if (p.is_zero()) return;
        if (E.insert(index_->to_columns(p, w))) ideal_basis_[w].push_back(p);
    };
    for (const auto& r : relations_)
        if (!r.is_zero() && *r.weight(a) == w) add_ideal(r);
    for (std::size_t g = 0; g < a.size(); ++g) {
        const int u = w - a[g].weight;
        if (u <= 0) continue;
        for (const auto& j : ideal_basis_[u]) add_ideal(super_commutator(a, TensorPoly::letter(g), j));
    }
    ideal_dim_[w] = E.rank();

    if (opts_.span_free_component) {
        Echelon F;
        auto add_free = [&](const TensorPoly& p) {
            if (!p.is_zero() && F.insert(index_->to_columns(p, w))) free_basis_[w].push_back(p);
        };
        for (std::size_t g = 0; g < a.size(); ++g) {
            if (a[g].weight == w) add_free(TensorPoly::letter(g));
            const int u = w - a[g].weight;
            if (u <= 0) continue;
            for (const auto& f : free_basis_[u]) add_free(super_commutator(a, TensorPoly::letter(g), f));
        }
        free_dim_[w] = F.rank();
    }

    // Candidates in lexicographic order of generator sequences.
    std::vector<std::pair<std::vector<int>, TensorPoly>> cand;
    for (std::size_t g = 0; g < a.size(); ++g) {
        if (a[g].weight == w) cand.push_back({{static_cast<int>(g)}, TensorPoly::letter(g)});
        const int u = w - a[g].weight;
        if (u <= 0) continue;
        for (std::size_t k = offset_[u]; k < offset_[u] + dim(u); ++k) {
            std::vector<int> seq{static_cast<int>(g)};
            seq.insert(seq.end(), basis_[k].gens.begin(), basis_[k].gens.end());
            cand.push_back({std::move(seq), TensorPoly{}});
        }
    }
    std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    int local = 0;
    for (auto& [seq, poly] : cand) {
        if (seq.size() > 1) {
            std::vector<int> tail(seq.begin() + 1, seq.end());
            const int u = w - a[seq[0]].weight;
            const TensorPoly* tp = nullptr;
            for (std::size_t k = offset_[u]; k < offset_[u] + dim(u); ++k)
                if (basis_[k].gens == tail) tp = &basis_[k].expansion;
            poly = super_commutator(a, TensorPoly::letter(seq[0]), *tp);
        }
        if (poly.is_zero()) continue;
        const int gidx = static_cast<int>(offset_[w]) + local;
        if (E.insert(index_->to_columns(poly, w), SparseVec{{gidx, Scalar(1)}})) {
            LieBasisElement b;
            b.gens = seq;
            b.weight = w;
            b.parity = *poly.parity(a);
            b.expansion = poly;
            b.name = bracket_name(a, seq);
            basis_.push_back(std::move(b));
            ++local;
        }
    }
    offset_[w + 1] = basis_.size();
}

std::size_t LieQuotientModel::dim(int w) const {
    if (w <= 0 || w > max_w_) return 0;
    return offset_[w + 1] - offset_[w];
}

std::size_t LieQuotientModel::ideal_dim(int w) const { return (w <= 0 || w > max_w_) ? 0 : ideal_dim_[w]; }

std::optional<std::size_t> LieQuotientModel::free_dim(int w) const {
    return (w <= 0 || w > max_w_) ? std::nullopt : free_dim_[w];
}

std::size_t LieQuotientModel::offset(int w) const { return offset_.at(std::clamp(w, 0, max_w_ + 1)); }

SparseVec LieQuotientModel::coordinates(const TensorPoly& p) const {
    if (p.is_zero()) return {};
    auto w = p.weight(alphabet_);
    if (!w) throw std::invalid_argument("coordinates: polynomial not weight-homogeneous");
    if (*w > max_w_) return {};
    auto r = ech_[*w].reduce(index_->to_columns(p, *w), {}, true);
    if (!r.residual.empty()) throw std::domain_error("coordinates: element is not a Lie polynomial");
    return sparse_scale(r.aux, -1);
}

bool LieQuotientModel::in_ideal(const TensorPoly& p) const {
    if (p.is_zero()) return true;
    auto w = p.weight(alphabet_);
    if (!w) throw std::invalid_argument("in_ideal: polynomial not weight-homogeneous");
    if (*w > max_w_) throw std::out_of_range("in_ideal: weight beyond cutoff");
    auto r = ech_[*w].reduce(index_->to_columns(p, *w), {}, true);
    return r.residual.empty() && r.aux.empty();
}

TensorPoly LieQuotientModel::expansion(const SparseVec& coords) const {
    TensorPoly p;
    for (const auto& [i, c] : coords) p += basis_[i].expansion * c;
    return p;
}

SparseVec LieQuotientModel::bracket(int i, int j) const {
    const int wi = basis_[i].weight, wj = basis_[j].weight;
    if (wi + wj > max_w_) return {};
    if (sc_done_) {
        const bool sw = i > j;
        auto it = sc_.find(sw ? std::make_pair(j, i) : std::make_pair(i, j));
        if (it == sc_.end()) return {};
        if (!sw) return it->second;
        return sparse_scale(it->second, -koszul(basis_[i].parity, basis_[j].parity));
    }
    return coordinates(super_commutator(alphabet_, basis_[i].expansion, basis_[j].expansion));
}

void LieQuotientModel::compute_structure_constants(int threads) {
    if (sc_done_) return;
    std::vector<std::pair<int, int>> pairs;
    const int n = static_cast<int>(basis_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (basis_[i].weight + basis_[j].weight <= max_w_) pairs.emplace_back(i, j);
    std::vector<SparseVec> out(pairs.size());
    auto work = [&](std::size_t t, std::size_t nt) {
        for (std::size_t k = t; k < pairs.size(); k += nt) out[k] = bracket(pairs[k].first, pairs[k].second);
    };
    const std::size_t nt = static_cast<std::size_t>(std::max(1, threads));
    if (nt == 1) work(0, 1);
    else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
        for (auto& th : pool) th.join();
    }
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!out[k].empty()) sc_[pairs[k]] = std::move(out[k]);
    sc_done_ = true;
}

SuperLieAlgebra LieQuotientModel::export_algebra(int threads) {
    compute_structure_constants(threads);
    std::vector<BasisLabel> labels;
    for (const auto& b : basis_) labels.push_back({b.name, b.parity, b.weight});
    SuperLieAlgebra g(std::move(labels));
    for (const auto& [key, v] : sc_) g.set_bracket(key.first, key.second, v);
    return g;
}

}  // namespace sym
