#include "superym/ce.hpp"

#include <algorithm>
#include <map>

namespace sym {

namespace {

int bit(const SuperLieAlgebra& g, int i) { return g.label(i).parity == Parity::Odd ? 1 : 0; }

bool graded(const SuperLieAlgebra& g) {
    for (const auto& b : g.basis())
        if (b.weight <= 0) return false;
    return g.dim() > 0;
}

int total_weight(const SuperLieAlgebra& g, const std::vector<int>& y) {
    int w = 0;
    for (int i : y) w += g.label(i).weight;
    return w;
}

void enumerate(const SuperLieAlgebra& g, int k, int max_weight, std::vector<int>& cur, int w,
               std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    int start = 0;
    if (!cur.empty()) start = cur.back() + (bit(g, cur.back()) ? 0 : 1);
    for (int i = start; i < static_cast<int>(g.dim()); ++i) {
        const int wi = w + g.label(i).weight;
        if (max_weight >= 0 && wi > max_weight) continue;
        cur.push_back(i);
        enumerate(g, k, max_weight, cur, wi, out);
        cur.pop_back();
    }
}

// Inserts e into the sorted list rest, returning the sign, or 0 when the product vanishes.
int insert_sorted(const SuperLieAlgebra& g, int e, const std::vector<int>& rest, std::vector<int>& out) {
    int sign = 1;
    std::size_t p = 0;
    while (p < rest.size() && rest[p] < e) {
        // e moves right past rest[p]: y e = -(-1)^{|y||e|} e y
        sign *= (bit(g, e) && bit(g, rest[p])) ? 1 : -1;
        ++p;
    }
    if (p < rest.size() && rest[p] == e && !bit(g, e)) return 0;
    out.assign(rest.begin(), rest.begin() + p);
    out.push_back(e);
    out.insert(out.end(), rest.begin() + p, rest.end());
    return sign;
}

}  // namespace

std::size_t CEReport::betti(int k) const {
    std::size_t b = 0;
    for (const auto& blk : blocks)
        if (blk.degree == k) b += blk.betti;
    return b;
}

std::vector<std::vector<int>> ce_basis(const SuperLieAlgebra& g, int k, int max_weight) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate(g, k, max_weight, cur, 0, out);
    return out;
}

std::vector<std::pair<std::vector<int>, Scalar>> ce_differential(const SuperLieAlgebra& g, const std::vector<int>& y) {
    std::map<std::vector<int>, Scalar> acc;
    const int n = static_cast<int>(y.size());
    std::vector<int> prefix(n + 1, 0);  // parity sums of y_1..y_{i-1}
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + bit(g, y[i]);
    std::vector<int> rest, mono;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const SparseVec br = g.bracket(y[i], y[j]);
            if (br.empty()) continue;
            const int pi = bit(g, y[i]), pj = bit(g, y[j]);
            // 1-based positions i+1, j+1
            const int e = pi * prefix[i] + pj * prefix[j] + pi * pj + (i + 1) + (j + 1);
            const int sign = (e % 2) ? -1 : 1;
            rest.clear();
            for (int l = 0; l < n; ++l)
                if (l != i && l != j) rest.push_back(y[l]);
            for (const auto& [k, c] : br) {
                const int s2 = insert_sorted(g, k, rest, mono);
                if (s2 == 0) continue;
                acc[mono] += c * (sign * s2);
            }
        }
    std::vector<std::pair<std::vector<int>, Scalar>> out;
    for (auto& [m, c] : acc)
        if (!is_zero(c)) out.emplace_back(m, c);
    return out;
}

CEReport ce_homology(const SuperLieAlgebra& g, int hom_degree_max, int max_weight) {
    CEReport rep;
    const bool gr = graded(g);
    if (max_weight >= 0 && !gr) max_weight = -1;
    // Bases per degree up to hom_degree_max + 1, grouped by weight.
    std::vector<std::map<int, std::vector<std::vector<int>>>> bases(hom_degree_max + 2);
    for (int k = 0; k <= hom_degree_max + 1; ++k)
        for (auto& m : ce_basis(g, k, max_weight)) bases[k][gr ? total_weight(g, m) : -1].push_back(std::move(m));
    // rank[k][w] = rank of d_k restricted to weight w.
    std::vector<std::map<int, std::size_t>> rank(hom_degree_max + 2);
    for (int k = 1; k <= hom_degree_max + 1; ++k)
        for (const auto& [w, src] : bases[k]) {
            std::map<std::vector<int>, int> index;
            auto it = bases[k - 1].find(w);
            if (it != bases[k - 1].end())
                for (std::size_t t = 0; t < it->second.size(); ++t) index[it->second[t]] = static_cast<int>(t);
            std::vector<SparseVec> rows;
            std::vector<std::vector<std::pair<std::vector<int>, Scalar>>> images;
            for (const auto& y : src) {
                auto img = ce_differential(g, y);
                std::map<int, Scalar> row;
                for (const auto& [m, c] : img) row[index.at(m)] += c;
                rows.push_back(sparse_from_map(row));
                images.push_back(std::move(img));
            }
            rank[k][w] = sparse_rank(rows);
            if (k >= 2) {
                for (const auto& img : images) {
                    std::map<std::vector<int>, Scalar> dd;
                    for (const auto& [m, c] : img)
                        for (const auto& [m2, c2] : ce_differential(g, m)) dd[m2] += c * c2;
                    for (const auto& [m2, c2] : dd)
                        if (!is_zero(c2)) rep.d_squared_zero = false;
                }
            }
        }
    for (int k = 0; k <= hom_degree_max; ++k)
        for (const auto& [w, src] : bases[k]) {
            CEBlock b;
            b.degree = k;
            b.weight = w;
            b.dim = src.size();
            const std::size_t rk = k >= 1 && rank[k].count(w) ? rank[k].at(w) : 0;
            const std::size_t rk1 = rank[k + 1].count(w) ? rank[k + 1].at(w) : 0;
            b.betti = b.dim - rk - rk1;
            rep.blocks.push_back(b);
        }
    return rep;
}

}  // namespace sym
