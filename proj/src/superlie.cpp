#include "superym/superlie.hpp"

#include <stdexcept>

namespace sym {

SuperLieAlgebra::SuperLieAlgebra(std::vector<BasisLabel> basis) : basis_(std::move(basis)) {}

int SuperLieAlgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return static_cast<int>(i);
    return -1;
}

std::size_t SuperLieAlgebra::dim_even() const {
    std::size_t c = 0;
    for (const auto& b : basis_) c += b.parity == Parity::Even;
    return c;
}

std::size_t SuperLieAlgebra::dim_odd() const { return dim() - dim_even(); }

void SuperLieAlgebra::set_bracket(int i, int j, SparseVec value) {
    if (i < 0 || j < 0 || i >= static_cast<int>(dim()) || j >= static_cast<int>(dim()))
        throw std::out_of_range("bracket index out of range");
    if (i > j) {
        std::swap(i, j);
        // [e_j,e_i] = -(-1)^{|i||j|} [e_i,e_j]
        const int sign = -koszul(basis_[i].parity, basis_[j].parity);
        value = sparse_scale(value, sign);
    }
    if (value.empty()) br_.erase({i, j});
    else br_[{i, j}] = std::move(value);
}

SparseVec SuperLieAlgebra::bracket(int i, int j) const {
    const bool swapped = i > j;
    auto it = br_.find(swapped ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == br_.end()) return {};
    if (!swapped) return it->second;
    return sparse_scale(it->second, -koszul(basis_[i].parity, basis_[j].parity));
}

SparseVec SuperLieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    std::map<int, Scalar> acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            SparseVec v = bracket(i, j);
            if (v.empty()) continue;
            Scalar ab = a * b;
            for (const auto& [k, c] : v) acc[k] += ab * c;
        }
    return sparse_from_map(acc);
}

std::optional<Parity> SuperLieAlgebra::parity(const SparseVec& x) const {
    std::optional<Parity> p;
    for (const auto& [i, c] : x) {
        if (p && *p != basis_[i].parity) return std::nullopt;
        p = basis_[i].parity;
    }
    return p;
}

std::vector<std::vector<SparseVec>> lower_central_series(const SuperLieAlgebra& g) {
    std::vector<std::vector<SparseVec>> series;
    std::vector<SparseVec> cur;
    for (std::size_t i = 0; i < g.dim(); ++i) cur.push_back({{static_cast<int>(i), Scalar(1)}});
    while (!cur.empty()) {
        series.push_back(cur);
        Echelon e;
        std::vector<SparseVec> next;
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (const auto& y : cur) {
                SparseVec v = g.bracket({{static_cast<int>(i), Scalar(1)}}, y);
                if (!v.empty() && e.insert(v)) next.push_back(v);
            }
        if (next.size() == cur.size()) {
            series.push_back(next);
            break;  // stabilized, not nilpotent
        }
        cur = std::move(next);
    }
    return series;
}

ValidationReport validate(const SuperLieAlgebra& g) {
    ValidationReport rep;
    const int n = static_cast<int>(g.dim());
    for (const auto& [key, v] : g.stored_brackets()) {
        const auto [i, j] = key;
        auto p = g.parity(v);
        const Parity expect = g.label(i).parity + g.label(j).parity;
        if (!p || *p != expect) {
            rep.parity_consistent = false;
            rep.failures.push_back("parity of [" + g.label(i).name + "," + g.label(j).name + "]");
        }
        const int wi = g.label(i).weight, wj = g.label(j).weight;
        if (wi > 0 && wj > 0)
            for (const auto& [k, c] : v)
                if (g.label(k).weight != wi + wj) {
                    rep.weight_consistent = false;
                    rep.failures.push_back("weight of [" + g.label(i).name + "," + g.label(j).name + "]");
                    break;
                }
        if (i == j && g.label(i).parity == Parity::Even && !v.empty()) {
            rep.antisymmetric = false;
            rep.failures.push_back("[" + g.label(i).name + "," + g.label(i).name + "] != 0");
        }
    }
    // Super Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]].
    for (int x = 0; x < n && rep.jacobi; ++x)
        for (int y = 0; y < n && rep.jacobi; ++y)
            for (int z = 0; z < n; ++z) {
                const SparseVec ex{{x, Scalar(1)}}, ey{{y, Scalar(1)}}, ez{{z, Scalar(1)}};
                SparseVec lhs = g.bracket(ex, g.bracket(y, z));
                SparseVec rhs = g.bracket(g.bracket(x, y), ez);
                sparse_axpy(rhs, koszul(g.label(x).parity, g.label(y).parity), g.bracket(ey, g.bracket(x, z)));
                if (lhs != rhs) {
                    rep.jacobi = false;
                    rep.failures.push_back("Jacobi fails on (" + g.label(x).name + "," + g.label(y).name + "," +
                                           g.label(z).name + ")");
                    break;
                }
            }
    auto lcs = lower_central_series(g);
    if (lcs.empty()) {
        rep.nilpotent = true;
        rep.nilpotency_class = 0;
    } else if (!lcs.back().empty() && lcs.size() >= 2 && lcs.back().size() == lcs[lcs.size() - 2].size()) {
        rep.nilpotent = false;
        rep.failures.push_back("lower central series stabilizes at a nonzero term");
    } else {
        rep.nilpotent = true;
        rep.nilpotency_class = static_cast<int>(lcs.size());
    }
    return rep;
}

}  // namespace sym
