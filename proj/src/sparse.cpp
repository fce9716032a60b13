#include "superym/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace sym {

SparseVec sparse_from_map(const std::map<int, Scalar>& m) {
    SparseVec v;
    v.reserve(m.size());
    for (const auto& [c, x] : m)
        if (!is_zero(x)) v.emplace_back(c, x);
    return v;
}

void sparse_axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
    if (is_zero(a) || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Scalar s = y[i].second + a * x[j].second;
            if (!is_zero(s)) out.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVec sparse_scale(const SparseVec& x, const Scalar& a) {
    if (is_zero(a)) return {};
    SparseVec r = x;
    for (auto& [c, v] : r) v *= a;
    return r;
}

Scalar sparse_dot(const SparseVec& x, const SparseVec& y) {
    Scalar s = 0;
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first) ++i;
        else if (y[j].first < x[i].first) ++j;
        else s += x[i++].second * y[j++].second;
    }
    return s;
}

Scalar sparse_get(const SparseVec& x, int col) {
    auto it = std::lower_bound(x.begin(), x.end(), col, [](const auto& e, int c) { return e.first < c; });
    return (it != x.end() && it->first == col) ? it->second : Scalar(0);
}

Echelon::Reduced Echelon::reduce(const SparseVec& v, const SparseVec& aux, bool track_aux) const {
    std::map<int, Scalar> acc;
    for (const auto& [c, x] : v) acc.emplace(c, x);
    SparseVec a = aux;
    auto it = acc.begin();
    while (it != acc.end()) {
        auto p = pivot_.find(it->first);
        if (p == pivot_.end()) {
            ++it;
            continue;
        }
        const int col = it->first;
        const Scalar c = it->second;
        const Row& row = rows_[p->second];
        for (const auto& [rc, rv] : row.v) {
            auto [jt, inserted] = acc.try_emplace(rc, 0);
            jt->second -= c * rv;
            if (is_zero(jt->second)) acc.erase(jt);
        }
        if (track_aux) sparse_axpy(a, -c, row.aux);
        it = acc.upper_bound(col);
    }
    return {sparse_from_map(acc), std::move(a)};
}

bool Echelon::insert(const SparseVec& v, const SparseVec& aux) {
    if (!aux.empty()) has_aux_ = true;
    const bool track = has_aux_;
    Reduced r = reduce(v, aux, track);
    if (r.residual.empty()) return false;
    Scalar inv = 1 / r.residual.front().second;
    Row row{sparse_scale(r.residual, inv), sparse_scale(r.aux, inv)};
    pivot_.emplace(row.v.front().first, rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

std::vector<int> Echelon::pivots() const {
    std::vector<int> p;
    for (const auto& [c, i] : pivot_) p.push_back(c);
    return p;
}

std::size_t sparse_rank(std::vector<SparseVec> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) { return a.size() < b.size(); });
    Echelon e;
    for (const auto& r : rows)
        if (!r.empty()) e.insert(r);
    return e.rank();
}

namespace {
// Row reduction in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols, Scalar* det_sign = nullptr) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t k = r;
        while (k < m.size() && is_zero(m[k][c])) ++k;
        if (k == m.size()) continue;
        if (k != r) {
            std::swap(m[k], m[r]);
            if (det_sign) *det_sign = -*det_sign;
        }
        Scalar inv = 1 / m[r][c];
        if (det_sign) *det_sign *= m[r][c];
        for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}
}  // namespace

std::size_t dense_rank(Matrix m) {
    if (m.empty()) return 0;
    return rref(m, m[0].size()).size();
}

Scalar dense_det(Matrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Scalar d = 1;
    auto piv = rref(m, n, &d);
    return piv.size() == n ? d : Scalar(0);
}

Matrix dense_inverse(const Matrix& m) {
    const std::size_t n = m.size();
    Matrix aug = zero_matrix(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug, n);
    if (piv.size() != n) throw std::domain_error("singular matrix");
    Matrix inv = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<std::vector<Scalar>> dense_kernel(const Matrix& m, std::size_t cols) {
    Matrix a = m;
    auto piv = rref(a, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Scalar> x(cols, Scalar(0));
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix c = zero_matrix(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

Matrix transpose(const Matrix& a) {
    if (a.empty()) return {};
    Matrix t = zero_matrix(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

}  // namespace sym
