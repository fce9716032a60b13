#include "superym/dixmier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sym {

namespace {

SparseVec unit_vec(int i) { return {{i, Scalar(1)}}; }

bool is_odd(const SuperLieAlgebra& g, int i) { return g.label(i).parity == Parity::Odd; }

// Rows of a dense matrix restricted to the subspace spanned by vectors.
Matrix gram(const SuperLieAlgebra& g, const EvenFunctional& f, const std::vector<SparseVec>& u,
            const std::vector<SparseVec>& v) {
    Matrix m = zero_matrix(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m[i][j] = evaluate(f, g.bracket(u[i], v[j]));
    return m;
}

SparseVec combine(const std::vector<SparseVec>& vs, const std::vector<Scalar>& c) {
    std::map<int, Scalar> acc;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!is_zero(c[i]))
            for (const auto& [k, x] : vs[i]) acc[k] += c[i] * x;
    return sparse_from_map(acc);
}

bool vec_odd(const SuperLieAlgebra& g, const SparseVec& v) { return !v.empty() && is_odd(g, v.front().first); }

}  // namespace

EvenFunctional make_functional(const SuperLieAlgebra& g, const std::map<std::string, Scalar>& values) {
    EvenFunctional f(g.dim(), Scalar(0));
    for (const auto& [name, v] : values) {
        const int i = g.index_of(name);
        if (i < 0) throw std::invalid_argument("functional: unknown basis element " + name);
        if (is_odd(g, i) && !is_zero(v)) throw std::invalid_argument("functional: nonzero value on odd element " + name);
        f[i] = v;
    }
    return f;
}

Scalar evaluate(const EvenFunctional& f, const SparseVec& x) {
    Scalar s = 0;
    for (const auto& [k, c] : x) s += f.at(k) * c;
    return s;
}

KirillovForm kirillov_form(const SuperLieAlgebra& g, const EvenFunctional& f) {
    if (f.size() != g.dim()) throw std::invalid_argument("functional size mismatch");
    KirillovForm K;
    for (int i = 0; i < static_cast<int>(g.dim()); ++i) {
        if (is_odd(g, i)) {
            if (!is_zero(f[i])) throw std::invalid_argument("functional is not even");
            K.odd_index.push_back(i);
        } else {
            K.even_index.push_back(i);
        }
    }
    auto block = [&](const std::vector<int>& a, const std::vector<int>& b) {
        Matrix m = zero_matrix(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = evaluate(f, g.bracket(a[i], b[j]));
        return m;
    };
    K.even_block = block(K.even_index, K.even_index);
    K.odd_block = block(K.odd_index, K.odd_index);
    for (const auto& row : block(K.even_index, K.odd_index))
        for (const auto& x : row)
            if (!is_zero(x)) K.cross_zero = false;
    return K;
}

IdealWeight weight_of(const SuperLieAlgebra& g, const EvenFunctional& f) {
    const KirillovForm K = kirillov_form(g, f);
    const std::size_t er = dense_rank(K.even_block);
    if (er % 2 != 0) throw std::logic_error("antisymmetric block of odd rank");
    return {er / 2, dense_rank(K.odd_block)};
}

bool is_subalgebra(const SuperLieAlgebra& g, const std::vector<SparseVec>& h) {
    Echelon e;
    for (const auto& v : h) e.insert(v);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i; j < h.size(); ++j)
            if (!e.contains(g.bracket(h[i], h[j]))) return false;
    return true;
}

bool subordinate_check(const SuperLieAlgebra& g, const EvenFunctional& f, const std::vector<SparseVec>& h) {
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i; j < h.size(); ++j)
            if (!is_zero(evaluate(f, g.bracket(h[i], h[j])))) return false;
    return true;
}

std::vector<SparseVec> stabilizer_subspace(const SuperLieAlgebra& g, const std::vector<SparseVec>& h,
                                           const EvenFunctional& f) {
    std::vector<SparseVec> out;
    for (int parity = 0; parity < 2; ++parity) {
        std::vector<SparseVec> part;
        for (int i = 0; i < static_cast<int>(g.dim()); ++i)
            if (static_cast<int>(is_odd(g, i)) == parity) part.push_back(unit_vec(i));
        if (part.empty()) continue;
        // Condition rows: for each y in h, sum_k c_k f([e_k, y]) = 0.
        Matrix m = transpose(gram(g, f, part, h));
        if (m.empty()) m = zero_matrix(1, part.size());
        for (const auto& c : dense_kernel(m, part.size())) out.push_back(combine(part, c));
    }
    return out;
}

std::vector<SparseVec> default_flag(const SuperLieAlgebra& g) {
    std::vector<SparseVec> flag;
    bool graded = g.dim() > 0;
    for (const auto& b : g.basis())
        if (b.weight <= 0) graded = false;
    if (graded) {
        std::vector<int> idx(g.dim());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return g.label(a).weight > g.label(b).weight; });
        for (int i : idx) flag.push_back(unit_vec(i));
        return flag;
    }
    auto lcs = lower_central_series(g);
    Echelon e;
    for (auto it = lcs.rbegin(); it != lcs.rend(); ++it) {
        std::vector<SparseVec> layer = *it;
        std::stable_sort(layer.begin(), layer.end(),
                         [&](const SparseVec& a, const SparseVec& b) { return !vec_odd(g, a) && vec_odd(g, b); });
        for (const auto& v : layer)
            if (e.insert(v)) flag.push_back(v);
    }
    return flag;
}

Polarization vergne_polarization(const SuperLieAlgebra& g, const EvenFunctional& f,
                                 const std::optional<std::vector<SparseVec>>& flag_in) {
    Polarization P;
    const std::vector<SparseVec> flag = flag_in ? *flag_in : default_flag(g);
    const IdealWeight wt = weight_of(g, f);
    P.target_even = g.dim_even() - wt.weyl;
    P.target_odd = g.dim_odd() - (wt.clifford + 1) / 2;

    Echelon sum;
    std::vector<SparseVec> basis;
    auto add = [&](const SparseVec& v) {
        if (!v.empty() && sum.insert(v)) basis.push_back(v);
    };
    std::vector<SparseVec> ev, od;
    for (const auto& v : flag) {
        (vec_odd(g, v) ? od : ev).push_back(v);
        // Radical of the form restricted to the current ideal, block by block.
        for (auto* part : {&ev, &od}) {
            if (part->empty()) continue;
            Matrix m = gram(g, f, *part, *part);
            for (const auto& c : dense_kernel(m, part->size())) add(combine(*part, c));
        }
    }
    auto count = [&]() {
        P.dim_even = P.dim_odd = 0;
        for (const auto& v : basis) (vec_odd(g, v) ? P.dim_odd : P.dim_even)++;
    };
    count();
    // Rational isotropic augmentation of the odd part.
    if (P.dim_even == P.target_even && P.dim_odd < P.target_odd) {
        std::vector<SparseVec> odd_all;
        for (int i = 0; i < static_cast<int>(g.dim()); ++i)
            if (is_odd(g, i)) odd_all.push_back(unit_vec(i));
        bool progress = true;
        while (P.dim_odd < P.target_odd && progress) {
            progress = false;
            Matrix m = transpose(gram(g, f, odd_all, basis));
            if (m.empty()) m = zero_matrix(1, odd_all.size());
            std::vector<SparseVec> perp;
            for (const auto& c : dense_kernel(m, odd_all.size())) perp.push_back(combine(odd_all, c));
            std::vector<SparseVec> cands = perp;
            for (std::size_t i = 0; i < perp.size(); ++i)
                for (std::size_t j = i + 1; j < perp.size(); ++j)
                    for (int a = -2; a <= 2; ++a) {
                        if (a == 0) continue;
                        SparseVec v = perp[i];
                        sparse_axpy(v, Scalar(a), perp[j]);
                        cands.push_back(v);
                    }
            for (const auto& v : cands) {
                if (sum.contains(v) || !is_zero(evaluate(f, g.bracket(v, v)))) continue;
                std::vector<SparseVec> trial = basis;
                trial.push_back(v);
                if (is_subalgebra(g, trial) && subordinate_check(g, f, trial)) {
                    add(v);
                    count();
                    progress = true;
                    break;
                }
            }
        }
    }
    P.basis = basis;
    P.subalgebra = is_subalgebra(g, basis);
    P.subordinate = subordinate_check(g, f, basis);
    if (P.dim_even == P.target_even && P.dim_odd == P.target_odd && P.subalgebra && P.subordinate) {
        P.ok = true;
    } else if (P.dim_odd < P.target_odd) {
        P.error = "field extension required";
    } else {
        P.error = "polarization check failed";
    }
    return P;
}

SuperLieAlgebra heis(int r, int t) {
    if (r < 0 || t < 0) throw std::invalid_argument("heis: negative parameters");
    std::vector<BasisLabel> b;
    for (int i = 1; i <= r; ++i) b.push_back({"q" + std::to_string(i), Parity::Even, 0});
    for (int i = 1; i <= r; ++i) b.push_back({"p" + std::to_string(i), Parity::Even, 0});
    b.push_back({"z", Parity::Even, 0});
    const int tp = t / 2;
    for (int i = 1; i <= tp; ++i) b.push_back({"a" + std::to_string(i), Parity::Odd, 0});
    for (int i = 1; i <= tp; ++i) b.push_back({"b" + std::to_string(i), Parity::Odd, 0});
    if (t % 2) b.push_back({"c", Parity::Odd, 0});
    SuperLieAlgebra g(std::move(b));
    const int z = 2 * r;
    for (int i = 0; i < r; ++i) g.set_bracket(i, r + i, unit_vec(z));
    for (int i = 0; i < tp; ++i) g.set_bracket(z + 1 + i, z + 1 + tp + i, unit_vec(z));
    if (t % 2) g.set_bracket(z + 1 + 2 * tp, z + 1 + 2 * tp, unit_vec(z));
    return g;
}

CWAlgebra::CWAlgebra(int r, int t) : r_(r), t_(t), tp_(t / 2), odd_count_(t) {
    if (r < 0 || t < 0) throw std::invalid_argument("CW algebra: negative parameters");
    for (int i = 1; i <= tp_; ++i) names_.push_back("a" + std::to_string(i));
    for (int i = 1; i <= tp_; ++i) names_.push_back("b" + std::to_string(i));
    if (t % 2) names_.push_back("c");
    for (int i = 1; i <= r; ++i) names_.push_back("q" + std::to_string(i));
    for (int i = 1; i <= r; ++i) names_.push_back("p" + std::to_string(i));
}

void CWAlgebra::reduce(std::vector<int> word, const Scalar& c, Element& out) const {
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
        const int u = word[k], v = word[k + 1];
        if (u == v && odd(u)) {
            // a^2 = b^2 = 0, c^2 = [c,c]/2 = 1/2
            if (t_ % 2 && u == this->c()) {
                std::vector<int> rest(word.begin(), word.begin() + k);
                rest.insert(rest.end(), word.begin() + k + 2, word.end());
                reduce(std::move(rest), c / 2, out);
            }
            return;
        }
        if (u <= v) continue;
        std::vector<int> swapped = word;
        std::swap(swapped[k], swapped[k + 1]);
        const bool both_odd = odd(u) && odd(v);
        // Contraction: b_i a_i = -a_i b_i + 1, p_i q_i = q_i p_i - 1.
        Scalar contraction = 0;
        if (both_odd && u >= tp_ && u < 2 * tp_ && v == u - tp_) contraction = 1;
        if (!odd(u) && !odd(v) && u >= odd_count_ + r_ && v == u - r_) contraction = -1;
        if (!is_zero(contraction)) {
            std::vector<int> rest(word.begin(), word.begin() + k);
            rest.insert(rest.end(), word.begin() + k + 2, word.end());
            reduce(std::move(rest), c * contraction, out);
        }
        reduce(std::move(swapped), both_odd ? -c : c, out);
        return;
    }
    auto [it, ins] = out.try_emplace(word, 0);
    it->second += c;
    if (is_zero(it->second)) out.erase(it);
}

CWAlgebra::Element CWAlgebra::normal_form(const std::vector<int>& word) const {
    Element out;
    for (int l : word)
        if (l < 0 || l >= static_cast<int>(letters())) throw std::out_of_range("CW algebra: bad letter");
    reduce(word, Scalar(1), out);
    return out;
}

CWAlgebra::Element CWAlgebra::multiply(const Element& u, const Element& v) const {
    Element out;
    for (const auto& [mu, cu] : u)
        for (const auto& [mv, cv] : v) {
            std::vector<int> w = mu;
            w.insert(w.end(), mv.begin(), mv.end());
            reduce(std::move(w), cu * cv, out);
        }
    return out;
}

CWAlgebra::Element CWAlgebra::add(const Element& u, const Element& v) const {
    Element out = u;
    for (const auto& [m, c] : v) {
        auto [it, ins] = out.try_emplace(m, 0);
        it->second += c;
        if (is_zero(it->second)) out.erase(it);
    }
    return out;
}

CWAlgebra::Element CWAlgebra::scale(const Element& u, const Scalar& c) const {
    if (is_zero(c)) return {};
    Element out = u;
    for (auto& [m, x] : out) x *= c;
    return out;
}

std::string CWAlgebra::str(const Element& u) const {
    if (u.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : u) {
        if (!s.empty()) s += " + ";
        s += to_string(c);
        for (int l : m) s += "*" + names_[l];
    }
    return s;
}

}  // namespace sym
