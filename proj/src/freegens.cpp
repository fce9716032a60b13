#include "superym/freegens.hpp"

#include <map>
#include <stdexcept>

namespace sym {

IdealSpec parse_ideal_spec(const std::string& s) {
    if (s == "tym-hat") return IdealSpec::TymHat;
    if (s == "tym") return IdealSpec::Tym;
    if (s == "k1s") return IdealSpec::K1s;
    throw std::invalid_argument("unsupported ideal: " + s);
}

std::string to_string(IdealSpec spec) {
    switch (spec) {
        case IdealSpec::TymHat: return "tym-hat";
        case IdealSpec::Tym: return "tym";
        case IdealSpec::K1s: return "k1s";
    }
    return "";
}

bool FreeGenReport::ok() const {
    for (const auto& w : weights)
        if (!w.matches()) return false;
    return true;
}

SparseVec bracket_coords(const LieQuotientModel& model, const SparseVec& x, const SparseVec& y) {
    std::map<int, Scalar> acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : model.bracket(i, j)) acc[k] += a * b * c;
    return sparse_from_map(acc);
}

namespace {

std::vector<SparseVec> full_weight(const LieQuotientModel& model, int w) {
    std::vector<SparseVec> out;
    const int off = static_cast<int>(model.offset(w));
    for (std::size_t k = 0; k < model.dim(w); ++k) out.push_back({{off + static_cast<int>(k), Scalar(1)}});
    return out;
}

}  // namespace

std::vector<std::vector<SparseVec>> ideal_basis(const LieQuotientModel& model, IdealSpec spec, int n, int s,
                                                int max_weight) {
    if (max_weight > model.max_weight()) throw std::out_of_range("ideal basis: weight beyond model cutoff");
    const Alphabet& A = model.alphabet();
    std::vector<std::vector<SparseVec>> h(max_weight + 1);
    auto letter = [&](int g) { return model.coordinates(TensorPoly::letter(g)); };
    switch (spec) {
        case IdealSpec::TymHat:
            if (n < 2) throw std::invalid_argument("tym-hat needs n >= 2");
            for (int i = 2; i < n && max_weight >= 2; ++i) h[2].push_back(letter(i));
            [[fallthrough]];
        case IdealSpec::Tym:
            if (n < 2) throw std::invalid_argument("tym needs n >= 2");
            for (int w = 3; w <= max_weight; ++w) h[w] = full_weight(model, w);
            break;
        case IdealSpec::K1s: {
            if (n != 1 || s < 3) throw std::invalid_argument("k1s needs n = 1 and s >= 3");
            std::vector<Echelon> ech(max_weight + 1);
            auto add = [&](int w, const SparseVec& v) {
                if (w <= max_weight && !v.empty() && ech[w].insert(v)) h[w].push_back(v);
            };
            for (int a = 2; a < s; ++a) add(3, letter(1 + a));
            add(6, model.coordinates(super_commutator(A, TensorPoly::letter(1), TensorPoly::letter(2))));
            for (int w = 1; w <= max_weight; ++w) {
                if (w >= 9) {
                    h[w] = full_weight(model, w);
                    continue;
                }
                for (std::size_t g = 0; g < A.size(); ++g) {
                    const int u = w - A[g].weight;
                    if (u < 1) continue;
                    const SparseVec gv = letter(static_cast<int>(g));
                    for (const auto& v : std::vector<SparseVec>(h[u])) add(w, bracket_coords(model, gv, v));
                }
            }
            break;
        }
    }
    return h;
}

FreeGenReport extract_free_generators(const LieQuotientModel& model, IdealSpec spec, int n, int s, int max_weight) {
    FreeGenReport rep;
    rep.spec = spec;
    rep.n = n;
    rep.s = s;
    rep.max_weight = max_weight;
    const auto h = ideal_basis(model, spec, n, s, max_weight);
    for (int w = 1; w <= max_weight; ++w) {
        FreeGenWeight fw;
        fw.weight = w;
        fw.ideal_dim = h[w].size();
        Echelon e;
        for (int u = 1; 2 * u <= w; ++u)
            for (std::size_t i = 0; i < h[u].size(); ++i)
                for (std::size_t j = (2 * u == w ? i : 0); j < h[w - u].size(); ++j)
                    e.insert(bracket_coords(model, h[u][i], h[w - u][j]));
        fw.bracket_dim = e.rank();
        for (const auto& b : h[w])
            if (e.insert(b)) fw.representatives.push_back(b);
        fw.generators = fw.representatives.size();
        switch (spec) {
            case IdealSpec::TymHat: fw.expected = hat_W_coeff(n, s, w); break;
            case IdealSpec::Tym: fw.expected = W_coeff(n, s, w); break;
            case IdealSpec::K1s: fw.expected = tilde_W_coeff(s, w); break;
        }
        rep.weights.push_back(std::move(fw));
    }
    return rep;
}

}  // namespace sym
