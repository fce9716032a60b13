#include "superym/resolution.hpp"

#include <map>
#include <stdexcept>

namespace sym {

namespace {

using Columns = std::vector<SparseVec>;  // image of each source basis vector

struct Blocks {
    std::vector<std::size_t> start;  // per symbol
    std::size_t total = 0;
};

Blocks blocks_for(const AssocQuotientModel& m, const std::vector<int>& weights, int w) {
    Blocks b;
    for (int q : weights) {
        b.start.push_back(b.total);
        if (w - q >= 0) b.total += m.dim(w - q);
    }
    return b;
}

void add_scaled(std::map<int, Scalar>& acc, const SparseVec& v, const Scalar& c, std::size_t shift) {
    for (const auto& [k, x] : v) acc[static_cast<int>(shift + k)] += c * x;
}

// Applies a map given by columns to a vector in the source space.
SparseVec apply_map(const Columns& cols, const SparseVec& v) {
    std::map<int, Scalar> acc;
    for (const auto& [k, c] : v)
        for (const auto& [j, x] : cols[k]) acc[j] += c * x;
    return sparse_from_map(acc);
}

std::size_t rank_of(const Columns& cols) { return sparse_rank(cols); }

}  // namespace

bool ResolutionReport::ok() const {
    for (const auto& w : weights)
        if (!w.ok()) return false;
    return !weights.empty();
}

ResolutionReport verify_resolution(const AssocQuotientModel& m, int max_weight, ResolutionSide side) {
    if (max_weight > m.max_weight()) throw std::out_of_range("resolution: weight beyond model cutoff");
    const Alphabet& A = m.alphabet();
    const auto& rels = m.relations();
    if (rels.size() != A.size()) throw std::invalid_argument("resolution: need one relation per generator");
    std::vector<int> gw, rw;
    for (std::size_t g = 0; g < A.size(); ++g) gw.push_back(A[g].weight);
    int top = -1;
    for (std::size_t k = 0; k < rels.size(); ++k) {
        rw.push_back(*rels[k].weight(A));
        const int t = gw[k] + rw[k];
        if (top >= 0 && t != top) throw std::invalid_argument("resolution: omega not homogeneous");
        top = t;
    }
    const bool left = side == ResolutionSide::Left;
    // Normal form of prefix.word.suffix in the model, as coordinates.
    auto nf = [&](const Word& a, const Word& b) -> const SparseVec& { return m.nf_word(a.concat(b)); };

    auto one_weight = [&](int w) {
        ResolutionWeight R;
        R.weight = w;
        const Blocks c1 = blocks_for(m, gw, w), c2 = blocks_for(m, rw, w);
        R.dim[0] = m.dim(w);
        R.dim[1] = c1.total;
        R.dim[2] = c2.total;
        R.dim[3] = w >= top ? m.dim(w - top) : 0;

        Columns b1, b2, b3;
        // b1: m(x)g -> mg  |  g(x)m -> gm
        for (std::size_t g = 0; g < A.size(); ++g) {
            if (w - gw[g] < 0) continue;
            Word gl{static_cast<int>(g)};
            for (const Word& mw : m.normal_words(w - gw[g])) b1.push_back(left ? nf(mw, gl) : nf(gl, mw));
        }
        // b2: split each relation word at its last (left) or first (right) letter.
        for (std::size_t k = 0; k < rels.size(); ++k) {
            if (w - rw[k] < 0) continue;
            for (const Word& mw : m.normal_words(w - rw[k])) {
                std::map<int, Scalar> acc;
                for (const auto& [u, c] : rels[k].terms()) {
                    const int g = left ? u[u.size() - 1] : u[0];
                    Word rest = left ? u.slice(0, u.size() - 1) : u.slice(1, u.size());
                    add_scaled(acc, left ? nf(mw, rest) : nf(rest, mw), c, c1.start[g]);
                }
                b2.push_back(sparse_from_map(acc));
            }
        }
        // b3: m -> sum m g (x) r_g  |  sum (+/-) r_g (x) g m, minus for odd g on the right.
        if (w >= top) {
            for (const Word& mw : m.normal_words(w - top)) {
                std::map<int, Scalar> acc;
                for (std::size_t g = 0; g < A.size(); ++g) {
                    Word gl{static_cast<int>(g)};
                    const Scalar sign = (!left && A[g].parity == Parity::Odd) ? -1 : 1;
                    add_scaled(acc, left ? nf(mw, gl) : nf(gl, mw), sign, c2.start[g]);
                }
                b3.push_back(sparse_from_map(acc));
            }
        }
        for (const auto& col : b2)
            if (!apply_map(b1, col).empty()) R.b1b2_zero = false;
        for (const auto& col : b3)
            if (!apply_map(b2, col).empty()) R.b2b3_zero = false;
        R.rank[0] = w == 0 ? 1 : 0;
        R.rank[1] = rank_of(b1);
        R.rank[2] = rank_of(b2);
        R.rank[3] = rank_of(b3);
        R.b3_injective = R.rank[3] == R.dim[3];
        R.exact = R.rank[0] + R.rank[1] == R.dim[0] && R.rank[1] + R.rank[2] == R.dim[1] &&
                  R.rank[2] + R.rank[3] == R.dim[2];
        R.euler = static_cast<long long>(R.dim[0]) - static_cast<long long>(R.dim[1]) +
                  static_cast<long long>(R.dim[2]) - static_cast<long long>(R.dim[3]);
        return R;
    };

    ResolutionReport rep;
    rep.side = side;
    for (int w = 0; w <= max_weight; ++w) rep.weights.push_back(one_weight(w));
    return rep;
}

TensorPoly omega_element(const SymPresentation& p) {
    auto rels = build_relations(p);
    TensorPoly om;
    for (std::size_t g = 0; g < rels.size(); ++g) om += TensorPoly::letter(static_cast<int>(g)) * rels[g];
    return om;
}

bool omega_identity(const SymPresentation& p) {
    const Alphabet A = p.alphabet();
    auto rels = build_relations(p);
    TensorPoly sum;
    for (std::size_t g = 0; g < rels.size(); ++g)
        sum += super_commutator(A, TensorPoly::letter(static_cast<int>(g)), rels[g]);
    return sum.is_zero();
}

}  // namespace sym
