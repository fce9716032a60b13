#include "superym/reference_bases.hpp"

#include <stdexcept>

namespace sym {

namespace {

constexpr int X1 = 0, X2 = 1, X3 = 2, Z = 3;

int xi(int i) { return i - 1; }

// x_{ijk...} = [x_i,[x_j,[x_k,...]]] from a digit string.
std::vector<int> xs(const std::string& digits) {
    std::vector<int> g;
    for (char c : digits) g.push_back(xi(c - '0'));
    return g;
}

BracketTerm term(const Scalar& c, std::vector<int> g) { return {c, std::move(g)}; }

}  // namespace

std::vector<std::vector<int>> ym31_reference_basis(int l) {
    if (l < 5 || l > 7) throw std::invalid_argument("reference bases exist for l = 5, 6, 7");
    std::vector<std::vector<int>> b = {{X1}, {X2}, {X3}, {Z}, xs("12"), xs("13"), xs("23"), {X2, Z}, {X3, Z},
                                       xs("112"), xs("221"), xs("113"), xs("123"), xs("312"), {Z, Z}};
    if (l >= 6)
        for (const char* ij : {"12", "13", "22", "23", "32", "33"}) b.push_back({xi(ij[0] - '0'), xi(ij[1] - '0'), Z});
    if (l >= 7) {
        for (const char* w : {"1112", "1221", "1113", "1123", "2221", "2113", "2312", "3112", "3221", "3312"})
            b.push_back(xs(w));
        b.push_back({X2, Z, Z});
        b.push_back({X3, Z, Z});
    }
    return b;
}

std::vector<BracketRelation> ym31_reference_relations() {
    const Scalar h(1, 2), q(1, 4);
    std::vector<BracketRelation> r;
    r.push_back({"x332 = -x112", {term(1, xs("332")), term(1, xs("112"))}});
    r.push_back({"x331 = -x221 + [z1,z1]/2", {term(1, xs("331")), term(1, xs("221")), term(-h, {Z, Z})}});
    r.push_back({"x223 = -x113", {term(1, xs("223")), term(1, xs("113"))}});
    r.push_back({"x213 = x123 + x312", {term(1, xs("213")), term(-1, xs("123")), term(-1, xs("312"))}});
    r.push_back({"y1 = 0", {term(1, {X1, Z})}});
    for (const char* ij : {"12", "13", "23"}) {
        const int i = xi(ij[0] - '0'), j = xi(ij[1] - '0');
        r.push_back({std::string("[z1,x") + ij + "] = y" + ij[1] + ij[0] + " - y" + ij,
                     {term(1, {Z, i, j}), term(-1, {j, i, Z}), term(1, {i, j, Z})}});
    }
    for (int i : {X1, X2, X3})
        r.push_back({"[z1,[x" + std::to_string(i + 1) + ",z1]] = [x" + std::to_string(i + 1) + ",[z1,z1]]/2",
                     {term(1, {Z, i, Z}), term(-h, {i, Z, Z})}});
    r.push_back({"x3113 = x1221", {term(1, xs("3113")), term(-1, xs("1221"))}});
    r.push_back({"x2112 = -x1221", {term(1, xs("2112")), term(1, xs("1221"))}});
    r.push_back({"x2123 = x3221 + x2312 - x1113",
                 {term(1, xs("2123")), term(-1, xs("3221")), term(-1, xs("2312")), term(1, xs("1113"))}});
    r.push_back({"x1312 = (x3112 + x2113 - x1123)/2",
                 {term(1, xs("1312")), term(-h, xs("3112")), term(-h, xs("2113")), term(h, xs("1123"))}});
    r.push_back({"x3123 = (x1112 + x2221 - x3312)/2 - [x2,[z1,z1]]/4",
                 {term(1, xs("3123")), term(-h, xs("1112")), term(-h, xs("2221")), term(h, xs("3312")),
                  term(q, {X2, Z, Z})}});
    return r;
}

TensorPoly bracket_combination(const Alphabet& a, const std::vector<BracketTerm>& terms) {
    TensorPoly p;
    for (const auto& t : terms) p += lie_expand(a, BracketExpr::right_normed(t.gens)) * t.coeff;
    return p;
}

bool ReferenceBasisCheck::relations_hold() const {
    for (const auto& [label, ok] : relations)
        if (!ok) return false;
    return true;
}

ReferenceBasisCheck check_reference_basis(const LieQuotientModel& model, const std::vector<std::vector<int>>& set,
                                          const std::vector<BracketRelation>& relations) {
    ReferenceBasisCheck c;
    c.size = set.size();
    c.model_dim = model.total_dim();
    std::vector<SparseVec> rows;
    for (const auto& g : set) rows.push_back(model.coordinates(lie_expand(model.alphabet(), BracketExpr::right_normed(g))));
    c.rank = sparse_rank(rows);
    c.independent = c.rank == c.size;
    c.spanning = c.rank == c.model_dim;
    for (const auto& r : relations) {
        const TensorPoly p = bracket_combination(model.alphabet(), r.terms);
        c.relations.emplace_back(r.label, p.is_zero() || model.coordinates(p).empty());
    }
    return c;
}

}  // namespace sym
