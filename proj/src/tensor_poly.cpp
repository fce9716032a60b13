#include "superym/tensor_poly.hpp"

#include <stdexcept>

namespace sym {

TensorPoly TensorPoly::unit() { return word(Word{}); }
TensorPoly TensorPoly::letter(int g) { return word(Word{g}); }

TensorPoly TensorPoly::word(const Word& w, const Scalar& c) {
    TensorPoly p;
    p.add_term(w, c);
    return p;
}

Scalar TensorPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorPoly::add_term(const Word& w, const Scalar& c) {
    if (sym::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sym::is_zero(it->second)) terms_.erase(it);
    }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Scalar& c) {
    if (sym::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
    return r;
}

TensorPoly substitute(const TensorPoly& p, const std::vector<TensorPoly>& images) {
    TensorPoly out;
    for (const auto& [w, c] : p.terms()) {
        TensorPoly t = TensorPoly::unit() * c;
        for (std::size_t i = 0; i < w.size() && !t.is_zero(); ++i) t = t * images.at(w[i]);
        out += t;
    }
    return out;
}

std::optional<int> TensorPoly::weight(const Alphabet& a) const {
    std::optional<int> w;
    for (const auto& [word, c] : terms_) {
        int x = word.weight(a);
        if (w && *w != x) return std::nullopt;
        w = x;
    }
    return w;
}

std::optional<Parity> TensorPoly::parity(const Alphabet& a) const {
    std::optional<Parity> p;
    for (const auto& [word, c] : terms_) {
        Parity x = word.parity(a);
        if (p && *p != x) return std::nullopt;
        p = x;
    }
    return p;
}

bool TensorPoly::is_weight_homogeneous(const Alphabet& a) const { return is_zero() || weight(a).has_value(); }

std::string TensorPoly::str(const Alphabet& a) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Scalar v = c;
        if (!first) s += sgn(v) < 0 ? " - " : " + ";
        else if (sgn(v) < 0) s += "-";
        if (sgn(v) < 0) v = -v;
        if (v != 1 || w.empty()) s += to_string(v) + (w.empty() ? "" : "*");
        if (!w.empty()) s += w.str(a);
        first = false;
    }
    return s;
}

TensorPoly super_commutator(const Alphabet& a, const TensorPoly& u, const TensorPoly& v) {
    if (u.is_zero() || v.is_zero()) return {};
    auto pu = u.parity(a), pv = v.parity(a);
    if (!pu || !pv) throw std::invalid_argument("super_commutator: inputs must be parity-homogeneous");
    TensorPoly r = u * v;
    TensorPoly back = v * u;
    if (koszul(*pu, *pv) < 0) r += back;
    else r -= back;
    return r;
}

BracketExpr BracketExpr::leaf(int g) {
    if (g < 0) throw std::invalid_argument("negative generator index");
    BracketExpr e;
    auto n = std::make_shared<Node>();
    n->gen = g;
    e.node_ = std::move(n);
    return e;
}

BracketExpr BracketExpr::bracket(const BracketExpr& l, const BracketExpr& r) {
    BracketExpr e;
    auto n = std::make_shared<Node>();
    n->left = std::make_shared<const BracketExpr>(l);
    n->right = std::make_shared<const BracketExpr>(r);
    e.node_ = std::move(n);
    return e;
}

BracketExpr BracketExpr::right_normed(const std::vector<int>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty bracket");
    BracketExpr e = leaf(gens.back());
    for (std::size_t i = gens.size() - 1; i-- > 0;) e = bracket(leaf(gens[i]), e);
    return e;
}

int BracketExpr::weight(const Alphabet& a) const {
    return is_leaf() ? a[gen()].weight : left().weight(a) + right().weight(a);
}

std::string BracketExpr::str(const Alphabet& a) const {
    if (is_leaf()) return a[gen()].name;
    return "[" + left().str(a) + "," + right().str(a) + "]";
}

TensorPoly lie_expand(const Alphabet& a, const BracketExpr& e) {
    if (e.is_leaf()) {
        if (static_cast<std::size_t>(e.gen()) >= a.size()) throw std::invalid_argument("leaf outside alphabet");
        return TensorPoly::letter(e.gen());
    }
    return super_commutator(a, lie_expand(a, e.left()), lie_expand(a, e.right()));
}

TensorPoly cyclic_derivative(const Alphabet& a, const TensorPoly& w, int g) {
    TensorPoly r;
    for (const auto& [word, c] : w.terms()) {
        const std::size_t n = word.size();
        std::vector<int> suffix_par(n + 1, 0);
        for (std::size_t i = n; i-- > 0;) suffix_par[i] = suffix_par[i + 1] ^ bit(a[word[i]].parity);
        int prefix = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (word[i] == g) {
                int sign = (suffix_par[i] & prefix) ? -1 : 1;
                r.add_term(word.slice(i + 1, n).concat(word.slice(0, i)), sign * c);
            }
            prefix ^= bit(a[word[i]].parity);
        }
    }
    return r;
}

Derivation::Derivation(const Alphabet& a, std::vector<TensorPoly> images, Parity parity, int degree)
    : alphabet_(a), images_(std::move(images)), parity_(parity), degree_(degree) {
    if (images_.size() != a.size()) throw std::invalid_argument("derivation needs one image per generator");
}

TensorPoly Derivation::apply(const Word& w) const {
    TensorPoly r;
    int prefix = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const TensorPoly& img = images_[w[k]];
        if (!img.is_zero()) {
            Scalar sign = (bit(parity_) & prefix) ? -1 : 1;
            Word pre = w.slice(0, k), post = w.slice(k + 1, w.size());
            for (const auto& [iw, c] : img.terms()) r.add_term(pre.concat(iw).concat(post), sign * c);
        }
        prefix ^= bit(alphabet_[w[k]].parity);
    }
    return r;
}

TensorPoly Derivation::apply(const TensorPoly& p) const {
    TensorPoly r;
    for (const auto& [w, c] : p.terms()) r += apply(w) * c;
    return r;
}

Derivation extend_derivation(const Alphabet& a, std::vector<TensorPoly> images, Parity target_parity) {
    if (images.size() != a.size()) throw std::invalid_argument("derivation needs one image per generator");
    std::optional<int> degree;
    for (std::size_t g = 0; g < a.size(); ++g) {
        const TensorPoly& img = images[g];
        if (img.is_zero()) continue;
        auto p = img.parity(a);
        auto w = img.weight(a);
        if (!p || *p != a[g].parity + target_parity)
            throw std::invalid_argument("derivation image of " + a[g].name + " has inconsistent parity");
        if (!w) throw std::invalid_argument("derivation image of " + a[g].name + " is not weight-homogeneous");
        int deg = *w - a[g].weight;
        if (degree && *degree != deg)
            throw std::invalid_argument("derivation images have inconsistent weight shift");
        degree = deg;
    }
    return Derivation(a, std::move(images), target_parity, degree.value_or(0));
}

}  // namespace sym
