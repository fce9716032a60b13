#pragma once
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superym/alphabet.hpp"
#include "superym/scalar.hpp"
#include "superym/word.hpp"

namespace sym {

// Finite linear combination of tensor words; zero coefficients are never stored.
class TensorPoly {
public:
    using Terms = std::map<Word, Scalar>;

    TensorPoly() = default;
    static TensorPoly unit();
    static TensorPoly letter(int g);
    static TensorPoly word(const Word& w, const Scalar& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly& operator*=(const Scalar& c);

    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend TensorPoly operator*(TensorPoly a, const Scalar& c) { return a *= c; }
    friend TensorPoly operator*(const Scalar& c, TensorPoly a) { return a *= c; }
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    // Weight and parity of homogeneous polynomials; nullopt when mixed or zero.
    std::optional<int> weight(const Alphabet& a) const;
    std::optional<Parity> parity(const Alphabet& a) const;
    bool is_weight_homogeneous(const Alphabet& a) const;

    std::string str(const Alphabet& a) const;

private:
    Terms terms_;
};

// uv - (-1)^{|u||v|} vu. Throws std::invalid_argument for parity-inhomogeneous input.
TensorPoly super_commutator(const Alphabet& a, const TensorPoly& u, const TensorPoly& v);

// Bracket expression over generators: a leaf or a pair.
class BracketExpr {
public:
    static BracketExpr leaf(int g);
    static BracketExpr bracket(const BracketExpr& l, const BracketExpr& r);
    // [g0,[g1,[...,g_{k-1}]]]
    static BracketExpr right_normed(const std::vector<int>& gens);

    bool is_leaf() const { return node_->gen >= 0; }
    int gen() const { return node_->gen; }
    const BracketExpr& left() const { return *node_->left; }
    const BracketExpr& right() const { return *node_->right; }
    int weight(const Alphabet& a) const;
    std::string str(const Alphabet& a) const;

private:
    struct Node {
        int gen = -1;
        std::shared_ptr<const BracketExpr> left, right;
    };
    std::shared_ptr<const Node> node_;
};

TensorPoly lie_expand(const Alphabet& a, const BracketExpr& e);

// Algebra homomorphism TV -> TV' determined by the images of the letters.
TensorPoly substitute(const TensorPoly& p, const std::vector<TensorPoly>& images);

// Signed rotation-sum derivative of the class of w with respect to generator g.
TensorPoly cyclic_derivative(const Alphabet& a, const TensorPoly& w, int g);

// Homogeneous derivation of TV determined by generator images.
class Derivation {
public:
    Derivation(const Alphabet& a, std::vector<TensorPoly> images, Parity parity, int degree);
    TensorPoly apply(const TensorPoly& p) const;
    TensorPoly apply(const Word& w) const;
    Parity parity() const { return parity_; }
    int degree() const { return degree_; }
    const TensorPoly& image(int g) const { return images_[g]; }

private:
    Alphabet alphabet_;
    std::vector<TensorPoly> images_;
    Parity parity_;
    int degree_;
};

// Validates parity and weight consistency of the images, then builds the derivation.
Derivation extend_derivation(const Alphabet& a, std::vector<TensorPoly> images, Parity target_parity);

}  // namespace sym
