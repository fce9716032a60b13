#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superym/superlie.hpp"

namespace sym {

// Values of an even functional on the basis; entries on odd basis vectors must be zero.
using EvenFunctional = std::vector<Scalar>;

EvenFunctional make_functional(const SuperLieAlgebra& g, const std::map<std::string, Scalar>& values);
Scalar evaluate(const EvenFunctional& f, const SparseVec& x);

struct KirillovForm {
    std::vector<int> even_index, odd_index;  // basis indices of each block
    Matrix even_block;                       // antisymmetric
    Matrix odd_block;                        // symmetric
    bool cross_zero = true;                  // f([g0,g1]) = 0
};
KirillovForm kirillov_form(const SuperLieAlgebra& g, const EvenFunctional& f);

struct IdealWeight {
    std::size_t weyl = 0;
    std::size_t clifford = 0;
    friend bool operator==(const IdealWeight& a, const IdealWeight& b) {
        return a.weyl == b.weyl && a.clifford == b.clifford;
    }
};
IdealWeight weight_of(const SuperLieAlgebra& g, const EvenFunctional& f);

bool is_subalgebra(const SuperLieAlgebra& g, const std::vector<SparseVec>& h);
bool subordinate_check(const SuperLieAlgebra& g, const EvenFunctional& f, const std::vector<SparseVec>& h);
// {x in g : f([x, y]) = 0 for all y in h}, homogeneous basis.
std::vector<SparseVec> stabilizer_subspace(const SuperLieAlgebra& g, const std::vector<SparseVec>& h,
                                           const EvenFunctional& f);

struct Polarization {
    bool ok = false;
    std::string error;                  // "field extension required" when the odd target is unreachable over Q
    std::vector<SparseVec> basis;
    std::size_t dim_even = 0, dim_odd = 0;
    std::size_t target_even = 0, target_odd = 0;
    bool subalgebra = false, subordinate = false;
};
// Flag vectors v_1..v_N with span(v_1..v_i) an ideal; defaults to weight-descending order when g is graded,
// otherwise a refinement of the lower central series.
std::vector<SparseVec> default_flag(const SuperLieAlgebra& g);
Polarization vergne_polarization(const SuperLieAlgebra& g, const EvenFunctional& f,
                                 const std::optional<std::vector<SparseVec>>& flag = std::nullopt);

// Basis q1..qr, p1..pr, z, a1..a_t', b1..b_t' (, c when t is odd).
SuperLieAlgebra heis(int r, int t);

// Element of U(heis_{2r,t})/<z-1> in the PBW basis a^e b^e' c^d q^alpha p^beta.
class CWAlgebra {
public:
    using Monomial = std::vector<int>;  // nondecreasing letters in the order a.., b.., c, q.., p..
    using Element = std::map<Monomial, Scalar>;
    CWAlgebra(int r, int t);
    int r() const { return r_; }
    int t() const { return t_; }
    std::size_t letters() const { return names_.size(); }
    const std::string& name(int letter) const { return names_[letter]; }
    bool odd(int letter) const { return letter < odd_count_; }
    int a(int i) const { return i; }
    int b(int i) const { return tp_ + i; }
    int c() const { return 2 * tp_; }  // valid when t is odd
    int q(int i) const { return odd_count_ + i; }
    int p(int i) const { return odd_count_ + r_ + i; }

    Element unit() const { return {{Monomial{}, Scalar(1)}}; }
    Element letter(int l) const { return {{Monomial{l}, Scalar(1)}}; }
    Element multiply(const Element& u, const Element& v) const;
    Element add(const Element& u, const Element& v) const;
    Element scale(const Element& u, const Scalar& c) const;
    // Normal form of an arbitrary word of letters.
    Element normal_form(const std::vector<int>& word) const;
    std::string str(const Element& u) const;

private:
    void reduce(std::vector<int> word, const Scalar& c, Element& out) const;
    int r_, t_, tp_, odd_count_;
    std::vector<std::string> names_;
};

}  // namespace sym
