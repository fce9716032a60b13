#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superym/alphabet.hpp"
#include "superym/sparse.hpp"

namespace sym {

struct BasisLabel {
    std::string name;
    Parity parity = Parity::Even;
    int weight = 0;  // 0 when ungraded
};

// Finite-dimensional super Lie algebra given by structure constants in a fixed basis.
class SuperLieAlgebra {
public:
    SuperLieAlgebra() = default;
    explicit SuperLieAlgebra(std::vector<BasisLabel> basis);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisLabel>& basis() const { return basis_; }
    const BasisLabel& label(std::size_t i) const { return basis_[i]; }
    int index_of(const std::string& name) const;
    std::size_t dim_even() const;
    std::size_t dim_odd() const;

    // Sets [e_i, e_j]; [e_j, e_i] follows by super antisymmetry.
    void set_bracket(int i, int j, SparseVec value);
    SparseVec bracket(int i, int j) const;
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
    const std::map<std::pair<int, int>, SparseVec>& stored_brackets() const { return br_; }

    // Parity of a homogeneous vector; nullopt for mixed or zero.
    std::optional<Parity> parity(const SparseVec& x) const;

private:
    std::vector<BasisLabel> basis_;
    std::map<std::pair<int, int>, SparseVec> br_;  // keys with i <= j
};

struct ValidationReport {
    bool antisymmetric = true;
    bool jacobi = true;
    bool parity_consistent = true;
    bool weight_consistent = true;
    bool nilpotent = false;
    int nilpotency_class = -1;  // -1 when not nilpotent; 0 for the zero algebra
    std::vector<std::string> failures;
    bool ok() const { return antisymmetric && jacobi && parity_consistent && weight_consistent && nilpotent; }
};

ValidationReport validate(const SuperLieAlgebra& g);

// Lower central series g = C^1 > C^2 > ... as bases (sparse rows).
std::vector<std::vector<SparseVec>> lower_central_series(const SuperLieAlgebra& g);

}  // namespace sym
