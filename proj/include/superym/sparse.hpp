#pragma once
#include <map>
#include <utility>
#include <vector>

#include "superym/scalar.hpp"

namespace sym {

// Sparse vector: (column, value) pairs sorted by column, no zero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_from_map(const std::map<int, Scalar>& m);
void sparse_axpy(SparseVec& y, const Scalar& a, const SparseVec& x);  // y += a x
SparseVec sparse_scale(const SparseVec& x, const Scalar& a);
Scalar sparse_dot(const SparseVec& x, const SparseVec& y);
Scalar sparse_get(const SparseVec& x, int col);

// Semi-echelon basis of a row space. Each stored row has a distinct leading (minimal) column
// with coefficient 1. Rows may carry an auxiliary vector that is transformed alongside.
class Echelon {
public:
    struct Reduced {
        SparseVec residual;  // unique representative with zeros in every pivot column
        SparseVec aux;
    };

    // Reduces v; aux is combined with the same multipliers (subtracting row aux).
    Reduced reduce(const SparseVec& v, const SparseVec& aux = {}, bool track_aux = false) const;
    // Inserts v if independent; returns true when the rank grew.
    bool insert(const SparseVec& v, const SparseVec& aux = {});

    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(int col) const { return pivot_.count(col) > 0; }
    std::vector<int> pivots() const;
    bool contains(const SparseVec& v) const { return reduce(v).residual.empty(); }

private:
    struct Row {
        SparseVec v;
        SparseVec aux;
    };
    std::vector<Row> rows_;
    std::map<int, std::size_t> pivot_;
    bool has_aux_ = false;
};

// Rank of a sparse row list; sparsest rows are eliminated first.
std::size_t sparse_rank(std::vector<SparseVec> rows);

// Dense exact helpers for small matrices.
std::size_t dense_rank(Matrix m);
Scalar dense_det(Matrix m);
Matrix dense_inverse(const Matrix& m);  // throws std::domain_error when singular
// Basis of {x : m x = 0} as column vectors.
std::vector<std::vector<Scalar>> dense_kernel(const Matrix& m, std::size_t cols);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

}  // namespace sym
