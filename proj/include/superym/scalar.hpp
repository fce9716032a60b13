#pragma once
// Exact rational scalars.
#include <gmpxx.h>

#include <string>
#include <vector>

namespace sym {

using Scalar = mpq_class;
using Matrix = std::vector<std::vector<Scalar>>;

// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed text or zero denominator.
Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& q);

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);

}  // namespace sym
