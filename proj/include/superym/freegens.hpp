#pragma once
#include <optional>
#include <string>
#include <vector>

#include "superym/lie_model.hpp"

namespace sym {

enum class IdealSpec { TymHat, Tym, K1s };
IdealSpec parse_ideal_spec(const std::string& s);  // "tym-hat", "tym", "k1s"
std::string to_string(IdealSpec spec);

struct FreeGenWeight {
    int weight = 0;
    std::size_t ideal_dim = 0;
    std::size_t bracket_dim = 0;            // dim [h,h]_w
    std::size_t generators = 0;             // ideal_dim - bracket_dim
    std::optional<Scalar> expected;         // closed-form series coefficient
    std::vector<SparseVec> representatives; // complement of [h,h]_w, model coordinates
    bool matches() const { return !expected || Scalar(static_cast<long>(generators)) == *expected; }
};

struct FreeGenReport {
    IdealSpec spec = IdealSpec::TymHat;
    int n = 0, s = 0, max_weight = 0;
    std::vector<FreeGenWeight> weights;
    bool ok() const;
};

// Per-weight basis of the ideal in model coordinates.
std::vector<std::vector<SparseVec>> ideal_basis(const LieQuotientModel& model, IdealSpec spec, int n, int s,
                                                int max_weight);

// The model must come from the presentation with the canonical Gamma and reach max_weight.
FreeGenReport extract_free_generators(const LieQuotientModel& model, IdealSpec spec, int n, int s, int max_weight);

// Bracket of coordinate vectors in the model.
SparseVec bracket_coords(const LieQuotientModel& model, const SparseVec& x, const SparseVec& y);

}  // namespace sym
