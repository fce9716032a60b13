#pragma once
#include <string>
#include <vector>

#include "superym/assoc_model.hpp"

namespace sym {

enum class ResolutionSide { Left, Right };

struct ResolutionWeight {
    int weight = 0;
    std::size_t dim[4] = {0, 0, 0, 0};   // C0 = YM, C1 = YM(x)V, C2 = YM(x)R, C3 = YM[-8]
    std::size_t rank[4] = {0, 0, 0, 0};  // rank of b0..b3 at this weight
    bool b1b2_zero = true;
    bool b2b3_zero = true;
    bool exact = true;          // ker b_k = im b_{k+1} for k = 0,1,2 and b3 injective
    bool b3_injective = true;
    long long euler = 0;        // sum (-1)^k dim C_k, equal to [w == 0]
    bool ok() const { return b1b2_zero && b2b3_zero && exact && b3_injective && euler == (weight == 0 ? 1 : 0); }
};

struct ResolutionReport {
    ResolutionSide side = ResolutionSide::Left;
    std::vector<ResolutionWeight> weights;
    bool ok() const;
};

// Relation k of the model is paired with generator k in omega = sum g_k (x) r_k.
ResolutionReport verify_resolution(const AssocQuotientModel& model, int max_weight, ResolutionSide side);

// sum_i [x_i, r_{0,i}] + sum_a [z_a, r_{1,a}] vanishes in TV.
bool omega_identity(const SymPresentation& p);
// omega = sum_g g (x) r_g as an element of TV_8.
TensorPoly omega_element(const SymPresentation& p);

}  // namespace sym
