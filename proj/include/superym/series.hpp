#pragma once
#include <cstdint>
#include <vector>

#include "superym/scalar.hpp"

namespace sym {

class DensePolynomial {
public:
    DensePolynomial() = default;
    explicit DensePolynomial(std::vector<Scalar> coeffs);
    const std::vector<Scalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

private:
    std::vector<Scalar> c_;
};

// Truncated power series: coefficients of t^0..t^order.
class PowerSeries {
public:
    explicit PowerSeries(int order);
    PowerSeries(const DensePolynomial& p, int order);

    int order() const { return order_; }
    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b);

    PowerSeries inverse() const;     // requires c0 != 0
    PowerSeries derivative() const;  // truncated at the same order
    PowerSeries integral() const;    // zero constant term
    PowerSeries log() const;         // requires c0 = 1
    PowerSeries exp() const;         // requires c0 = 0

private:
    int order_;
    std::vector<Scalar> c_;
};

int mobius(std::int64_t n);

// a_1..a_max with -log p(t) = sum_d a_d t^d / d; also checked against Newton's identities.
std::vector<Scalar> log_power_sums(const DensePolynomial& p, int max_d);
std::vector<Scalar> newton_power_sums(const DensePolynomial& p, int max_d);

enum class GradingConvention {
    ParityIsWeightMod2,  // super grading: odd exactly in odd weights
    AllEven,             // classical graded Lie algebra
};

// nu_1..nu_max for the graded Lie algebra whose enveloping algebra has Hilbert series 1/p.
// Throws std::domain_error("inconsistent Hilbert data") on non-integral or negative output.
std::vector<std::int64_t> dims_from_series(const DensePolynomial& p, int max_j,
                                           GradingConvention conv = GradingConvention::ParityIsWeightMod2);

// Enveloping-algebra series prod_i (1 - (-1)^i t^i)^{-(-1)^i nu_i} (super) or prod (1-t^i)^{-nu_i}.
PowerSeries enveloping_series(const std::vector<std::int64_t>& nu, int order,
                              GradingConvention conv = GradingConvention::ParityIsWeightMod2);

}  // namespace sym
