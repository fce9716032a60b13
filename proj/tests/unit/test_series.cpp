#include "doctest.h"
#include "superym/presentation.hpp"
#include "superym/series.hpp"

using namespace sym;

TEST_CASE("power series arithmetic") {
    const DensePolynomial p({1, -1});
    const PowerSeries inv = PowerSeries(p, 6).inverse();
    for (int i = 0; i <= 6; ++i) CHECK(inv[i] == 1);
    CHECK(PowerSeries(p, 6) * inv == PowerSeries(DensePolynomial({1}), 6));
    PowerSeries x(6);
    x[1] = 1;
    const PowerSeries e = x.exp();
    CHECK(e[3] == Scalar(1, 6));
    CHECK(e.log() == x);
    CHECK(x.integral()[2] == Scalar(1, 2));
}

TEST_CASE("mobius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
}

TEST_CASE("power sums agree with Newton's identities") {
    const DensePolynomial p({1, -3, 0, -1, 0, 1, 3, 0, -1});
    CHECK(log_power_sums(p, 12) == newton_power_sums(p, 12));
}

TEST_CASE("free Lie algebra dimensions from 1/(1-kt)") {
    // Witt numbers for 2 generators of weight 1.
    const auto d = dims_from_series(DensePolynomial({1, -2}), 6, GradingConvention::AllEven);
    CHECK(d == std::vector<std::int64_t>{2, 1, 2, 3, 6, 9});
    CHECK(enveloping_series(d, 6, GradingConvention::AllEven) == PowerSeries(DensePolynomial({1, -2}), 6).inverse());
}

TEST_CASE("super convention round trip") {
    const auto den = hilbert_denominator(3, 1);
    const auto nu = dims_from_series(den, 14);
    CHECK(enveloping_series(nu, 14) == PowerSeries(den, 14).inverse());
}

TEST_CASE("inconsistent Hilbert data is rejected") {
    CHECK_THROWS_AS(dims_from_series(DensePolynomial({1, Scalar(-1, 2)}), 4, GradingConvention::AllEven),
                    std::domain_error);
}

TEST_CASE("Yang-Mills denominator") {
    const auto d = hilbert_denominator(3, 1);
    CHECK(d.coeffs() == std::vector<Scalar>{1, 0, -3, -1, 0, 1, 3, 0, -1});
    const auto e = hilbert_denominator(2, 2);
    CHECK(e.degree() == 8);
    CHECK(e[0] == 1);
}
