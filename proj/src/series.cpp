#include "superym/series.hpp"

#include <stdexcept>

namespace sym {

DensePolynomial::DensePolynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
}

PowerSeries::PowerSeries(int order) : order_(order), c_(order + 1, Scalar(0)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
}

PowerSeries::PowerSeries(const DensePolynomial& p, int order) : PowerSeries(order) {
    for (int i = 0; i <= order; ++i) c_[i] = p[i];
}

namespace {
void check_same(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("power series truncation orders differ");
}
}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    check_same(a, b);
    PowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
    return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    check_same(a, b);
    PowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    check_same(a, b);
    PowerSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.order_ == b.order_ && a.c_ == b.c_; }

PowerSeries PowerSeries::inverse() const {
    if (is_zero(c_[0])) throw std::domain_error("power series inverse needs a nonzero constant term");
    PowerSeries r(order_);
    Scalar inv0 = 1 / c_[0];
    r[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        Scalar acc = 0;
        for (int k = 1; k <= n; ++k) acc += c_[k] * r[n - k];
        r[n] = -acc * inv0;
    }
    return r;
}

PowerSeries PowerSeries::derivative() const {
    PowerSeries r(order_);
    for (int i = 1; i <= order_; ++i) r[i - 1] = c_[i] * i;
    return r;
}

PowerSeries PowerSeries::integral() const {
    PowerSeries r(order_);
    for (int i = 0; i < order_; ++i) r[i + 1] = c_[i] / (i + 1);
    return r;
}

PowerSeries PowerSeries::log() const {
    if (c_[0] != 1) throw std::domain_error("power series log needs constant term 1");
    return (derivative() * inverse()).integral();
}

PowerSeries PowerSeries::exp() const {
    if (!is_zero(c_[0])) throw std::domain_error("power series exp needs constant term 0");
    PowerSeries r(order_);
    r[0] = 1;
    for (int n = 1; n <= order_; ++n) {
        Scalar acc = 0;
        for (int k = 1; k <= n; ++k) acc += c_[k] * k * r[n - k];
        r[n] = acc / n;
    }
    return r;
}

int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: argument must be positive");
    int mu = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::vector<Scalar> newton_power_sums(const DensePolynomial& p, int max_d) {
    if (p[0] != 1) throw std::invalid_argument("log_power_sums: constant term must be 1");
    std::vector<Scalar> a(max_d + 1, Scalar(0));
    for (int d = 1; d <= max_d; ++d) {
        Scalar v = -Scalar(d) * p[d];
        for (int k = 1; k < d; ++k) v -= a[k] * p[d - k];
        a[d] = v;
    }
    return {a.begin() + 1, a.end()};
}

std::vector<Scalar> log_power_sums(const DensePolynomial& p, int max_d) {
    if (p[0] != 1) throw std::invalid_argument("log_power_sums: constant term must be 1");
    if (max_d <= 0) return {};
    PowerSeries L = PowerSeries(p, max_d).log();
    std::vector<Scalar> a(max_d);
    for (int d = 1; d <= max_d; ++d) a[d - 1] = -L[d] * d;
    if (a != newton_power_sums(p, max_d)) throw std::logic_error("log_power_sums: Newton cross-check failed");
    return a;
}

std::vector<std::int64_t> dims_from_series(const DensePolynomial& p, int max_j, GradingConvention conv) {
    auto a = log_power_sums(p, max_j);
    std::vector<std::int64_t> nu;
    for (int j = 1; j <= max_j; ++j) {
        Scalar acc = 0;
        for (int d = 1; d <= j; ++d) {
            if (j % d) continue;
            Scalar term = a[d - 1] * mobius(j / d);
            if (conv == GradingConvention::ParityIsWeightMod2 && (d % 2)) term = -term;
            acc += term;
        }
        acc /= j;
        if (conv == GradingConvention::ParityIsWeightMod2 && (j % 2)) acc = -acc;
        if (acc.get_den() != 1 || sgn(acc) < 0 || !acc.get_num().fits_slong_p())
            throw std::domain_error("inconsistent Hilbert data");
        nu.push_back(acc.get_num().get_si());
    }
    return nu;
}

PowerSeries enveloping_series(const std::vector<std::int64_t>& nu, int order, GradingConvention conv) {
    PowerSeries r(order);
    r[0] = 1;
    for (std::size_t idx = 0; idx < nu.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        if (nu[idx] == 0 || i > order) continue;
        const bool odd = conv == GradingConvention::ParityIsWeightMod2 && (i % 2);
        PowerSeries f(order);
        mpz_class n = nu[idx];
        for (int k = 0; k * i <= order; ++k) {
            mpz_class b;
            if (odd) {
                if (k > nu[idx]) break;
                mpz_bin_ui(b.get_mpz_t(), n.get_mpz_t(), k);
            } else {
                mpz_class top = n + k - 1;
                mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), k);
            }
            f[k * i] = b;
        }
        r = r * f;
    }
    return r;
}

}  // namespace sym
