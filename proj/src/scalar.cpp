#include "superym/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace sym {

Scalar parse_scalar(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("malformed rational: " + text);
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q) { return q.get_str(); }

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
    return Matrix(rows, std::vector<Scalar>(cols, Scalar(0)));
}

Matrix identity_matrix(std::size_t n) {
    Matrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace sym
