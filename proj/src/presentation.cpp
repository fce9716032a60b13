#include "superym/presentation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "superym/sparse.hpp"

namespace sym {

namespace {

TensorPoly br(const Alphabet& a, const TensorPoly& u, const TensorPoly& v) { return super_commutator(a, u, v); }

bool is_symmetric(const Matrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

Matrix lin_comb(const std::vector<Matrix>& mats, const std::vector<Scalar>& lambda, int s) {
    Matrix m = zero_matrix(s, s);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (is_zero(lambda[i])) continue;
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) m[a][b] += lambda[i] * mats[i][a][b];
    }
    return m;
}

bool is_rational_square(const Scalar& q, Scalar& root) {
    if (sgn(q) < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Scalar(rn, rd);
    root.canonicalize();
    return true;
}

}  // namespace

SymPresentation SymPresentation::preset(int n, int s) {
    if (n < 0 || s < 0) throw std::invalid_argument("preset: n and s must be nonnegative");
    SymPresentation p;
    p.n = n;
    p.s = s;
    p.gamma.n = n;
    p.gamma.s = s;
    p.gamma.mats.assign(n, zero_matrix(s, s));
    if (n >= 1) p.gamma.mats[0] = identity_matrix(s);
    return p;
}

Matrix SymPresentation::metric_lower() const { return metric ? *metric : identity_matrix(n); }

Matrix SymPresentation::metric_upper() const {
    if (!metric) return identity_matrix(n);
    try {
        return dense_inverse(*metric);
    } catch (const std::domain_error&) {
        throw std::domain_error("singular metric");
    }
}

void SymPresentation::validate() const {
    if (n < 0 || s < 0) throw std::invalid_argument("n and s must be nonnegative");
    if (gamma.n != n || gamma.s != s || static_cast<int>(gamma.mats.size()) != n)
        throw std::invalid_argument("gamma must contain n matrices of size s x s");
    for (const auto& m : gamma.mats) {
        if (static_cast<int>(m.size()) != s) throw std::invalid_argument("gamma matrix has wrong size");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != s) throw std::invalid_argument("gamma matrix has wrong size");
        if (!is_symmetric(m)) throw std::invalid_argument("gamma matrices must be symmetric");
    }
    if (metric) {
        if (static_cast<int>(metric->size()) != n) throw std::invalid_argument("metric must be n x n");
        for (const auto& row : *metric)
            if (static_cast<int>(row.size()) != n) throw std::invalid_argument("metric must be n x n");
        if (!is_symmetric(*metric)) throw std::invalid_argument("metric must be symmetric");
    }
    if (gamma_tilde) {
        if (static_cast<int>(gamma_tilde->size()) != n) throw std::invalid_argument("gamma_tilde must contain n matrices");
        for (const auto& m : *gamma_tilde) {
            if (static_cast<int>(m.size()) != s) throw std::invalid_argument("gamma_tilde matrix has wrong size");
            for (const auto& row : m)
                if (static_cast<int>(row.size()) != s) throw std::invalid_argument("gamma_tilde matrix has wrong size");
            if (!is_symmetric(m)) throw std::invalid_argument("gamma_tilde matrices must be symmetric");
        }
    }
}

std::vector<TensorPoly> build_relations(const SymPresentation& p) {
    p.validate();
    const Alphabet a = p.alphabet();
    const Matrix gu = p.metric_upper();
    auto X = [&](int i) { return TensorPoly::letter(p.x(i)); };
    auto Z = [&](int b) { return TensorPoly::letter(p.z(b)); };
    std::vector<TensorPoly> rel;
    for (int i = 0; i < p.n; ++i) {
        TensorPoly r;
        if (p.orthonormal()) {
            for (int j = 0; j < p.n; ++j) r += br(a, X(j), br(a, X(j), X(i)));
        } else {
            for (int j = 0; j < p.n; ++j)
                for (int l = 0; l < p.n; ++l) {
                    if (is_zero(gu[j][l])) continue;
                    for (int m = 0; m < p.n; ++m) {
                        if (is_zero(gu[i][m])) continue;
                        r += br(a, X(j), br(a, X(l), X(m))) * (gu[j][l] * gu[i][m]);
                    }
                }
        }
        for (int u = 0; u < p.s; ++u)
            for (int v = 0; v < p.s; ++v) {
                const Scalar& g = p.gamma.mats[i][u][v];
                if (!is_zero(g)) r -= br(a, Z(u), Z(v)) * (g / 2);
            }
        rel.push_back(std::move(r));
    }
    for (int u = 0; u < p.s; ++u) {
        TensorPoly r;
        for (int i = 0; i < p.n; ++i)
            for (int v = 0; v < p.s; ++v) {
                const Scalar& g = p.gamma.mats[i][u][v];
                if (!is_zero(g)) r += br(a, X(i), Z(v)) * g;
            }
        rel.push_back(std::move(r));
    }
    return rel;
}

NondegeneracyResult check_nondegenerate(const SymPresentation& p) {
    p.validate();
    NondegeneracyResult res;
    if (p.n == 0) return res;
    if (p.s == 0) {
        res.nondegenerate = true;
        res.witness.assign(p.n, Scalar(0));
        res.witness[0] = 1;
        return res;
    }
    // det(sum lambda_i Gamma^i) has degree <= s in each lambda_i, so a nonzero value exists on {0..s}^n.
    for (int k = 0; k < p.n; ++k) {
        std::vector<Scalar> lam(p.n, Scalar(0));
        lam[k] = 1;
        if (!is_zero(dense_det(lin_comb(p.gamma.mats, lam, p.s)))) return {true, lam};
    }
    double points = 1;
    for (int i = 0; i < p.n; ++i) points *= (p.s + 1);
    if (points > 5e6) throw std::runtime_error("nondegeneracy grid too large");
    std::vector<int> idx(p.n, 0);
    while (true) {
        int i = 0;
        while (i < p.n && idx[i] == p.s) idx[i++] = 0;
        if (i == p.n) break;
        ++idx[i];
        std::vector<Scalar> lam(idx.begin(), idx.end());
        if (!is_zero(dense_det(lin_comb(p.gamma.mats, lam, p.s)))) return {true, lam};
    }
    return res;
}

bool equivariance_holds(const SymPresentation& p, const std::vector<Matrix>& t) {
    const Matrix gu = p.metric_upper();
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            for (int a = 0; a < p.s; ++a)
                for (int c = 0; c < p.s; ++c) {
                    Scalar sum = 0;
                    for (int b = 0; b < p.s; ++b)
                        sum += p.gamma.mats[i][a][b] * t[j][b][c] + p.gamma.mats[j][a][b] * t[i][b][c];
                    Scalar rhs = (a == c) ? Scalar(2 * gu[i][j]) : Scalar(0);
                    if (sum != rhs) return false;
                }
    return true;
}

std::vector<Matrix> derive_gamma_tilde(const SymPresentation& p) {
    p.validate();
    const int n = p.n, s = p.s;
    if (s == 0) return std::vector<Matrix>(n, Matrix{});
    for (int i = 0; i < n; ++i)
        if (is_zero(dense_det(p.gamma.mats[i]))) throw std::domain_error("Gamma^" + std::to_string(i + 1) + " is singular");
    // Unknowns T^i_{bc}, b <= c.
    std::vector<std::vector<int>> var(s, std::vector<int>(s));
    int per = 0;
    for (int b = 0; b < s; ++b)
        for (int c = b; c < s; ++c) var[b][c] = var[c][b] = per++;
    const int nv = n * per;
    const Matrix gu = p.metric_upper();
    Matrix sys;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int a = 0; a < s; ++a)
                for (int c = 0; c < s; ++c) {
                    std::vector<Scalar> row(nv + 1, Scalar(0));
                    for (int b = 0; b < s; ++b) {
                        row[j * per + var[b][c]] += p.gamma.mats[i][a][b];
                        row[i * per + var[b][c]] += p.gamma.mats[j][a][b];
                    }
                    row[nv] = (a == c) ? Scalar(2 * gu[i][j]) : Scalar(0);
                    sys.push_back(std::move(row));
                }
    // Particular solution by elimination on the augmented system.
    const std::size_t rank_a = [&] {
        Matrix coef = sys;
        for (auto& r : coef) r.pop_back();
        return dense_rank(coef);
    }();
    if (dense_rank(sys) != rank_a) throw std::domain_error("inconsistent");
    Matrix m = sys;
    std::vector<int> pivcol;
    std::size_t r = 0;
    for (int c = 0; c < nv && r < m.size(); ++c) {
        std::size_t k = r;
        while (k < m.size() && is_zero(m[k][c])) ++k;
        if (k == m.size()) continue;
        std::swap(m[k], m[r]);
        Scalar inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i2 = 0; i2 < m.size(); ++i2) {
            if (i2 == r || is_zero(m[i2][c])) continue;
            Scalar f = m[i2][c];
            for (int j2 = 0; j2 <= nv; ++j2) m[i2][j2] -= f * m[r][j2];
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<Scalar> sol(nv, Scalar(0));
    for (std::size_t k = 0; k < pivcol.size(); ++k) sol[pivcol[k]] = m[k][nv];
    std::vector<Matrix> t(n, zero_matrix(s, s));
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c) t[i][b][c] = sol[i * per + var[b][c]];
    if (!equivariance_holds(p, t)) throw std::domain_error("inconsistent");
    return t;
}

bool check_equivariance_identity(const SymPresentation& p) {
    p.validate();
    if (p.s == 0) return true;
    if (p.gamma_tilde) return equivariance_holds(p, *p.gamma_tilde);
    try {
        return equivariance_holds(p, derive_gamma_tilde(p));
    } catch (const std::domain_error& e) {
        if (std::string(e.what()) == "inconsistent") return false;
        throw;
    }
}

TensorPoly superpotential(const SymPresentation& p) {
    p.validate();
    const Alphabet a = p.alphabet();
    const Matrix gu = p.metric_upper();
    auto X = [&](int i) { return TensorPoly::letter(p.x(i)); };
    auto Z = [&](int b) { return TensorPoly::letter(p.z(b)); };
    TensorPoly w;
    const Scalar quarter(-1, 4);
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            for (int k = 0; k < p.n; ++k)
                for (int l = 0; l < p.n; ++l) {
                    Scalar c = gu[i][k] * gu[j][l];
                    if (is_zero(c)) continue;
                    w += br(a, X(i), X(j)) * br(a, X(k), X(l)) * (quarter * c);
                }
    for (int i = 0; i < p.n; ++i)
        for (int u = 0; u < p.s; ++u)
            for (int v = 0; v < p.s; ++v) {
                const Scalar& g = p.gamma.mats[i][u][v];
                if (!is_zero(g)) w += Z(u) * br(a, X(i), Z(v)) * (g / 2);
            }
    return w;
}

bool QuarticForm::is_zero() const {
    return std::all_of(q.begin(), q.end(), [](const Scalar& x) { return sym::is_zero(x); });
}

QuarticForm quartic_form(const SymPresentation& p) {
    p.validate();
    const int s = p.s;
    const Matrix gl = p.metric_lower();
    QuarticForm Q;
    Q.s = s;
    Q.q.assign(static_cast<std::size_t>(s) * s * s * s, Scalar(0));
    const auto& G = p.gamma.mats;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b)
            for (int c = 0; c < s; ++c)
                for (int d = 0; d < s; ++d) {
                    Scalar v = 0;
                    for (int i = 0; i < p.n; ++i)
                        for (int j = 0; j < p.n; ++j) {
                            if (sym::is_zero(gl[i][j])) continue;
                            v += gl[i][j] * (G[i][a][b] * G[j][c][d] + G[i][a][c] * G[j][b][d] + G[i][a][d] * G[j][b][c]);
                        }
                    Q.q[((a * s + b) * s + c) * s + d] = v;
                }
    return Q;
}

std::vector<Derivation> susy_derivations(const SymPresentation& p, const std::optional<std::vector<Matrix>>& tilde_override) {
    p.validate();
    const Alphabet a = p.alphabet();
    std::vector<Matrix> t;
    if (tilde_override) t = *tilde_override;
    else if (p.gamma_tilde) t = *p.gamma_tilde;
    else t = derive_gamma_tilde(p);
    const Matrix gl = p.metric_lower();
    const auto& G = p.gamma.mats;
    auto X = [&](int i) { return TensorPoly::letter(p.x(i)); };
    auto Z = [&](int b) { return TensorPoly::letter(p.z(b)); };
    std::vector<Derivation> ds;
    for (int c = 0; c < p.s; ++c) {
        std::vector<TensorPoly> img(a.size());
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j) {
                if (is_zero(gl[i][j])) continue;
                for (int d = 0; d < p.s; ++d)
                    if (!is_zero(G[j][c][d])) img[p.x(i)] += Z(d) * (gl[i][j] * G[j][c][d]);
            }
        for (int b = 0; b < p.s; ++b)
            for (int i = 0; i < p.n; ++i)
                for (int j = 0; j < p.n; ++j) {
                    Scalar coef = 0;
                    for (int d = 0; d < p.s; ++d) coef += t[i][b][d] * G[j][d][c];
                    if (!is_zero(coef)) img[p.z(b)] += br(a, X(i), X(j)) * (coef / 2);
                }
        ds.push_back(extend_derivation(a, std::move(img), Parity::Odd));
    }
    return ds;
}

DensePolynomial hilbert_denominator(int n, int s) {
    std::vector<Scalar> c(9, Scalar(0));
    c[0] = 1;
    c[2] = -n;
    c[3] = -s;
    c[5] = s;
    c[6] = n;
    c[8] = -1;
    return DensePolynomial(c);
}

PowerSeries hilbert_series_YM(const SymPresentation& p, int order) {
    return PowerSeries(hilbert_denominator(p.n, p.s), order).inverse();
}

std::vector<std::int64_t> dims_ym(const SymPresentation& p, int max_j) {
    return dims_from_series(hilbert_denominator(p.n, p.s), max_j, GradingConvention::ParityIsWeightMod2);
}

NormalizedPresentation normalize_presentation(const SymPresentation& p) {
    NormalizedPresentation out{p, false, {}};
    auto nd = check_nondegenerate(p);
    if (!nd.nondegenerate) {
        out.log.push_back("degenerate: no normalization");
        return out;
    }
    if (p.s == 0) {
        out.normalized = true;
        return out;
    }
    int k = -1;
    int nonzero = 0;
    for (int i = 0; i < p.n; ++i)
        if (!is_zero(nd.witness[i])) {
            ++nonzero;
            k = i;
        }
    SymPresentation q = p;
    if (nonzero != 1) {
        out.log.push_back("witness is not a coordinate functional; left unnormalized");
        return out;
    }
    if (k != 0) {
        std::swap(q.gamma.mats[0], q.gamma.mats[k]);
        if (q.metric) {
            std::swap((*q.metric)[0], (*q.metric)[k]);
            for (auto& row : *q.metric) std::swap(row[0], row[k]);
        }
        if (q.gamma_tilde) std::swap((*q.gamma_tilde)[0], (*q.gamma_tilde)[k]);
        out.log.push_back("swapped x1 and x" + std::to_string(k + 1));
    }
    // Congruence P^T M P = I for M = Gamma^1 when rationally possible.
    const int s = p.s;
    Matrix M = q.gamma.mats[0];
    Matrix P = identity_matrix(s);
    auto add_col = [&](int dst, int src, const Scalar& f) {  // basis e_dst += f e_src
        for (int r = 0; r < s; ++r) P[r][dst] += f * P[r][src];
        for (int r = 0; r < s; ++r) M[r][dst] += f * M[r][src];
        for (int c = 0; c < s; ++c) M[dst][c] += f * M[src][c];
    };
    auto swap_col = [&](int x, int y) {
        for (int r = 0; r < s; ++r) std::swap(P[r][x], P[r][y]);
        std::swap(M[x], M[y]);
        for (int r = 0; r < s; ++r) std::swap(M[r][x], M[r][y]);
    };
    for (int c = 0; c < s; ++c) {
        if (is_zero(M[c][c])) {
            int j = c + 1;
            while (j < s && is_zero(M[j][j])) ++j;
            if (j < s) swap_col(c, j);
            else {
                int m2 = c + 1;
                while (m2 < s && is_zero(M[c][m2])) ++m2;
                if (m2 == s) throw std::logic_error("normalize: singular form");
                add_col(c, m2, 1);
            }
        }
        for (int j = c + 1; j < s; ++j)
            if (!is_zero(M[c][j])) add_col(j, c, -M[c][j] / M[c][c]);
    }
    for (int c = 0; c < s; ++c) {
        Scalar root;
        if (!is_rational_square(M[c][c], root)) {
            out.presentation = q;
            out.log.push_back("x1* o Gamma is not rationally congruent to the identity; left diagonalizable only");
            return out;
        }
        for (int r = 0; r < s; ++r) P[r][c] /= root;
    }
    const Matrix Pt = transpose(P);
    bool changed = P != identity_matrix(s);
    for (auto& m : q.gamma.mats) m = matmul(matmul(Pt, m), P);
    if (q.gamma_tilde) {
        const Matrix Pi = dense_inverse(P);
        const Matrix Pit = transpose(Pi);
        for (auto& m : *q.gamma_tilde) m = matmul(matmul(Pi, m), Pit);
    }
    if (changed) out.log.push_back("applied rational congruence on the odd generators");
    out.presentation = q;
    out.normalized = true;
    return out;
}

Scalar hat_W_coeff(int n, int s, int d) {
    if (n < 2) throw std::invalid_argument("hat W series needs n >= 2");
    if (d <= 1) return 0;
    if (d % 2) return d >= 3 ? Scalar(s) : Scalar(0);
    if (d == 2) return n - 2;
    if (d == 4) return 2 * n - 3;
    return 2 * n - 4;
}

Scalar W_coeff(int n, int s, int d) {
    if (n < 2) throw std::invalid_argument("W series needs n >= 2");
    if (d < 0) return 0;
    // ((1-t^2)^n - 1 + n t^2 + s t^3 - s t^5 - n t^6 + t^8) / (1-t^2)^n
    PowerSeries num(d), den(d);
    for (int k = 0; 2 * k <= d && k <= n; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        Scalar v(b);
        if (k % 2) v = -v;
        num[2 * k] += v;
        den[2 * k] += v;
    }
    auto add = [&](int deg, int c) {
        if (deg <= d) num[deg] += c;
    };
    add(0, -1);
    add(2, n);
    add(3, s);
    add(5, -s);
    add(6, -n);
    add(8, 1);
    return (num * den.inverse())[d];
}

Scalar tilde_W_coeff(int s, int d) {
    if (s < 3) throw std::invalid_argument("tilde W series needs s >= 3");
    if (d <= 0 || d % 3) return 0;
    if (d == 3) return s - 2;
    if (d == 6) return 2 * s - 3;
    return 2 * s - 4;
}

SemidirectMaps semidirect_maps(const SymPresentation& p) {
    auto nd = check_nondegenerate(p);
    if (!nd.nondegenerate) throw std::domain_error("degenerate Gamma");
    const int n = p.n, s = p.s;
    if (s > 0 && p.gamma.mats[0] != identity_matrix(s))
        throw std::domain_error("semidirect maps need the normalization x1* o Gamma = identity");
    SemidirectMaps m;
    m.ym_alphabet = p.alphabet();
    std::vector<Generator> hg;
    for (int i = 2; i <= n; ++i) hg.push_back({"q" + std::to_string(i), Parity::Even, 2});
    for (int i = 2; i <= n; ++i) hg.push_back({"p" + std::to_string(i), Parity::Even, 4});
    for (int a = 1; a <= s; ++a) hg.push_back({"z'" + std::to_string(a), Parity::Odd, 3});
    m.h_alphabet = Alphabet(hg);
    const Alphabet& ya = m.ym_alphabet;
    const Alphabet& ha = m.h_alphabet;
    auto q = [&](int i) { return TensorPoly::letter(i - 2); };          // i = 2..n
    auto pp = [&](int i) { return TensorPoly::letter(n - 1 + i - 2); }; // i = 2..n
    auto zp = [&](int a) { return TensorPoly::letter(2 * (n - 1) + a); };
    m.psi.push_back("d");
    for (int i = 2; i <= n; ++i) m.psi.push_back("q" + std::to_string(i));
    for (int a = 1; a <= s; ++a) m.psi.push_back("z'" + std::to_string(a));
    for (int i = 2; i <= n; ++i) m.psi_inv.push_back(TensorPoly::letter(p.x(i - 1)));
    for (int i = 2; i <= n; ++i)
        m.psi_inv.push_back(super_commutator(ya, TensorPoly::letter(p.x(0)), TensorPoly::letter(p.x(i - 1))));
    for (int a = 0; a < s; ++a) m.psi_inv.push_back(TensorPoly::letter(p.z(a)));
    m.d_action.assign(ha.size(), TensorPoly{});
    for (int i = 2; i <= n; ++i) {
        m.d_action[i - 2] = pp(i);
        TensorPoly dp;
        for (int j = 2; j <= n; ++j) dp -= super_commutator(ha, q(j), super_commutator(ha, q(j), q(i)));
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) {
                const Scalar& g = p.gamma.mats[i - 1][a][b];
                if (!is_zero(g)) dp += super_commutator(ha, zp(a), zp(b)) * (g / 2);
            }
        m.d_action[n - 1 + i - 2] = dp;
    }
    for (int a = 0; a < s; ++a) {
        TensorPoly dz;
        for (int j = 2; j <= n; ++j)
            for (int b = 0; b < s; ++b) {
                const Scalar& g = p.gamma.mats[j - 1][a][b];
                if (!is_zero(g)) dz -= super_commutator(ha, q(j), zp(b)) * g;
            }
        m.d_action[2 * (n - 1) + a] = dz;
    }
    for (int i = 2; i <= n; ++i) m.h_relation += super_commutator(ha, q(i), pp(i));
    for (int a = 0; a < s; ++a) m.h_relation += super_commutator(ha, zp(a), zp(a)) * Scalar(1, 2);
    return m;
}

}  // namespace sym
