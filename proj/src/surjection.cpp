#include "superym/surjection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>

#include "superym/freegens.hpp"

namespace sym {

namespace {

struct Target {
    std::string name;
    int heis_index;
    Parity parity;
};

struct Candidate {
    int index;  // global basis index in the model
    int weight;
    Parity parity;
};

struct PhiResult {
    std::vector<SparseVec> phi;  // per global basis index, image in heis
    bool homomorphism = true;
};

class Context {
public:
    Context(const SymPresentation& p, int threads) : p_(p), threads_(threads) {}

    // Model reaching at least max_weight (weights <= max_weight).
    LieQuotientModel& model(int max_weight) {
        if (!model_ || model_->max_weight() < max_weight) {
            model_ = std::make_unique<LieQuotientModel>(LieQuotientModel::for_presentation(p_, max_weight - 1));
            model_->compute_structure_constants(threads_);
            alg_ = std::make_unique<SuperLieAlgebra>(model_->export_algebra(threads_));
            h_ = ideal_basis(*model_, IdealSpec::TymHat, p_.n, p_.s, model_->max_weight());
        }
        return *model_;
    }
    const SuperLieAlgebra& algebra() const { return *alg_; }
    const std::vector<std::vector<SparseVec>>& h() const { return h_; }

private:
    const SymPresentation& p_;
    int threads_;
    std::unique_ptr<LieQuotientModel> model_;
    std::unique_ptr<SuperLieAlgebra> alg_;
    std::vector<std::vector<SparseVec>> h_;
};

SparseVec unit(int i) { return {{i, Scalar(1)}}; }

SparseVec linear(const std::vector<SparseVec>& images, const SparseVec& v) {
    std::map<int, Scalar> acc;
    for (const auto& [k, c] : v)
        for (const auto& [j, x] : images[k]) acc[j] += c * x;
    return sparse_from_map(acc);
}

// Extends phi from generator assignments to the ideal, weight by weight, up to max_weight.
PhiResult extend_phi(const SuperLieAlgebra& G, const LieQuotientModel& M, const std::vector<std::vector<SparseVec>>& h,
                     const SuperLieAlgebra& H, const std::vector<std::pair<SparseVec, SparseVec>>& fixed,
                     int max_weight) {
    PhiResult R;
    R.phi.assign(G.dim(), SparseVec{});
    for (int w = 1; w <= max_weight; ++w) {
        Echelon E;
        std::vector<SparseVec> images;
        auto push = [&](const SparseVec& v, const SparseVec& img) {
            if (E.insert(v, unit(static_cast<int>(images.size())))) {
                images.push_back(img);
                return true;
            }
            return false;
        };
        std::vector<std::pair<SparseVec, SparseVec>> checks;
        for (int u = 1; 2 * u <= w; ++u)
            for (std::size_t i = 0; i < h[u].size(); ++i)
                for (std::size_t j = (2 * u == w ? i : 0); j < h[w - u].size(); ++j) {
                    const SparseVec v = G.bracket(h[u][i], h[w - u][j]);
                    const SparseVec img = H.bracket(linear(R.phi, h[u][i]), linear(R.phi, h[w - u][j]));
                    if (v.empty()) {
                        if (!img.empty()) R.homomorphism = false;
                        continue;
                    }
                    if (!push(v, img)) checks.emplace_back(v, img);
                }
        for (const auto& [v, img] : fixed) {
            int wv = G.label(v.front().first).weight;
            if (wv != w) continue;
            if (!push(v, img)) throw std::domain_error("assigned element lies in the bracket span");
        }
        for (const auto& v : h[w]) push(v, {});
        if (M.dim(w) == 0) continue;
        const int off = static_cast<int>(M.offset(w));
        for (std::size_t k = 0; k < M.dim(w); ++k) {
            const int idx = off + static_cast<int>(k);
            auto red = E.reduce(unit(idx), {}, true);
            if (!red.residual.empty()) continue;  // outside the ideal (x1, x2)
            std::map<int, Scalar> acc;
            for (const auto& [s, c] : red.aux)
                for (const auto& [j, x] : images[s]) acc[j] -= c * x;
            R.phi[idx] = sparse_from_map(acc);
        }
        for (const auto& [v, img] : checks)
            if (linear(R.phi, v) != img) R.homomorphism = false;
    }
    return R;
}

}  // namespace

CWSurjection build_cw_surjection(const SymPresentation& p, int r, int t, std::optional<int> l_req, int threads) {
    if (p.n < 3 || p.s < 1) throw std::invalid_argument("surjection needs n >= 3 and s >= 1");
    if (r < 0 || t < 0 || !(r >= 1 || (r == 0 && t >= 2)))
        throw std::invalid_argument("surjection needs r >= 1, or r = 0 and t >= 2");
    const SuperLieAlgebra H = heis(r, t);
    const int tp = t / 2;
    auto hidx = [&](const std::string& name) { return H.index_of(name); };

    Context ctx(p, threads);
    const Alphabet A = p.alphabet();
    ctx.model(9);
    auto coords = [&](const BracketExpr& e) { return ctx.model(9).coordinates(lie_expand(A, e)); };

    // Distinguished elements and their images.
    std::vector<std::pair<SparseVec, SparseVec>> fixed;
    std::vector<std::string> fixed_names;
    std::vector<Target> targets;
    if (r >= 1) {
        const auto x13 = BracketExpr::bracket(BracketExpr::leaf(p.x(0)), BracketExpr::leaf(p.x(2)));
        const auto x23 = BracketExpr::bracket(BracketExpr::leaf(p.x(1)), BracketExpr::leaf(p.x(2)));
        fixed.emplace_back(coords(x13), unit(hidx("p1")));
        fixed.emplace_back(coords(x23), unit(hidx("q1")));
        fixed_names = {"p1", "q1"};
        targets.push_back({"z", hidx("z"), Parity::Even});
        for (int i = 2; i <= r; ++i) targets.push_back({"q" + std::to_string(i), hidx("q" + std::to_string(i)), Parity::Even});
        for (int i = 2; i <= r; ++i) targets.push_back({"p" + std::to_string(i), hidx("p" + std::to_string(i)), Parity::Even});
        for (int i = 1; i <= tp; ++i) targets.push_back({"a" + std::to_string(i), hidx("a" + std::to_string(i)), Parity::Odd});
        for (int i = 1; i <= tp; ++i) targets.push_back({"b" + std::to_string(i), hidx("b" + std::to_string(i)), Parity::Odd});
    } else {
        // [x1,z1] vanishes in ym when x1* o Gamma is the identity, so a1 takes the weight-5 generator.
        const auto& M = ctx.model(9);
        const auto gens = extract_free_generators(M, IdealSpec::TymHat, p.n, p.s, 5);
        if (gens.weights[4].representatives.empty()) throw std::domain_error("no odd generator of weight 5");
        fixed.emplace_back(gens.weights[4].representatives.front(), unit(hidx("a1")));
        fixed_names = {"a1"};
        targets.push_back({"z", hidx("z"), Parity::Even});
        targets.push_back({"b1", hidx("b1"), Parity::Odd});
        for (int i = 2; i <= tp; ++i) targets.push_back({"a" + std::to_string(i), hidx("a" + std::to_string(i)), Parity::Odd});
        for (int i = 2; i <= tp; ++i) targets.push_back({"b" + std::to_string(i), hidx("b" + std::to_string(i)), Parity::Odd});
    }
    if (t % 2) targets.push_back({"c", hidx("c"), Parity::Odd});
    std::size_t n_even = 0;
    for (const auto& tg : targets) n_even += tg.parity == Parity::Even;

    // Candidate generators: complement of the bracket span and of the distinguished elements.
    auto candidates_upto = [&](int maxw) {
        const auto& M = ctx.model(maxw);
        const auto& h = ctx.h();
        const auto& G = ctx.algebra();
        std::vector<Candidate> out;
        for (int w = 6; w <= maxw; ++w) {
            Echelon e;
            for (int u = 1; 2 * u <= w; ++u)
                for (std::size_t i = 0; i < h[u].size(); ++i)
                    for (std::size_t j = (2 * u == w ? i : 0); j < h[w - u].size(); ++j)
                        e.insert(G.bracket(h[u][i], h[w - u][j]));
            for (const auto& [v, img] : fixed)
                if (G.label(v.front().first).weight == w) e.insert(v);
            const int off = static_cast<int>(M.offset(w));
            for (std::size_t k = 0; k < M.dim(w); ++k)
                if (e.insert(unit(off + static_cast<int>(k))))
                    out.push_back({off + static_cast<int>(k), w, G.label(off + static_cast<int>(k)).parity});
        }
        return out;
    };
    int pool_weight = 9;
    std::vector<Candidate> pool = candidates_upto(pool_weight);
    auto enough = [&]() {
        std::size_t ev = 0, od = 0;
        for (const auto& c : pool) (c.parity == Parity::Even ? ev : od)++;
        return ev >= n_even + 1 && od >= targets.size() - n_even + 1;
    };
    while (!enough() && pool_weight < 17) {
        pool_weight += 2;
        pool = candidates_upto(pool_weight);
    }

    CWSurjection best;
    best.r = r;
    best.t = t;
    const int max_attempts = 64;
    std::vector<int> chosen(targets.size(), -1);
    bool accepted = false;

    std::function<void(std::size_t, int)> dfs = [&](std::size_t k, int j) {
        if (accepted || best.attempts >= max_attempts) return;
        if (k == targets.size()) {
            ++best.attempts;
            int dprime = 4;
            for (const auto& [v, img] : fixed) dprime = std::max(dprime, ctx.algebra().label(v.front().first).weight);
            for (int c : chosen) dprime = std::max(dprime, pool[c].weight);
            const int top = std::max(2 * dprime + 1, l_req ? *l_req + 1 : 0);
            const auto& M = ctx.model(top);
            const auto& G = ctx.algebra();
            const auto& h = ctx.h();
            auto fx = fixed;
            for (std::size_t i = 0; i < targets.size(); ++i)
                fx.emplace_back(unit(pool[chosen[i]].index), unit(targets[i].heis_index));
            PhiResult phi = extend_phi(G, M, h, H, fx, top);
            int wstar = 0;
            for (std::size_t i = 0; i < G.dim(); ++i)
                if (!phi.phi[i].empty()) wstar = std::max(wstar, G.label(i).weight);
            const int l = l_req ? *l_req : std::max(1, wstar - 1);
            const int maxw = l + 1;
            std::vector<int> keep;
            for (std::size_t i = 0; i < G.dim(); ++i)
                if (G.label(i).weight <= maxw) keep.push_back(static_cast<int>(i));
            // Truncated algebra ym/F^l.
            std::vector<BasisLabel> labels;
            for (int i : keep) labels.push_back(G.label(i));
            SuperLieAlgebra T(labels);
            for (const auto& [key, v] : G.stored_brackets()) {
                if (G.label(key.first).weight + G.label(key.second).weight > maxw) continue;
                T.set_bracket(key.first, key.second, v);
            }
            CWSurjection S;
            S.r = r;
            S.t = t;
            S.l = l;
            S.d_prime = dprime;
            S.attempts = best.attempts;
            S.algebra_dim = T.dim();
            S.homomorphism = phi.homomorphism;
            // F^l -> 0: phi vanishes above the cutoff and brackets leaving the quotient map to zero.
            S.fl_vanishes = true;
            for (std::size_t i = 0; i < G.dim(); ++i)
                if (G.label(i).weight > maxw && !phi.phi[i].empty()) S.fl_vanishes = false;
            for (std::size_t i = 0; i < keep.size() && S.fl_vanishes; ++i)
                for (std::size_t jj = i; jj < keep.size(); ++jj) {
                    if (G.label(keep[i]).weight + G.label(keep[jj]).weight <= maxw) continue;
                    if (phi.phi[keep[i]].empty() || phi.phi[keep[jj]].empty()) continue;
                    if (!H.bracket(phi.phi[keep[i]], phi.phi[keep[jj]]).empty()) {
                        S.fl_vanishes = false;
                        break;
                    }
                }
            Echelon span;
            for (int i : keep) span.insert(phi.phi[i]);
            S.surjective = span.rank() == H.dim();
            EvenFunctional f(T.dim(), Scalar(0));
            const int z = hidx("z");
            for (std::size_t i = 0; i < keep.size(); ++i) f[i] = sparse_get(phi.phi[keep[i]], z);
            // Stabilizer: x' = c1 x1 + c2 x2 with f([x', y]) = 0 for every y in the ideal.
            std::vector<SparseVec> ideal;
            for (int w = 1; w <= maxw; ++w)
                for (const auto& v : h[w]) ideal.push_back(v);
            std::vector<SparseVec> xs = {M.coordinates(TensorPoly::letter(p.x(0))),
                                         M.coordinates(TensorPoly::letter(p.x(1)))};
            Matrix B = zero_matrix(2, ideal.size());
            for (int a = 0; a < 2; ++a)
                for (std::size_t y = 0; y < ideal.size(); ++y) B[a][y] = evaluate(f, T.bracket(xs[a], ideal[y]));
            S.stabilizer_ok = dense_rank(B) == 2;
            Echelon ind;
            std::size_t indep = 0;
            const std::size_t nfixed = r >= 1 ? 2 : 1;
            for (std::size_t i = 0; i < nfixed; ++i) indep += ind.insert(linear(phi.phi, fixed[i].first));
            if (r == 0) indep += ind.insert(phi.phi[pool[chosen[1]].index]);  // b1
            S.independent = indep == 2;
            if (!S.stabilizer_ok && !l_req) return;
            for (std::size_t i = 0; i < fixed.size(); ++i)
                S.assignment.push_back({fixed_names[i], G.label(fixed[i].first.front().first).name,
                                        G.label(fixed[i].first.front().first).weight});
            for (std::size_t i = 0; i < targets.size(); ++i)
                S.assignment.push_back({targets[i].name, G.label(pool[chosen[i]].index).name, pool[chosen[i]].weight});
            S.weight = weight_of(T, f);
            for (std::size_t i = 0; i < f.size(); ++i)
                if (!is_zero(f[i])) S.f_bar.emplace_back(T.label(i).name, f[i]);
            best = std::move(S);
            accepted = best.stabilizer_ok;
            return;
        }
        const Target& tg = targets[k];
        for (std::size_t c = 0; c < pool.size() && !accepted; ++c) {
            if (pool[c].parity != tg.parity) continue;
            if (std::find(chosen.begin(), chosen.end(), static_cast<int>(c)) != chosen.end()) continue;
            if (tg.parity == Parity::Even && pool[c].weight < 6) continue;
            if (tg.parity == Parity::Odd && pool[c].weight <= j) continue;
            chosen[k] = static_cast<int>(c);
            dfs(k + 1, tg.parity == Parity::Even ? std::max(j, pool[c].weight) : j);
            chosen[k] = -1;
        }
    };
    dfs(0, 4);
    if (best.assignment.empty()) throw std::domain_error("no generator assignment found; increase the generator pool");
    return best;
}

WeylSurjectionNote weyl_surjection_note(const SymPresentation& p, int r) {
    if (r < 1) throw std::invalid_argument("Weyl index must be positive");
    WeylSurjectionNote N;
    const Alphabet A = p.alphabet();
    std::vector<TensorPoly> images;
    for (int i = 0; i < p.n; ++i) images.push_back(TensorPoly::letter(i));
    for (int a = 0; a < p.s; ++a) images.push_back(TensorPoly{});
    const auto rels = build_relations(p);
    for (const auto& rel : rels) N.relation_images.push_back(substitute(rel, images));
    N.odd_relations_vanish = true;
    for (int a = 0; a < p.s; ++a)
        if (!N.relation_images[p.n + a].is_zero()) N.odd_relations_vanish = false;
    SymPresentation ym = SymPresentation::preset(p.n, 0);
    if (p.metric) ym.metric = p.metric;
    const auto ymrels = build_relations(ym);
    N.even_relations_match = true;
    for (int i = 0; i < p.n; ++i)
        if (N.relation_images[i] != ymrels[i]) N.even_relations_match = false;
    N.delegation = "continue on ym(" + std::to_string(p.n) + ",0) with the even pipeline (t = 0) for A_" + std::to_string(r);
    return N;
}

}  // namespace sym
