#include "superym/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sym {

namespace {

Scalar scalar_of(const json& v) {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
    throw std::invalid_argument("expected a rational string \"p/q\"");
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        out.push_back(r);
    }
    return out;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix");
    Matrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument("expected a matrix row");
        std::vector<Scalar> r;
        for (const auto& x : row) r.push_back(scalar_of(x));
        m.push_back(std::move(r));
    }
    return m;
}

SymPresentation presentation_from_json(const json& j) {
    SymPresentation p;
    p.n = j.at("n").get<int>();
    p.s = j.at("s").get<int>();
    p.gamma.n = p.n;
    p.gamma.s = p.s;
    const json& g = j.at("gamma");
    if (!g.is_array() || static_cast<int>(g.size()) != p.n)
        throw std::invalid_argument("gamma must hold n matrices");
    for (const auto& m : g) {
        Matrix mm = matrix_from_json(m);
        if (p.s == 0) mm.clear();
        p.gamma.mats.push_back(std::move(mm));
    }
    if (j.contains("metric")) {
        const json& mt = j.at("metric");
        if (mt.is_string()) {
            if (mt.get<std::string>() != "orthonormal") throw std::invalid_argument("unknown metric keyword");
        } else {
            p.metric = matrix_from_json(mt);
        }
    }
    if (j.contains("gamma_tilde") && !j.at("gamma_tilde").is_null()) {
        std::vector<Matrix> t;
        for (const auto& m : j.at("gamma_tilde")) t.push_back(matrix_from_json(m));
        p.gamma_tilde = std::move(t);
    }
    p.validate();
    return p;
}

json presentation_to_json(const SymPresentation& p) {
    json j;
    j["n"] = p.n;
    j["s"] = p.s;
    json g = json::array();
    for (const auto& m : p.gamma.mats) g.push_back(matrix_to_json(m));
    j["gamma"] = g;
    j["metric"] = p.metric ? matrix_to_json(*p.metric) : json("orthonormal");
    if (p.gamma_tilde) {
        json t = json::array();
        for (const auto& m : *p.gamma_tilde) t.push_back(matrix_to_json(m));
        j["gamma_tilde"] = t;
    }
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

SymPresentation load_presentation(const std::string& path) { return presentation_from_json(read_json_file(path)); }

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string presentation_hash(const SymPresentation& p) { return fnv1a_hex(presentation_to_json(p).dump()); }

SuperLieAlgebra algebra_from_json(const json& j) {
    std::vector<BasisLabel> labels;
    for (const auto& b : j.at("basis")) {
        BasisLabel l;
        l.name = b.at("name").get<std::string>();
        const auto par = b.at("parity");
        if (par.is_string()) {
            const auto s = par.get<std::string>();
            if (s == "even") l.parity = Parity::Even;
            else if (s == "odd") l.parity = Parity::Odd;
            else throw std::invalid_argument("parity must be even or odd");
        } else {
            l.parity = parity_of(par.get<int>());
        }
        l.weight = b.value("weight", 0);
        labels.push_back(std::move(l));
    }
    SuperLieAlgebra g(std::move(labels));
    const int n = static_cast<int>(g.dim());
    auto idx = [&](const json& v) {
        int i = v.is_string() ? g.index_of(v.get<std::string>()) : v.get<int>();
        if (i < 0 || i >= n) throw std::invalid_argument("bracket index out of range");
        return i;
    };
    if (j.contains("brackets"))
        for (const auto& br : j.at("brackets")) {
            std::map<int, Scalar> acc;
            for (const auto& [k, v] : br.at("coeffs").items()) {
                int kk = g.index_of(k);
                if (kk < 0) kk = std::stoi(k);
                if (kk < 0 || kk >= n) throw std::invalid_argument("bracket coefficient index out of range");
                acc[kk] += scalar_of(v);
            }
            g.set_bracket(idx(br.at("i")), idx(br.at("j")), sparse_from_map(acc));
        }
    return g;
}

json algebra_to_json(const SuperLieAlgebra& g) {
    json j;
    json basis = json::array();
    for (const auto& b : g.basis())
        basis.push_back({{"name", b.name}, {"parity", b.parity == Parity::Odd ? "odd" : "even"}, {"weight", b.weight}});
    j["basis"] = basis;
    json brs = json::array();
    for (const auto& [key, v] : g.stored_brackets()) {
        json coeffs = json::object();
        for (const auto& [k, c] : v) coeffs[std::to_string(k)] = to_string(c);
        brs.push_back({{"i", key.first}, {"j", key.second}, {"coeffs", coeffs}});
    }
    j["brackets"] = brs;
    return j;
}

std::map<std::string, Scalar> functional_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("functional must be an object name -> \"p/q\"");
    std::map<std::string, Scalar> out;
    for (const auto& [k, v] : j.items()) out[k] = scalar_of(v);
    return out;
}

json functional_to_json(const SuperLieAlgebra& g, const EvenFunctional& f) {
    json j = json::object();
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!is_zero(f[i])) j[g.label(i).name] = to_string(f[i]);
    return j;
}

json bracket_json(const Alphabet& a, const std::vector<int>& gens) {
    json cur = a[gens.back()].name;
    for (std::size_t i = gens.size() - 1; i-- > 0;) cur = json::array({a[gens[i]].name, cur});
    return cur;
}

json basis_report(const LieQuotientModel& m, int w) {
    json b = json::array();
    const std::size_t off = m.offset(w);
    for (std::size_t k = 0; k < m.dim(w); ++k) b.push_back(bracket_json(m.alphabet(), m.basis()[off + k].gens));
    return {{"weight", w}, {"dim", m.dim(w)}, {"basis", b}};
}

json coords_json(const LieQuotientModel& m, const SparseVec& v) {
    json out = json::array();
    for (const auto& [k, c] : v) out.push_back(json::array({to_string(c), bracket_json(m.alphabet(), m.basis()[k].gens)}));
    return out;
}

json weight_json(const IdealWeight& w) { return {{"weyl", w.weyl}, {"clifford", w.clifford}}; }

}  // namespace sym
