#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superym/dixmier.hpp"
#include "superym/freegens.hpp"
#include "superym/io.hpp"
#include "superym/presentation.hpp"
#include "superym/reference_bases.hpp"
#include "superym/resolution.hpp"
#include "superym/surjection.hpp"
#include "superym/verify.hpp"

namespace fs = std::filesystem;
using namespace sym;

namespace {

constexpr const char* kCacheVersion = "superym-1";

struct RunConfig {
    std::string command;
    std::string sub;
    std::string preset;
    std::string presentation_path;
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
    int threads = 1;
    bool check_engine = false;
    bool verify_b7 = false;
    std::optional<int> degree, l, max_weight, r, t, max;
    std::string ideal = "tym-hat";
    std::string algebra_path, functional_path;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Report under construction: failures collected by name.
struct Report {
    json body = json::object();
    std::vector<std::string> failures;
    void require(bool ok, const std::string& name) {
        if (!ok) failures.push_back(name);
    }
};

std::optional<SymPresentation> load_input_presentation(const RunConfig& c) {
    if (!c.preset.empty() && !c.presentation_path.empty())
        throw UsageError("--preset and --presentation are mutually exclusive");
    if (!c.presentation_path.empty()) return load_presentation(c.presentation_path);
    if (c.preset.empty()) return std::nullopt;
    const auto comma = c.preset.find(',');
    if (comma == std::string::npos) throw UsageError("--preset expects n,s");
    int n = 0, s = 0;
    try {
        n = std::stoi(c.preset.substr(0, comma));
        s = std::stoi(c.preset.substr(comma + 1));
    } catch (const std::exception&) {
        throw UsageError("--preset expects n,s");
    }
    if (n < 1 || s < 0) throw UsageError("--preset needs n >= 1 and s >= 0");
    return SymPresentation::preset(n, s);
}

SymPresentation require_presentation(const std::optional<SymPresentation>& p) {
    if (!p) throw UsageError("a presentation is required (--preset n,s or --presentation file.json)");
    return *p;
}

// Gamma-tilde used by the susy check: supplied, derived, or Gamma itself when derivation fails.
std::optional<std::vector<Matrix>> susy_tilde(const SymPresentation& p, std::string& source) {
    if (p.gamma_tilde) {
        source = "supplied";
        return std::nullopt;
    }
    try {
        derive_gamma_tilde(p);
        source = "derived";
        return std::nullopt;
    } catch (const std::exception&) {
        source = "gamma";
        return p.gamma.mats;
    }
}

json resolution_json(const ResolutionReport& r) {
    json ws = json::array();
    for (const auto& w : r.weights)
        ws.push_back({{"weight", w.weight},
                      {"dims", {w.dim[0], w.dim[1], w.dim[2], w.dim[3]}},
                      {"ranks", {w.rank[0], w.rank[1], w.rank[2], w.rank[3]}},
                      {"b1b2_zero", w.b1b2_zero},
                      {"b2b3_zero", w.b2b3_zero},
                      {"exact", w.exact},
                      {"b3_injective", w.b3_injective},
                      {"euler", w.euler},
                      {"ok", w.ok()}});
    return {{"side", r.side == ResolutionSide::Left ? "left" : "right"}, {"ok", r.ok()}, {"weights", ws}};
}

json reference_json(const ReferenceBasisCheck& c) {
    json rel = json::array();
    for (const auto& [label, ok] : c.relations) rel.push_back({{"relation", label}, {"holds", ok}});
    return {{"size", c.size},       {"rank", c.rank},         {"model_dim", c.model_dim},
            {"independent", c.independent}, {"spanning", c.spanning}, {"relations", rel}};
}

LieModelOptions model_options(const RunConfig& c) {
    LieModelOptions o;
    o.threads = c.threads;
    return o;
}

void cmd_hilbert(const RunConfig& c, const SymPresentation& p, Report& rep) {
    const int D = c.degree.value_or(20);
    if (D < 0) throw UsageError("--degree must be nonnegative");
    rep.body["cutoff"] = {{"degree", D}};
    const auto nd = check_nondegenerate(p);
    rep.body["nondegenerate"] = nd.nondegenerate;
    json den = json::array();
    const DensePolynomial denominator = hilbert_denominator(p.n, p.s);
    for (const auto& x : denominator.coeffs()) den.push_back(to_string(x));
    rep.body["denominator"] = den;
    json rows = json::array();
    if (D >= 1) {
        const auto nu = dims_ym(p, D);
        const auto series = hilbert_series_YM(p, D);
        std::optional<LieQuotientModel> engine;
        if (c.check_engine) engine.emplace(LieQuotientModel::for_presentation(p, D - 1, model_options(c)));
        for (int j = 1; j <= D; ++j) {
            json row = {{"j", j}, {"nu", nu[j - 1]}, {"series", to_string(series[j])}};
            if (engine) {
                const auto e = engine->dim(j);
                row["engine"] = e;
                rep.require(static_cast<std::int64_t>(e) == nu[j - 1], "engine_dim_" + std::to_string(j));
            }
            rows.push_back(row);
        }
    }
    rep.body["dims"] = rows;
}

void cmd_basis(const RunConfig& c, const SymPresentation& p, Report& rep) {
    const int L = c.l.value_or(7);
    if (L < 1) throw UsageError("--l must be at least 1");
    rep.body["cutoff"] = {{"l", L}};
    const auto m = LieQuotientModel::for_presentation(p, L, model_options(c));
    json ws = json::array();
    for (int w = 1; w <= L + 1; ++w)
        if (m.dim(w) > 0) ws.push_back(basis_report(m, w));
    rep.body["total_dim"] = m.total_dim();
    rep.body["weights"] = ws;
    if (c.verify_b7) {
        if (presentation_hash(p) != presentation_hash(SymPresentation::preset(3, 1)))
            throw UsageError("--verify-paper-b7 needs the canonical (3,1) presentation");
        json ref = json::object();
        for (int l : {5, 7}) {
            std::optional<LieQuotientModel> own;
            if (l != L) own.emplace(LieQuotientModel::for_presentation(p, l, model_options(c)));
            const auto chk = check_reference_basis(own ? *own : m, ym31_reference_basis(l),
                                                   l == 7 ? ym31_reference_relations() : std::vector<BracketRelation>{});
            ref["B" + std::to_string(l)] = reference_json(chk);
            rep.require(chk.independent, "B" + std::to_string(l) + "_independent");
            rep.require(chk.spanning, "B" + std::to_string(l) + "_spanning");
            for (const auto& [label, ok] : chk.relations) rep.require(ok, "relation " + label);
        }
        rep.body["reference_bases"] = ref;
    }
}

void cmd_verify(const RunConfig& c, const SymPresentation& p, Report& rep) {
    if (c.sub == "resolution") {
        const int W = c.max_weight.value_or(14);
        rep.body["cutoff"] = {{"max_weight", W}};
        const auto model = AssocQuotientModel::for_presentation(p, W);
        json sides = json::array();
        for (auto side : {ResolutionSide::Left, ResolutionSide::Right}) {
            const auto r = verify_resolution(model, W, side);
            sides.push_back(resolution_json(r));
            rep.require(r.ok(), side == ResolutionSide::Left ? "left_resolution" : "right_resolution");
        }
        rep.body["resolutions"] = sides;
    } else if (c.sub == "omega") {
        rep.body["cutoff"] = {{"max_weight", 8}};
        const bool omega = omega_identity(p);
        const auto sp = superpotential_check(p);
        json m = json::array();
        for (bool b : sp.matches) m.push_back(b);
        rep.body["omega_identity"] = omega;
        rep.body["cyclic_derivatives_match"] = m;
        rep.require(omega, "omega_identity");
        rep.require(sp.ok(), "superpotential");
    } else if (c.sub == "susy") {
        rep.body["cutoff"] = {{"max_weight", 9}};
        std::string source;
        const auto tilde = susy_tilde(p, source);
        const auto r = susy_check(p, tilde);
        rep.body["gamma_tilde_source"] = source;
        rep.body["quartic_zero"] = r.quartic_zero;
        rep.body["equivariant"] = r.equivariant;
        rep.body["in_ideal"] = r.in_ideal;
        rep.body["ideal_preserved"] = r.all_in_ideal();
        rep.body["consistent"] = r.consistent();
        rep.body["summary"] = std::string(r.quartic_zero ? "quartic zero" : "quartic nonzero") + "; " +
                              (r.all_in_ideal() ? "ideal preserved" : "ideal not preserved");
        rep.require(r.consistent(), "susy_criterion");
    } else if (c.sub == "semidirect") {
        const int W = c.max_weight.value_or(10);
        rep.body["cutoff"] = {{"max_weight", W}};
        const auto r = semidirect_check(p, W);
        rep.body["d_preserves_relation"] = r.d_preserves_relation;
        rep.body["relation_maps_to_ideal"] = r.relation_maps_to_ideal;
        rep.body["intertwines"] = r.intertwines;
        rep.require(r.d_preserves_relation, "d_preserves_relation");
        rep.require(r.relation_maps_to_ideal, "relation_maps_to_ideal");
        rep.require(r.intertwines, "intertwines");
    } else {
        throw UsageError("verify needs one of: resolution, omega, susy, semidirect");
    }
}

void cmd_dixmier_weight(const RunConfig& c, Report& rep) {
    if (c.algebra_path.empty() || c.functional_path.empty())
        throw UsageError("dixmier weight needs --algebra and --functional");
    const json aj = read_json_file(c.algebra_path);
    const json fj = read_json_file(c.functional_path);
    rep.body["algebra_hash"] = fnv1a_hex(aj.dump());
    rep.body["functional_hash"] = fnv1a_hex(fj.dump());
    const auto g = algebra_from_json(aj);
    const auto v = validate(g);
    rep.body["dims"] = {{"even", g.dim_even()}, {"odd", g.dim_odd()}};
    rep.body["valid"] = v.ok();
    rep.body["nilpotency_class"] = v.nilpotency_class;
    if (!v.ok()) {
        rep.body["validation_failures"] = v.failures;
        rep.require(false, "algebra_valid");
        return;
    }
    const auto f = make_functional(g, functional_from_json(fj));
    const auto w = weight_of(g, f);
    const auto pol = vergne_polarization(g, f);
    rep.body["weight"] = weight_json(w);
    rep.body["polarization"] = {{"ok", pol.ok},
                                {"error", pol.error},
                                {"dim_even", pol.dim_even},
                                {"dim_odd", pol.dim_odd},
                                {"target_even", pol.target_even},
                                {"target_odd", pol.target_odd},
                                {"subalgebra", pol.subalgebra},
                                {"subordinate", pol.subordinate}};
    if (pol.ok) {
        rep.require(pol.subalgebra, "polarization_subalgebra");
        rep.require(pol.subordinate, "polarization_subordinate");
    }
}

void cmd_dixmier_surject(const RunConfig& c, const SymPresentation& p, Report& rep) {
    const int r = c.r.value_or(1), t = c.t.value_or(1);
    std::optional<int> l;
    if (c.l) l = *c.l;
    const auto S = build_cw_surjection(p, r, t, l, c.threads);
    rep.body["cutoff"] = {{"l", S.l}};
    rep.body["r"] = r;
    rep.body["t"] = t;
    rep.body["d_prime"] = S.d_prime;
    rep.body["attempts"] = S.attempts;
    rep.body["algebra_dim"] = S.algebra_dim;
    json as = json::array();
    for (const auto& a : S.assignment) as.push_back({{"target", a.target}, {"generator", a.generator}, {"weight", a.weight}});
    rep.body["assignment"] = as;
    json fb = json::object();
    for (const auto& [name, v] : S.f_bar) fb[name] = to_string(v);
    rep.body["functional"] = fb;
    rep.body["extension"] = S.extension;
    rep.body["weight"] = weight_json(S.weight);
    rep.body["homomorphism"] = S.homomorphism;
    rep.body["surjective"] = S.surjective;
    rep.body["fl_vanishes"] = S.fl_vanishes;
    rep.body["stabilizer_ok"] = S.stabilizer_ok;
    rep.body["independent"] = S.independent;
    const IdealWeight expected{static_cast<std::size_t>(r + 2), static_cast<std::size_t>(t)};
    rep.body["expected_weight"] = weight_json(expected);
    rep.require(S.homomorphism, "homomorphism");
    rep.require(S.surjective, "surjective");
    rep.require(S.fl_vanishes, "fl_vanishes");
    rep.require(S.stabilizer_ok, "stabilizer_ok");
    rep.require(S.independent, "independent");
    rep.require(S.weight == expected, "weight");
}

void cmd_freegens(const RunConfig& c, const SymPresentation& p, Report& rep) {
    const IdealSpec spec = parse_ideal_spec(c.ideal);
    const int W = c.max.value_or(10);
    rep.body["cutoff"] = {{"max", W}};
    rep.body["ideal"] = to_string(spec);
    json ws = json::array();
    if (W >= 2) {
        auto m = LieQuotientModel::for_presentation(p, W - 1, model_options(c));
        m.compute_structure_constants(c.threads);
        const auto r = extract_free_generators(m, spec, p.n, p.s, W);
        for (const auto& w : r.weights) {
            json reps = json::array();
            for (const auto& v : w.representatives) reps.push_back(coords_json(m, v));
            ws.push_back({{"weight", w.weight},
                          {"ideal_dim", w.ideal_dim},
                          {"bracket_dim", w.bracket_dim},
                          {"generators", w.generators},
                          {"expected", w.expected ? json(to_string(*w.expected)) : json(nullptr)},
                          {"matches", w.matches()},
                          {"representatives", reps}});
            rep.require(w.matches(), "weight_" + std::to_string(w.weight));
        }
    }
    rep.body["weights"] = ws;
}

// Aligned text rendering of a report.
std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_table(const json& j, const std::string& prefix, std::ostream& out) {
    std::vector<std::pair<std::string, std::string>> scalars;
    for (const auto& [k, v] : j.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object() && !v.empty()) continue;
        if (v.is_array() && !v.empty() && v.front().is_object()) continue;
        scalars.emplace_back(key, cell(v));
    }
    std::size_t width = 0;
    for (const auto& s : scalars) width = std::max(width, s.first.size());
    for (const auto& [k, v] : scalars) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
    for (const auto& [k, v] : j.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object() && !v.empty()) {
            render_table(v, key, out);
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            std::vector<std::string> cols;
            for (const auto& row : v)
                for (const auto& [ck, cv] : row.items())
                    if (std::find(cols.begin(), cols.end(), ck) == cols.end()) cols.push_back(ck);
            for (const char* lead : {"weight", "j"})
                if (auto it = std::find(cols.begin(), cols.end(), lead); it != cols.end()) std::rotate(cols.begin(), it, it + 1);
            std::vector<std::vector<std::string>> cells;
            std::vector<std::size_t> w(cols.size());
            for (std::size_t i = 0; i < cols.size(); ++i) w[i] = cols[i].size();
            for (const auto& row : v) {
                std::vector<std::string> rc;
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    rc.push_back(row.contains(cols[i]) ? cell(row[cols[i]]) : "");
                    w[i] = std::max(w[i], rc.back().size());
                }
                cells.push_back(std::move(rc));
            }
            out << "\n[" << key << "]\n";
            auto line = [&](const std::vector<std::string>& r) {
                for (std::size_t i = 0; i < r.size(); ++i)
                    out << std::left << std::setw(static_cast<int>(w[i]) + (i + 1 < r.size() ? 2 : 0)) << r[i];
                out << "\n";
            };
            line(cols);
            for (const auto& rc : cells) line(rc);
        }
    }
}

std::string render(const json& j, const std::string& format) {
    if (format == "table") {
        std::ostringstream out;
        render_table(j, "", out);
        return out.str();
    }
    return j.dump(2) + "\n";
}

fs::path cache_directory(const RunConfig& c) {
    if (!c.cache_dir.empty()) return c.cache_dir;
    if (const char* e = std::getenv("SUPERYM_CACHE_DIR"); e && *e) return e;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "superym";
    if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "superym";
    return fs::temp_directory_path() / "superym-cache";
}

// Every input that can change the output.
std::string cache_key(const RunConfig& c, const std::optional<SymPresentation>& p) {
    json k = {{"version", kCacheVersion}, {"command", c.command}, {"sub", c.sub},       {"format", c.format},
              {"check_engine", c.check_engine}, {"verify_b7", c.verify_b7}, {"ideal", c.ideal}};
    auto opt = [&](const char* name, const std::optional<int>& v) { k[name] = v ? json(*v) : json(nullptr); };
    opt("degree", c.degree);
    opt("l", c.l);
    opt("max_weight", c.max_weight);
    opt("r", c.r);
    opt("t", c.t);
    opt("max", c.max);
    k["presentation"] = p ? presentation_to_json(*p) : json(nullptr);
    k["algebra"] = c.algebra_path.empty() ? json(nullptr) : read_json_file(c.algebra_path);
    k["functional"] = c.functional_path.empty() ? json(nullptr) : read_json_file(c.functional_path);
    return fnv1a_hex(k.dump());
}

struct Outcome {
    std::string text;
    int code = 0;
};

Outcome compute(const RunConfig& c, const std::optional<SymPresentation>& pin) {
    Report rep;
    rep.body["command"] = c.sub.empty() ? c.command : c.command + " " + c.sub;
    if (pin) {
        rep.body["presentation_hash"] = presentation_hash(*pin);
        rep.body["n"] = pin->n;
        rep.body["s"] = pin->s;
    } else {
        rep.body["presentation_hash"] = nullptr;
    }
    if (c.command == "hilbert") cmd_hilbert(c, require_presentation(pin), rep);
    else if (c.command == "basis") cmd_basis(c, require_presentation(pin), rep);
    else if (c.command == "verify") cmd_verify(c, require_presentation(pin), rep);
    else if (c.command == "dixmier" && c.sub == "weight") cmd_dixmier_weight(c, rep);
    else if (c.command == "dixmier" && c.sub == "surject") cmd_dixmier_surject(c, require_presentation(pin), rep);
    else if (c.command == "dixmier") throw UsageError("dixmier needs one of: weight, surject");
    else if (c.command == "freegens") cmd_freegens(c, require_presentation(pin), rep);
    else throw UsageError("unknown command");
    rep.body["status"] = rep.failures.empty() ? "pass" : "fail";
    rep.body["failures"] = rep.failures;
    return {render(rep.body, c.format), rep.failures.empty() ? 0 : 1};
}

int run(const RunConfig& c) {
    if (c.format != "json" && c.format != "table") throw UsageError("--format must be json or table");
    if (c.threads < 1) throw UsageError("--threads must be positive");
    const auto p = load_input_presentation(c);
    const fs::path dir = cache_directory(c);
    const fs::path file = dir / (cache_key(c, p) + ".json");

    std::optional<json> cached;
    if (fs::exists(file)) {
        try {
            cached = read_json_file(file.string());
        } catch (const std::exception&) {
            cached.reset();
        }
    }
    if (cached && !c.no_cache) {
        std::cout << cached->at("output").get<std::string>();
        return cached->at("exit").get<int>();
    }
    const Outcome o = compute(c, p);
    if (cached && c.no_cache && cached->at("output").get<std::string>() != o.text) {
        std::cout << json({{"status", "error"}, {"message", "cached output differs from recomputation"},
                           {"cache_file", file.string()}})
                         .dump(2)
                  << "\n";
        return 3;
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!ec) {
        const fs::path tmp = file.string() + ".tmp";
        std::ofstream out(tmp);
        out << json({{"exit", o.code}, {"output", o.text}}).dump();
        out.close();
        if (out) fs::rename(tmp, file, ec);
    }
    std::cout << o.text;
    return o.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Super Yang-Mills algebra computations"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig c;

    app.add_option("--preset", c.preset, "Canonical presentation n,s");
    app.add_option("--presentation", c.presentation_path, "Presentation JSON file");
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--cache-dir", c.cache_dir, "Cache directory (default $SUPERYM_CACHE_DIR)");
    app.add_flag("--no-cache", c.no_cache, "Recompute and compare against any cached result");
    app.add_option("--threads", c.threads, "Worker threads");
    app.add_option("--degree", c.degree, "Hilbert series degree");
    app.add_option("--l", c.l, "Filtration cutoff l");
    app.add_option("--max-weight", c.max_weight, "Weight cutoff");
    app.add_option("--r", c.r, "Weyl rank r");
    app.add_option("--t", c.t, "Clifford rank t");
    app.add_option("--max", c.max, "Largest weight");
    app.add_option("--ideal", c.ideal, "Ideal: tym-hat, tym, k1s")->check(CLI::IsMember({"tym-hat", "tym", "k1s"}));
    app.add_option("--algebra", c.algebra_path, "Structure-constant JSON file");
    app.add_option("--functional", c.functional_path, "Functional JSON file");
    app.add_flag("--check-engine", c.check_engine, "Cross-check series dimensions against the Lie engine");
    app.add_flag("--verify-paper-b7", c.verify_b7, "Check the reference bases B5 and B7 of ym(3,1)");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and dimensions");
    auto* basis = app.add_subcommand("basis", "Basis of ym/F^l");
    auto* verify = app.add_subcommand("verify", "Verification reports");
    auto* dixmier = app.add_subcommand("dixmier", "Primitive ideal weights and surjections");
    auto* freegens = app.add_subcommand("freegens", "Free generators of ideals");
    verify->require_subcommand(1);
    dixmier->require_subcommand(1);
    std::vector<CLI::App*> leaves = {hilbert, basis, freegens};
    for (const char* s : {"resolution", "omega", "susy", "semidirect"}) leaves.push_back(verify->add_subcommand(s));
    for (const char* s : {"weight", "surject"}) leaves.push_back(dixmier->add_subcommand(s));
    for (auto* sc : leaves) sc->fallthrough();
    verify->fallthrough();
    dixmier->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    for (auto* sc : app.get_subcommands()) {
        c.command = sc->get_name();
        for (auto* sub : sc->get_subcommands()) c.sub = sub->get_name();
    }
    try {
        return run(c);
    } catch (const std::exception& e) {
        std::cout << json({{"status", "error"}, {"command", c.command}, {"message", e.what()}}).dump(2) << "\n";
        return 2;
    }
}
