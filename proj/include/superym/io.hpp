#pragma once
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "superym/dixmier.hpp"
#include "superym/lie_model.hpp"
#include "superym/presentation.hpp"

namespace sym {

using nlohmann::json;

// {"n","s","gamma":[[["p/q"]]],"metric":"orthonormal"|[[...]],"gamma_tilde"?}
SymPresentation presentation_from_json(const json& j);
json presentation_to_json(const SymPresentation& p);
SymPresentation load_presentation(const std::string& path);

// FNV-1a 64 of the canonical JSON form, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::string presentation_hash(const SymPresentation& p);

// {"basis":[{"name","parity","weight"}],"brackets":[{"i","j","coeffs":{"k":"p/q"}}]}
SuperLieAlgebra algebra_from_json(const json& j);
json algebra_to_json(const SuperLieAlgebra& g);

// Map name -> "p/q".
std::map<std::string, Scalar> functional_from_json(const json& j);
json functional_to_json(const SuperLieAlgebra& g, const EvenFunctional& f);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// Right-normed bracket as nested arrays, e.g. ["x1",["x1","x2"]].
json bracket_json(const Alphabet& a, const std::vector<int>& gens);
// {"weight","dim","basis"} for one weight of a Lie model.
json basis_report(const LieQuotientModel& m, int w);
// Sparse coordinates over the model basis as [["p/q", nested-bracket], ...].
json coords_json(const LieQuotientModel& m, const SparseVec& v);

json weight_json(const IdealWeight& w);

json read_json_file(const std::string& path);

}  // namespace sym
