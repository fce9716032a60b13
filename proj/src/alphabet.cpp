#include "superym/alphabet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sym {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.weight <= 0) throw std::invalid_argument("generator weight must be positive: " + g.name);
        if (!names.insert(g.name).second) throw std::invalid_argument("duplicate generator name: " + g.name);
    }
    if (gens_.size() > 250) throw std::invalid_argument("alphabet too large");
}

Alphabet Alphabet::sym(int n, int s) {
    std::vector<Generator> g;
    for (int i = 1; i <= n; ++i) g.push_back({"x" + std::to_string(i), Parity::Even, 2});
    for (int a = 1; a <= s; ++a) g.push_back({"z" + std::to_string(a), Parity::Odd, 3});
    return Alphabet(std::move(g));
}

int Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Alphabet::max_weight_letter() const {
    int m = 0;
    for (const auto& g : gens_) m = std::max(m, g.weight);
    return m;
}

int Alphabet::min_weight_letter() const {
    int m = 0;
    for (const auto& g : gens_) m = (m == 0) ? g.weight : std::min(m, g.weight);
    return m;
}

}  // namespace sym
