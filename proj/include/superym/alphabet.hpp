#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace sym {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(int b) { return (b & 1) ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return parity_of(bit(a) ^ bit(b)); }
// Koszul sign (-1)^{ab}.
inline int koszul(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

struct Generator {
    std::string name;
    Parity parity = Parity::Even;
    int weight = 1;
};

// Ordered list of generators; the order fixes the monomial order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Generator> gens);

    // x1..xn even weight 2, z1..zs odd weight 3.
    static Alphabet sym(int n, int s);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }
    int index_of(const std::string& name) const;  // -1 when absent
    int max_weight_letter() const;
    int min_weight_letter() const;

private:
    std::vector<Generator> gens_;
};

}  // namespace sym
