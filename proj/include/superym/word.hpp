#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "superym/alphabet.hpp"

namespace sym {

// Tensor monomial: a short sequence of generator indices.
class Word {
public:
    static constexpr std::size_t kMaxLength = 31;

    Word() = default;
    Word(std::initializer_list<int> letters);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }
    int operator[](std::size_t i) const { return letters_[i]; }

    void push_back(int letter);
    Word concat(const Word& other) const;
    Word slice(std::size_t from, std::size_t to) const;  // [from, to)

    int weight(const Alphabet& a) const;
    Parity parity(const Alphabet& a) const;
    std::string str(const Alphabet& a) const;

    std::string_view bytes() const {
        return {reinterpret_cast<const char*>(letters_.data()), len_};
    }

    friend bool operator==(const Word& a, const Word& b) { return a.bytes() == b.bytes(); }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    // Storage order: shorter first, then lexicographic.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        return a.bytes() < b.bytes();
    }

private:
    std::array<std::uint8_t, kMaxLength> letters_{};
    std::uint8_t len_ = 0;
};

// Lexicographic comparison by generator index (prefix is smaller).
inline bool lex_less(const Word& a, const Word& b) { return a.bytes() < b.bytes(); }

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        return std::hash<std::string_view>{}(w.bytes());
    }
};

}  // namespace sym
