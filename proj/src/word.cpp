#include "superym/word.hpp"

namespace sym {

Word::Word(std::initializer_list<int> letters) {
    for (int l : letters) push_back(l);
}

void Word::push_back(int letter) {
    if (len_ >= kMaxLength) throw std::length_error("word exceeds maximal length");
    if (letter < 0 || letter > 255) throw std::out_of_range("letter index out of range");
    letters_[len_++] = static_cast<std::uint8_t>(letter);
}

Word Word::concat(const Word& other) const {
    if (len_ + other.len_ > kMaxLength) throw std::length_error("word exceeds maximal length");
    Word r = *this;
    for (std::size_t i = 0; i < other.len_; ++i) r.letters_[r.len_++] = other.letters_[i];
    return r;
}

Word Word::slice(std::size_t from, std::size_t to) const {
    Word r;
    for (std::size_t i = from; i < to; ++i) r.letters_[r.len_++] = letters_[i];
    return r;
}

int Word::weight(const Alphabet& a) const {
    int w = 0;
    for (std::size_t i = 0; i < len_; ++i) w += a[letters_[i]].weight;
    return w;
}

Parity Word::parity(const Alphabet& a) const {
    int p = 0;
    for (std::size_t i = 0; i < len_; ++i) p ^= bit(a[letters_[i]].parity);
    return parity_of(p);
}

std::string Word::str(const Alphabet& a) const {
    if (len_ == 0) return "1";
    std::string s;
    for (std::size_t i = 0; i < len_; ++i) {
        if (i) s += '*';
        s += a[letters_[i]].name;
    }
    return s;
}

}  // namespace sym
