#include "qlie/word.hpp"

namespace qlie {

std::string alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::B: return "B";
        case Alphabet::X: return "X";
        case Alphabet::Y: return "Y";
        case Alphabet::Dbi: return "Dbi";
    }
    return "?";
}

Letter Letter::b(int s) {
    if (s < 0) throw DomainError("b-letter index must be >= 0");
    return Letter(Alphabet::B, s, 0);
}

Letter Letter::x(int i) {
    if (i != 0 && i != 1) throw DomainError("x-letter index must be 0 or 1");
    return Letter(Alphabet::X, i, 0);
}

Letter Letter::y(int k) {
    if (k < 1) throw DomainError("y-letter index must be >= 1");
    return Letter(Alphabet::Y, k, 0);
}

Letter Letter::dbi(int k, int m) {
    if (k < 1) throw DomainError("D(k,m) requires k >= 1");
    if (m < 0) throw DomainError("D(k,m) requires m >= 0");
    return Letter(Alphabet::Dbi, k, m);
}

int Letter::weight() const {
    switch (tag_) {
        case Alphabet::B: return a_ == 0 ? 1 : a_;
        case Alphabet::X: return 1;
        case Alphabet::Y: return a_;
        case Alphabet::Dbi: return a_ + b_;
    }
    return 0;
}

int Letter::depth() const {
    switch (tag_) {
        case Alphabet::B: return a_ != 0 ? 1 : 0;
        case Alphabet::X: return a_ == 1 ? 1 : 0;
        case Alphabet::Y: return 1;
        case Alphabet::Dbi: return 1;
    }
    return 0;
}

Word::Word(Alphabet tag, std::vector<Letter> letters)
    : tag_(tag), letters_(std::move(letters)) {
    for (const Letter& l : letters_) {
        if (l.alphabet() != tag_)
            throw DomainError("letter alphabet does not match word alphabet");
        weight_ += l.weight();
        depth_ += l.depth();
    }
}

Word Word::prefix(std::size_t n) const {
    return Word(tag_, std::vector<Letter>(letters_.begin(),
                                          letters_.begin() + static_cast<long>(n)));
}

Word Word::suffix(std::size_t from) const {
    return Word(tag_, std::vector<Letter>(letters_.begin() + static_cast<long>(from),
                                          letters_.end()));
}

Word Word::subword(std::uint64_t mask) const {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (mask >> i & 1) ls.push_back(letters_[i]);
    return Word(tag_, std::move(ls));
}

Word concat(const Word& u, const Word& v) {
    if (u.tag_ != v.tag_) throw DomainError("alphabet mismatch in concat");
    std::vector<Letter> ls = u.letters_;
    ls.insert(ls.end(), v.letters_.begin(), v.letters_.end());
    return Word(u.tag_, std::move(ls));
}

bool Word::lex_less(const Word& u, const Word& v) {
    return std::lexicographical_compare(u.letters_.begin(), u.letters_.end(),
                                        v.letters_.begin(), v.letters_.end());
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
    if (auto c = u.weight_ <=> v.weight_; c != 0) return c;
    if (auto c = u.depth_ <=> v.depth_; c != 0) return c;
    if (Word::lex_less(u, v)) return std::strong_ordering::less;
    if (Word::lex_less(v, u)) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BBlocks b_blocks(const Word& w) {
    if (w.alphabet() != Alphabet::B)
        throw DomainError("block decomposition requires the B alphabet");
    BBlocks r;
    int m = 0;
    for (const Letter& l : w) {
        if (l.index() == 0) {
            ++m;
        } else {
            r.mk.emplace_back(m, l.index());
            m = 0;
        }
    }
    r.tail = m;
    return r;
}

BBlocks b0_blocks_checked(const Word& w) {
    BBlocks r = b_blocks(w);
    if (r.tail != 0)
        throw DomainError("word ends in b0");
    return r;
}

Word word_from_blocks(const BBlocks& blocks) {
    std::vector<Letter> ls;
    for (auto [m, k] : blocks.mk) {
        for (int i = 0; i < m; ++i) ls.push_back(Letter::b(0));
        ls.push_back(Letter::b(k));
    }
    for (int i = 0; i < blocks.tail; ++i) ls.push_back(Letter::b(0));
    return Word(Alphabet::B, std::move(ls));
}

std::size_t WordHash::operator()(const Word& w) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(w.alphabet());
    for (const Letter& l : w) {
        std::uint64_t x = (static_cast<std::uint64_t>(l.index()) << 16) |
                          static_cast<std::uint64_t>(l.ad_power());
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace qlie
