#include "qlie/ncpoly.hpp"

#include <utility>

namespace qlie {

void require_same_alphabet(const NcPoly& p, const NcPoly& q, const char* op) {
    if (p.alphabet() != q.alphabet())
        throw DomainError(std::string("alphabet mismatch in ") + op + ": " +
                          alphabet_name(p.alphabet()) + " vs " +
                          alphabet_name(q.alphabet()));
}

void require_alphabet(const NcPoly& p, Alphabet tag, const char* op) {
    if (p.alphabet() != tag)
        throw DomainError(std::string(op) + " requires the " +
                          alphabet_name(tag) + " alphabet, got " +
                          alphabet_name(p.alphabet()));
}

NcPoly NcPoly::unit(Alphabet tag) {
    NcPoly p(tag);
    p.add_term(Word(tag), 1);
    return p;
}

NcPoly NcPoly::monomial(Word w, Rational coeff) {
    NcPoly p(w.alphabet());
    p.add_term(w, coeff);
    return p;
}

Rational NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
    if (w.alphabet() != tag_)
        throw DomainError("word alphabet does not match polynomial alphabet");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& q) {
    require_same_alphabet(*this, q, "add");
    for (const auto& [w, c] : q.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& q) {
    require_same_alphabet(*this, q, "subtract");
    for (const auto& [w, c] : q.terms_) add_term(w, -c);
    return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

NcPoly operator*(const NcPoly& p, const NcPoly& q) {
    require_same_alphabet(p, q, "concat");
    NcPoly r(p.alphabet());
    for (const auto& [u, a] : p.terms_)
        for (const auto& [v, b] : q.terms_) r.add_term(concat(u, v), a * b);
    return r;
}

NcPoly concat(const NcPoly& p, const NcPoly& q) { return p * q; }

NcPoly commutator(const NcPoly& p, const NcPoly& q) { return p * q - q * p; }

namespace {

// One product call shares a memo keyed by word pairs; no global cache.
struct PairMemo {
    std::map<std::pair<Word, Word>, NcPoly> table;
};

NcPoly shuffle_words(const Word& u, const Word& v, PairMemo& memo) {
    if (u.empty()) return NcPoly::monomial(v);
    if (v.empty()) return NcPoly::monomial(u);
    auto key = std::make_pair(u, v);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
    NcPoly r(u.alphabet());
    Word head_u = u.prefix(1), head_v = v.prefix(1);
    r += NcPoly::monomial(head_u) * shuffle_words(u.suffix(1), v, memo);
    r += NcPoly::monomial(head_v) * shuffle_words(u, v.suffix(1), memo);
    memo.table.emplace(std::move(key), r);
    return r;
}

NcPoly quasi_shuffle_words(const Word& u, const Word& v, PairMemo& memo) {
    if (u.empty()) return NcPoly::monomial(v);
    if (v.empty()) return NcPoly::monomial(u);
    auto key = std::make_pair(u, v);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
    NcPoly r(u.alphabet());
    int i = u[0].index(), j = v[0].index();
    r += NcPoly::monomial(u.prefix(1)) * quasi_shuffle_words(u.suffix(1), v, memo);
    r += NcPoly::monomial(v.prefix(1)) * quasi_shuffle_words(u, v.suffix(1), memo);
    if (i > 0 && j > 0) {
        Word merged(Alphabet::B, {Letter::b(i + j)});
        r += NcPoly::monomial(merged) *
             quasi_shuffle_words(u.suffix(1), v.suffix(1), memo);
    }
    memo.table.emplace(std::move(key), r);
    return r;
}

}  // namespace

NcPoly shuffle(const NcPoly& p, const NcPoly& q) {
    require_same_alphabet(p, q, "shuffle");
    PairMemo memo;
    NcPoly r(p.alphabet());
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms()) r += a * b * shuffle_words(u, v, memo);
    return r;
}

NcPoly balanced_quasi_shuffle(const NcPoly& p, const NcPoly& q) {
    require_alphabet(p, Alphabet::B, "balanced_quasi_shuffle");
    require_same_alphabet(p, q, "balanced_quasi_shuffle");
    PairMemo memo;
    NcPoly r(p.alphabet());
    for (const auto& [u, a] : p.terms())
        for (const auto& [v, b] : q.terms())
            r += a * b * quasi_shuffle_words(u, v, memo);
    return r;
}

NcPoly gr_depth(const NcPoly& p) {
    if (p.is_zero()) return p;
    int d = 0;
    for (const auto& [w, c] : p.terms()) d = std::max(d, w.depth());
    NcPoly r(p.alphabet());
    for (const auto& [w, c] : p.terms())
        if (w.depth() == d) r.add_term(w, c);
    return r;
}

Rational coeff(const NcPoly& p, const Word& w) {
    if (p.alphabet() != w.alphabet())
        throw DomainError("alphabet mismatch in coeff");
    return p.coeff(w);
}

std::map<std::pair<int, int>, NcPoly> bigraded_components(const NcPoly& p) {
    std::map<std::pair<int, int>, NcPoly> r;
    for (const auto& [w, c] : p.terms()) {
        auto key = std::make_pair(w.weight(), w.depth());
        auto it = r.find(key);
        if (it == r.end()) it = r.emplace(key, NcPoly(p.alphabet())).first;
        it->second.add_term(w, c);
    }
    return r;
}

}  // namespace qlie
