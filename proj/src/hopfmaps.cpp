#include "qlie/hopfmaps.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>

#include "enumerate.hpp"

namespace qlie {

namespace {

NcPoly b0_poly() { return NcPoly::monomial(Word(Alphabet::B, {Letter::b(0)})); }

NcPoly ad_b0(const NcPoly& p) { return commutator(b0_poly(), p); }

// Word packing for the split-pair accumulation in is_primitive. B/X/Y
// letters use one nibble each (length <= 15), Dbi letters a byte (k and m
// nibbles, length <= 7); falls back to ordered maps when out of range.
std::uint64_t pack_letter(const Letter& l) {
    if (l.alphabet() == Alphabet::Dbi)
        return static_cast<std::uint64_t>(l.index()) |
               (static_cast<std::uint64_t>(l.ad_power()) << 4);
    return static_cast<std::uint64_t>(l.index());
}

bool packable(const Word& w) {
    const bool wide = w.alphabet() == Alphabet::Dbi;
    if (w.size() > (wide ? 7u : 15u)) return false;
    for (const Letter& l : w)
        if (l.index() > 15 || l.ad_power() > 15) return false;
    return true;
}

std::uint64_t pack(const Word& w) {
    const int bits = w.alphabet() == Alphabet::Dbi ? 8 : 4;
    std::uint64_t r = static_cast<std::uint64_t>(w.size());
    int shift = 4;
    for (const Letter& l : w) {
        r |= pack_letter(l) << shift;
        shift += bits;
    }
    return r;
}

Word unpack(std::uint64_t v, Alphabet tag) {
    const int bits = tag == Alphabet::Dbi ? 8 : 4;
    std::size_t len = v & 0xf;
    std::vector<Letter> ls;
    ls.reserve(len);
    int shift = 4;
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t x = (v >> shift) & ((1u << bits) - 1);
        switch (tag) {
            case Alphabet::B: ls.push_back(Letter::b(static_cast<int>(x))); break;
            case Alphabet::X: ls.push_back(Letter::x(static_cast<int>(x))); break;
            case Alphabet::Y: ls.push_back(Letter::y(static_cast<int>(x))); break;
            case Alphabet::Dbi:
                ls.push_back(Letter::dbi(static_cast<int>(x & 0xf),
                                         static_cast<int>(x >> 4)));
                break;
        }
        shift += bits;
    }
    return Word(tag, std::move(ls));
}

struct PackedPairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        std::uint64_t x = p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0xbf58476d1ce4e5b9ULL);
        x ^= x >> 31;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 29;
        return static_cast<std::size_t>(x);
    }
};

PrimitivityReport primitive_packed(const NcPoly& p) {
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Rational,
                       PackedPairHash>
        pairs;
    std::size_t hint = 0;
    for (const auto& [w, c] : p.terms()) hint += std::size_t{1} << w.size();
    pairs.reserve(hint);
    for (const auto& [w, c] : p.terms()) {
        const std::uint64_t n = w.size();
        if (n < 2) continue;
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::uint64_t u = pack(w.subword(mask));
            std::uint64_t v = pack(w.subword(full & ~mask));
            if (v < u) std::swap(u, v);
            pairs[{u, v}] += c;
        }
    }
    const Rational* best_val = nullptr;
    std::pair<Word, Word> best{Word(p.alphabet()), Word(p.alphabet())};
    for (const auto& [key, val] : pairs) {
        if (val == 0) continue;
        auto cand = std::make_pair(unpack(key.first, p.alphabet()),
                                   unpack(key.second, p.alphabet()));
        if (!best_val || cand < best) {
            best = std::move(cand);
            best_val = &val;
        }
    }
    if (!best_val) return {true, std::nullopt};
    return {false, PrimitivityWitness{best.first, best.second, *best_val}};
}

PrimitivityReport primitive_generic(const NcPoly& p) {
    std::map<std::pair<Word, Word>, Rational> pairs;
    for (const auto& [w, c] : p.terms()) {
        const std::uint64_t n = w.size();
        if (n < 2) continue;
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            Word u = w.subword(mask);
            Word v = w.subword(full & ~mask);
            if (v < u) std::swap(u, v);
            pairs[{std::move(u), std::move(v)}] += c;
        }
    }
    for (const auto& [key, val] : pairs)
        if (val != 0)
            return {false, PrimitivityWitness{key.first, key.second, val}};
    return {true, std::nullopt};
}

}  // namespace

PrimitivityReport is_primitive(const NcPoly& p) {
    // Nonzero constant term: not a Lie element (convention Delta(1)=1x1).
    if (p.coeff(Word(p.alphabet())) != 0) return {false, std::nullopt};
    bool fast = true;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() > 24)
            throw ResourceLimitError(
                "primitivity check: the split enumeration is infeasible for "
                "words longer than 24 letters");
        if (!packable(w)) fast = false;
    }
    return fast ? primitive_packed(p) : primitive_generic(p);
}

NcPoly antipode(const NcPoly& p) {
    NcPoly r(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        std::vector<Letter> ls(w.letters().rbegin(), w.letters().rend());
        Rational sign = (w.size() % 2 == 0) ? 1 : -1;
        r.add_term(Word(p.alphabet(), std::move(ls)), sign * c);
    }
    return r;
}

NcPoly pi0(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "pi0");
    NcPoly r(p.alphabet());
    for (const auto& [w, c] : p.terms())
        if (w.empty() || w[w.size() - 1].index() != 0) r.add_term(w, c);
    return r;
}

NcPoly tau(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "tau");
    NcPoly r(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        BBlocks bl = b0_blocks_checked(w);
        BBlocks out;
        for (auto it = bl.mk.rbegin(); it != bl.mk.rend(); ++it)
            out.mk.emplace_back(it->second - 1, it->first + 1);
        r.add_term(word_from_blocks(out), c);
    }
    return r;
}

NcPoly sec(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "sec");
    NcPoly r(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        BBlocks bl = b0_blocks_checked(w);
        NcPoly acc = NcPoly::unit(Alphabet::B);
        for (auto it = bl.mk.rbegin(); it != bl.mk.rend(); ++it) {
            acc = NcPoly::monomial(Word(Alphabet::B, {Letter::b(it->second)})) * acc;
            for (int i = 0; i < it->first; ++i) acc = ad_b0(acc);
        }
        r += c * acc;
    }
    return r;
}

NcPoly partial0(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "partial0");
    NcPoly r(p.alphabet());
    for (const auto& [w, c] : p.terms())
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i].index() == 0)
                r.add_term(concat(w.prefix(i), w.suffix(i + 1)), c);
    return r;
}

NcPoly rho(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "rho");
    NcPoly r(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        BBlocks bl = b0_blocks_checked(w);
        const int d = static_cast<int>(bl.mk.size());
        if (d == 0) {
            r.add_term(w, c);
            continue;
        }
        int K = 0, M = 0;
        for (auto [m, k] : bl.mk) K += k, M += m;
        std::vector<int> llo(d - 1, 1), lhi, nlo(d - 1, 0), nhi;
        for (int s = 0; s < d - 1; ++s) {
            lhi.push_back(bl.mk[s].second);
            nhi.push_back(bl.mk[s].first);
        }
        detail::for_each_box(llo, lhi, [&](const std::vector<int>& ls) {
            int ld = K;
            for (int x : ls) ld -= x;
            if (ld < 1) return;
            detail::for_each_box(nlo, nhi, [&](const std::vector<int>& ns) {
                int nd = M;
                for (int x : ns) nd -= x;
                if (nd < 0) return;
                Rational coef(((ld + nd - 1) % 2 == 0) ? 1 : -1);
                for (int s = 0; s < d - 1; ++s)
                    coef *= Rational(binom(bl.mk[s].second - 1, ls[s] - 1) *
                                     binom(bl.mk[s].first, ns[s]));
                BBlocks out;
                out.mk.emplace_back(nd, ld);
                for (int s = 0; s < d - 1; ++s) out.mk.emplace_back(ns[s], ls[s]);
                r.add_term(word_from_blocks(out), coef * c);
            });
        });
    }
    return r;
}

NcPoly antipode0(const NcPoly& p) { return pi0(antipode(sec(p))); }

NcPoly from_dbi(const NcPoly& p) {
    require_alphabet(p, Alphabet::Dbi, "from_dbi");
    NcPoly r(Alphabet::B);
    for (const auto& [w, c] : p.terms()) {
        NcPoly acc = NcPoly::unit(Alphabet::B);
        for (const Letter& l : w) {
            NcPoly g = NcPoly::monomial(Word(Alphabet::B, {Letter::b(l.index())}));
            for (int i = 0; i < l.ad_power(); ++i) g = ad_b0(g);
            acc = acc * g;
        }
        r += c * acc;
    }
    return r;
}

namespace {

// Derivation on Q<Dbi> raising the ad-power of one letter; transport of
// ad(b0) under from_dbi.
NcPoly ad_dbi(const NcPoly& p) {
    NcPoly r(Alphabet::Dbi);
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::vector<Letter> ls = w.letters();
            ls[i] = Letter::dbi(ls[i].index(), ls[i].ad_power() + 1);
            r.add_term(Word(Alphabet::Dbi, std::move(ls)), c);
        }
    }
    return r;
}

// Dbi-valued section: from_dbi(sec_dbi(w)) = sec(w) for B-words w with no
// trailing b0.
NcPoly sec_dbi(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "sec_dbi");
    NcPoly r(Alphabet::Dbi);
    for (const auto& [w, c] : p.terms()) {
        BBlocks bl = b0_blocks_checked(w);
        NcPoly acc = NcPoly::unit(Alphabet::Dbi);
        for (auto it = bl.mk.rbegin(); it != bl.mk.rend(); ++it) {
            acc = NcPoly::monomial(
                      Word(Alphabet::Dbi, {Letter::dbi(it->second, 0)})) *
                  acc;
            for (int i = 0; i < it->first; ++i) acc = ad_dbi(acc);
        }
        r += c * acc;
    }
    return r;
}

}  // namespace

NcPoly to_dbi(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "to_dbi");
    if (!partial0(p).is_zero())
        throw DomainError("not in Q<Dbi>: partial0 of the input is nonzero");
    NcPoly r = sec_dbi(pi0(p));
    if (from_dbi(r) != p)
        throw DomainError("not in Q<Dbi>: reassembly mismatch");
    return r;
}

NcPoly tau_dbi(const NcPoly& p) {
    require_alphabet(p, Alphabet::Dbi, "tau_dbi");
    return sec_dbi(tau(pi0(from_dbi(p))));
}

}  // namespace qlie
