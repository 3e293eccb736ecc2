#include "qlie/brackets.hpp"

#include <map>
#include <numeric>

#include "enumerate.hpp"
#include "qlie/hopfmaps.hpp"

namespace qlie {

namespace {

struct GenTerm {
    int l;
    Rational coeff;
    Word block;
};

// The (l, coefficient, block word) triples of the generator-image sum of
// d^u; the trailing b0 block of u is carried into every block word.
std::vector<GenTerm> der_terms(const Word& u) {
    BBlocks bl = b_blocks(u);
    const int d = static_cast<int>(bl.mk.size());
    int K = 0;
    for (auto [m, k] : bl.mk) K += k;
    std::vector<int> lo(d, 1), hi;
    for (auto [m, k] : bl.mk) hi.push_back(k);
    std::vector<GenTerm> out;
    detail::for_each_box(lo, hi, [&](const std::vector<int>& ls) {
        int l = K - std::accumulate(ls.begin(), ls.end(), 0);
        if (l < 0) return;
        Rational coef((l % 2 == 0) ? 1 : -1);
        for (int s = 0; s < d; ++s)
            coef *= Rational(binom(bl.mk[s].second - 1, ls[s] - 1));
        BBlocks blocks;
        for (int s = 0; s < d; ++s) blocks.mk.emplace_back(bl.mk[s].first, ls[s]);
        blocks.tail = bl.tail;
        out.push_back({l, coef, word_from_blocks(blocks)});
    });
    return out;
}

NcPoly der_a_word(const Word& u, Side side, const NcPoly& target) {
    const std::vector<GenTerm> terms = der_terms(u);
    std::map<int, NcPoly> images;
    auto image = [&](int i) -> const NcPoly& {
        auto it = images.find(i);
        if (it != images.end()) return it->second;
        NcPoly img(Alphabet::B);
        for (const GenTerm& t : terms) {
            NcPoly a = NcPoly::monomial(Word(Alphabet::B, {Letter::b(i + t.l)}));
            NcPoly bw = NcPoly::monomial(t.block);
            switch (side) {
                case Side::both: img += t.coeff * commutator(a, bw); break;
                case Side::right: img += t.coeff * (a * bw); break;
                case Side::left: img += t.coeff * (bw * a); break;
            }
        }
        return images.emplace(i, std::move(img)).first->second;
    };
    NcPoly r(Alphabet::B);
    for (const auto& [v, c] : target.terms()) {
        for (std::size_t pos = 0; pos < v.size(); ++pos) {
            const int s = v[pos].index();
            if (s == 0) continue;
            r += c * (NcPoly::monomial(v.prefix(pos)) * image(s) *
                      NcPoly::monomial(v.suffix(pos + 1)));
        }
    }
    return r;
}

}  // namespace

NcPoly der_a(const NcPoly& w, Side side, const NcPoly& target) {
    require_alphabet(w, Alphabet::B, "der_a");
    require_same_alphabet(w, target, "der_a");
    NcPoly r(Alphabet::B);
    for (const auto& [u, c] : w.terms()) r += c * der_a_word(u, side, target);
    return r;
}

NcPoly bracket_a(const NcPoly& f, const NcPoly& g) {
    require_same_alphabet(f, g, "bracket_a");
    if (f.alphabet() == Alphabet::Dbi) {
        NcPoly fb = from_dbi(f), gb = from_dbi(g);
        return to_dbi(bracket_a(fb, gb));
    }
    require_alphabet(f, Alphabet::B, "bracket_a");
    return der_a(f, Side::both, g) - der_a(g, Side::both, f) + commutator(f, g);
}

NcPoly der_a0(const NcPoly& w, Side side, const NcPoly& v) {
    return pi0(der_a(sec(w), side, sec(v)));
}

NcPoly mul0(const NcPoly& v, const NcPoly& w) { return pi0(sec(v) * sec(w)); }

NcPoly bracket_a0(const NcPoly& v, const NcPoly& w) {
    return pi0(bracket_a(sec(v), sec(w)));
}

NcPoly der_ihara(const NcPoly& w, const NcPoly& target) {
    require_alphabet(w, Alphabet::X, "der_ihara");
    require_same_alphabet(w, target, "der_ihara");
    NcPoly x1 = NcPoly::monomial(Word(Alphabet::X, {Letter::x(1)}));
    NcPoly img = commutator(x1, w);
    NcPoly r(Alphabet::X);
    for (const auto& [v, c] : target.terms()) {
        for (std::size_t pos = 0; pos < v.size(); ++pos) {
            if (v[pos].index() != 1) continue;
            r += c * (NcPoly::monomial(v.prefix(pos)) * img *
                      NcPoly::monomial(v.suffix(pos + 1)));
        }
    }
    return r;
}

NcPoly ihara_bracket(const NcPoly& f, const NcPoly& g) {
    require_alphabet(f, Alphabet::X, "ihara_bracket");
    require_same_alphabet(f, g, "ihara_bracket");
    return der_ihara(f, g) - der_ihara(g, f) + commutator(f, g);
}

NcPoly delta(const NcPoly& p) {
    require_alphabet(p, Alphabet::Dbi, "delta");
    NcPoly r(Alphabet::Dbi);
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::vector<Letter> ls = w.letters();
            ls[i] = Letter::dbi(ls[i].index() + 1, ls[i].ad_power() + 1);
            r.add_term(Word(Alphabet::Dbi, std::move(ls)), c);
        }
    }
    return r;
}

namespace {

Integer sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

bool collapse_identity_k(std::span<const int> ks, std::span<const int> lambdas,
                         int lambda, int lambda_bar) {
    const int d = static_cast<int>(ks.size());
    int K = std::accumulate(ks.begin(), ks.end(), 0);
    Integer total = 0;
    std::vector<int> lo(d - 1, 1), hi(ks.begin(), ks.end() - 1);
    detail::for_each_box(lo, hi, [&](const std::vector<int>& ls) {
        int ld = K - std::accumulate(ls.begin(), ls.end(), 0);
        if (ld < 1) return;
        Integer c = sign(ld) * binom(ld - 1, lambda - 1);
        for (int s = 0; s < d - 1; ++s)
            c *= binom(ks[s] - lambdas[s], ls[s] - lambdas[s]);
        total += c;
    });
    return sign(lambda_bar) * total == sign(lambda) * binom(ks[d - 1] - 1, lambda_bar);
}

bool collapse_identity_m(std::span<const int> ms, std::span<const int> mus,
                         int mu, int mu_bar) {
    const int d = static_cast<int>(ms.size());
    int M = std::accumulate(ms.begin(), ms.end(), 0);
    Integer total = 0;
    std::vector<int> lo(d - 1, 0), hi(ms.begin(), ms.end() - 1);
    detail::for_each_box(lo, hi, [&](const std::vector<int>& ns) {
        int nd = M - std::accumulate(ns.begin(), ns.end(), 0);
        if (nd < 0) return;
        Integer c = sign(nd) * binom(nd, mu);
        for (int s = 0; s < d - 1; ++s)
            c *= binom(ms[s] - mus[s], ns[s] - mus[s]);
        total += c;
    });
    return sign(mu_bar) * total == sign(mu) * binom(ms[d - 1], mu_bar);
}

bool derivation_reversal_identity(std::span<const int> ks,
                                  std::span<const int> ms,
                                  std::span<const int> lambdas, int lambda,
                                  int lambda_bar, std::span<const int> mus,
                                  int mu, int mu_bar) {
    const int d = static_cast<int>(ks.size());
    int K = std::accumulate(ks.begin(), ks.end(), 0);
    int M = std::accumulate(ms.begin(), ms.end(), 0);
    Integer total = 0;
    std::vector<int> klo(d - 1, 1), khi(ks.begin(), ks.end() - 1);
    std::vector<int> mlo(d - 1, 0), mhi(ms.begin(), ms.end() - 1);
    detail::for_each_box(klo, khi, [&](const std::vector<int>& ls) {
        int ld = K - std::accumulate(ls.begin(), ls.end(), 0);
        if (ld < 1) return;
        Integer ck = sign(ld) * binom(ld - 1, lambda - 1);
        for (int s = 0; s < d - 1; ++s)
            ck *= binom(ks[s] - lambdas[s], ls[s] - lambdas[s]);
        if (ck == 0) return;
        detail::for_each_box(mlo, mhi, [&](const std::vector<int>& ns) {
            int nd = M - std::accumulate(ns.begin(), ns.end(), 0);
            if (nd < 0) return;
            Integer c = ck * sign(nd) * binom(nd, mu);
            for (int s = 0; s < d - 1; ++s)
                c *= binom(ms[s] - mus[s], ns[s] - mus[s]);
            total += c;
        });
    });
    Integer lhs = sign(lambda + mu) * binom(ms[d - 1], mu_bar) *
                  binom(ks[d - 1] - 1, lambda_bar);
    return lhs == sign(lambda_bar + mu_bar) * total;
}

}  // namespace qlie
