#include "oracles.hpp"

#include <functional>
#include <numeric>

#include "../src/enumerate.hpp"

namespace qlie::oracles {

namespace {

Word b_word(const std::vector<int>& letters) {
    std::vector<Letter> ls;
    ls.reserve(letters.size());
    for (int s : letters) ls.push_back(Letter::b(s));
    return Word(Alphabet::B, std::move(ls));
}

void append_block(std::vector<int>& w, int zeros, int letter) {
    for (int i = 0; i < zeros; ++i) w.push_back(0);
    w.push_back(letter);
}

}  // namespace

NcPoly sec_closed(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "sec_closed");
    NcPoly r(Alphabet::B);
    for (const auto& [w, c] : p.terms()) {
        BBlocks bl = b0_blocks_checked(w);
        const int d = static_cast<int>(bl.mk.size());
        int M = 0;
        for (auto [m, k] : bl.mk) M += m;
        std::vector<int> lo(d, 0), hi;
        for (auto [m, k] : bl.mk) hi.push_back(m);
        detail::for_each_box(lo, hi, [&](const std::vector<int>& ns) {
            int n = M - std::accumulate(ns.begin(), ns.end(), 0);
            if (n < 0) return;
            Rational coef((n % 2 == 0) ? 1 : -1);
            for (int s = 0; s < d; ++s)
                coef *= Rational(binom(bl.mk[s].first, ns[s]));
            std::vector<int> word;
            for (int s = 0; s < d; ++s) append_block(word, ns[s], bl.mk[s].second);
            for (int i = 0; i < n; ++i) word.push_back(0);
            r.add_term(b_word(word), coef * c);
        });
    }
    return r;
}

NcPoly antipode0_closed(const NcPoly& p) {
    require_alphabet(p, Alphabet::B, "antipode0_closed");
    NcPoly r(Alphabet::B);
    for (const auto& [w, c] : p.terms()) {
        BBlocks bl = b0_blocks_checked(w);
        const int d = static_cast<int>(bl.mk.size());
        if (d == 0) {
            r.add_term(w, c);
            continue;
        }
        int M = 0;
        for (auto [m, k] : bl.mk) M += m;
        // free n_2..n_d in [0, m_s]; n_1 is the leftover
        std::vector<int> lo(d - 1, 0), hi;
        for (int s = 1; s < d; ++s) hi.push_back(bl.mk[s].first);
        detail::for_each_box(lo, hi, [&](const std::vector<int>& tail) {
            int n1 = M - std::accumulate(tail.begin(), tail.end(), 0);
            if (n1 < 0) return;
            Rational coef((d % 2 == 0) ? 1 : -1);
            for (int s = 1; s < d; ++s) {
                coef *= Rational(binom(bl.mk[s].first, tail[s - 1]));
                if (tail[s - 1] % 2 != 0) coef = -coef;
            }
            // word: b0^{n_1} b_{k_d} b0^{n_d} b_{k_{d-1}} ... b0^{n_2} b_{k_1}
            std::vector<int> word;
            append_block(word, n1, bl.mk[d - 1].second);
            for (int t = d - 1; t >= 1; --t)
                append_block(word, tail[t - 1], bl.mk[t - 1].second);
            r.add_term(b_word(word), coef * c);
        });
    }
    return r;
}

namespace {

// Weak compositions of n into parts parts.
std::vector<std::vector<int>> weak_compositions(int n, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int idx, int rest) {
        if (idx == parts - 1) {
            cur[idx] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[idx] = v;
            rec(idx + 1, rest - v);
        }
    };
    if (parts == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    rec(0, n);
    return out;
}

}  // namespace

NcPoly tau_dbi_closed(const NcPoly& p) {
    require_alphabet(p, Alphabet::Dbi, "tau_dbi_closed");
    NcPoly r(Alphabet::Dbi);
    for (const auto& [w, c] : p.terms()) {
        const int d = static_cast<int>(w.size());
        if (d == 0) {
            r.add_term(w, c);
            continue;
        }
        std::vector<int> ks(d), ms(d);
        for (int s = 0; s < d; ++s) {
            ks[s] = w[s].index();
            ms[s] = w[s].ad_power();
        }
        // all weak compositions l^{(s)} of k_s - 1 into s parts (1-based s)
        std::vector<std::vector<std::vector<int>>> lcomps;
        for (int s = 1; s <= d; ++s)
            lcomps.push_back(weak_compositions(ks[s - 1] - 1, s));
        std::vector<std::size_t> sel(d, 0);
        while (true) {
            Rational cl(1);
            for (int s = 1; s <= d; ++s) {
                const std::vector<int>& comp = lcomps[s - 1][sel[s - 1]];
                std::vector<long> parts(comp.begin(), comp.end());
                cl *= Rational(multinom(ks[s - 1] - 1, parts));
            }
            std::vector<int> lo(d - 1, 0), hi;
            for (int s = 0; s < d - 1; ++s) hi.push_back(ms[s]);
            detail::for_each_box(lo, hi, [&](const std::vector<int>& head) {
                std::vector<int> ns(head);
                ns.push_back(ms[d - 1]);  // n_d := m_d
                Rational coef = cl;
                for (int s = 0; s < d; ++s) {
                    coef *= Rational(binom(ms[s], ns[s]));
                    if ((ms[s] + ns[s]) % 2 != 0) coef = -coef;
                }
                if (coef == 0) return;
                std::vector<Letter> word;
                for (int t = d; t >= 1; --t) {
                    int beta = 0;
                    for (int s = t; s <= d; ++s) beta += lcomps[s - 1][sel[s - 1]][t - 1];
                    int alpha = (t == 1) ? ns[0] + 1
                                         : ns[t - 1] + ms[t - 2] - ns[t - 2] + 1;
                    word.push_back(Letter::dbi(alpha, beta));
                }
                r.add_term(Word(Alphabet::Dbi, std::move(word)), coef * c);
            });
            // advance the composition selector
            int s = 0;
            while (s < d && ++sel[s] == lcomps[s].size()) {
                sel[s] = 0;
                ++s;
            }
            if (s == d) break;
        }
    }
    return r;
}

NcPoly der_a0_explicit(const Word& w, Side side, const Word& v) {
    BBlocks blw = b0_blocks_checked(w);
    BBlocks blv = b0_blocks_checked(v);
    const int d = static_cast<int>(blw.mk.size());
    const int e = static_cast<int>(blv.mk.size());
    if (d == 0 || e == 0)
        return der_a0(NcPoly::monomial(w), side, NcPoly::monomial(v));
    if (side == Side::both)
        return der_a0_explicit(w, Side::right, v) -
               der_a0_explicit(w, Side::left, v);
    int K = 0, M = 0;
    for (auto [m, k] : blw.mk) K += k, M += m;
    NcPoly r(Alphabet::B);
    std::vector<int> llo(d, 1), lhi, nlo(d, 0), nhi;
    for (auto [m, k] : blw.mk) {
        lhi.push_back(k);
        nhi.push_back(m);
    }
    for (int i = 1; i <= e; ++i) {
        detail::for_each_box(llo, lhi, [&](const std::vector<int>& ls) {
            int l = K - std::accumulate(ls.begin(), ls.end(), 0);
            if (l < 0) return;
            Rational ck(1);
            for (int s = 0; s < d; ++s)
                ck *= Rational(binom(blw.mk[s].second - 1, ls[s] - 1));
            if (l % 2 != 0) ck = -ck;
            detail::for_each_box(nlo, nhi, [&](const std::vector<int>& ns) {
                int n = M - std::accumulate(ns.begin(), ns.end(), 0);
                if (n < 0) return;
                if (side == Side::right && i == e && n != 0) return;
                Rational coef = ck;
                for (int s = 0; s < d; ++s)
                    coef *= Rational(binom(blw.mk[s].first, ns[s]));
                if (n % 2 != 0) coef = -coef;
                std::vector<int> inner;
                for (int s = 0; s < d; ++s) append_block(inner, ns[s], ls[s]);
                for (int t = 0; t < n; ++t) inner.push_back(0);
                std::vector<int> word;
                for (int t = 0; t < i - 1; ++t)
                    append_block(word, blv.mk[t].first, blv.mk[t].second);
                auto [ti, si] = blv.mk[i - 1];
                for (int t = 0; t < ti; ++t) word.push_back(0);
                if (side == Side::right) {
                    word.push_back(si + l);
                    word.insert(word.end(), inner.begin(), inner.end());
                } else {
                    word.insert(word.end(), inner.begin(), inner.end());
                    word.push_back(si + l);
                }
                for (int t = i; t < e; ++t)
                    append_block(word, blv.mk[t].first, blv.mk[t].second);
                r.add_term(b_word(word), coef);
            });
        });
    }
    return r;
}

namespace {

NcPoly der_a_dbi_gen(const Word& wd, int i, int n) {
    const int d = static_cast<int>(wd.size());
    int K = 0;
    for (const Letter& l : wd) K += l.index();
    NcPoly r(Alphabet::Dbi);
    std::vector<int> llo(d, 1), lhi, plo(d, 0), phi(d, n);
    for (const Letter& l : wd) lhi.push_back(l.index());
    detail::for_each_box(llo, lhi, [&](const std::vector<int>& ls) {
        int l = K - std::accumulate(ls.begin(), ls.end(), 0);
        if (l < 0) return;
        Rational ck(1);
        for (int s = 0; s < d; ++s)
            ck *= Rational(binom(wd[s].index() - 1, ls[s] - 1));
        if (l % 2 != 0) ck = -ck;
        if (ck == 0) return;
        detail::for_each_box(plo, phi, [&](const std::vector<int>& ps) {
            int pr = n - std::accumulate(ps.begin(), ps.end(), 0);
            if (pr < 0) return;
            std::vector<long> parts(ps.begin(), ps.end());
            parts.push_back(pr);
            Rational coef = ck * Rational(multinom(n, parts));
            if (coef == 0) return;
            NcPoly head = NcPoly::monomial(
                Word(Alphabet::Dbi, {Letter::dbi(i + l, pr)}));
            std::vector<Letter> block;
            for (int s = 0; s < d; ++s)
                block.push_back(Letter::dbi(ls[s], wd[s].ad_power() + ps[s]));
            NcPoly tail = NcPoly::monomial(Word(Alphabet::Dbi, std::move(block)));
            r += coef * commutator(head, tail);
        });
    });
    return r;
}

}  // namespace

NcPoly der_a_dbi_direct(const NcPoly& w, const NcPoly& target) {
    require_alphabet(w, Alphabet::Dbi, "der_a_dbi_direct");
    require_same_alphabet(w, target, "der_a_dbi_direct");
    NcPoly r(Alphabet::Dbi);
    for (const auto& [u, cu] : w.terms()) {
        for (const auto& [v, cv] : target.terms()) {
            for (std::size_t pos = 0; pos < v.size(); ++pos) {
                NcPoly img = der_a_dbi_gen(u, v[pos].index(), v[pos].ad_power());
                r += cu * cv *
                     (NcPoly::monomial(v.prefix(pos)) * img *
                      NcPoly::monomial(v.suffix(pos + 1)));
            }
        }
    }
    return r;
}

NcPoly bracket_a_dbi_direct(const NcPoly& f, const NcPoly& g) {
    return der_a_dbi_direct(f, g) - der_a_dbi_direct(g, f) + commutator(f, g);
}

NcPoly bracket_a0_expanded(const NcPoly& v, const NcPoly& w) {
    return der_a0(v, Side::both, w) - der_a0(w, Side::both, v) + mul0(v, w) -
           mul0(w, v);
}

Word random_b0_word(Rng& rng, int max_weight) {
    while (true) {
        std::vector<int> letters;
        int wt = 0;
        while (wt < max_weight) {
            int s = rng.uniform(0, 3);
            int add = s == 0 ? 1 : s;
            if (wt + add > max_weight) break;
            letters.push_back(s);
            wt += add;
            if (rng.uniform(0, 2) == 0 && !letters.empty()) break;
        }
        if (!letters.empty() && letters.back() != 0) return b_word(letters);
    }
}

Word random_b_word(Rng& rng, int max_weight) {
    while (true) {
        std::vector<int> letters;
        int wt = 0;
        while (wt < max_weight) {
            int s = rng.uniform(0, 3);
            int add = s == 0 ? 1 : s;
            if (wt + add > max_weight) break;
            letters.push_back(s);
            wt += add;
            if (rng.uniform(0, 2) == 0) break;
        }
        if (!letters.empty()) return b_word(letters);
    }
}

Word random_x_word(Rng& rng, int len) {
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) ls.push_back(Letter::x(rng.uniform(0, 1)));
    return Word(Alphabet::X, std::move(ls));
}

Word random_dbi_word(Rng& rng, int max_weight, int max_len) {
    while (true) {
        std::vector<Letter> ls;
        int wt = 0;
        int len = rng.uniform(1, max_len);
        for (int i = 0; i < len && wt < max_weight; ++i) {
            int budget = max_weight - wt - (len - i - 1);
            if (budget < 1) break;
            int t = rng.uniform(1, budget);
            int k = rng.uniform(1, t);
            ls.push_back(Letter::dbi(k, t - k));
            wt += t;
        }
        if (!ls.empty()) return Word(Alphabet::Dbi, std::move(ls));
    }
}

NcPoly random_x_poly(Rng& rng, int max_len, int terms) {
    NcPoly p(Alphabet::X);
    for (int t = 0; t < terms; ++t) {
        int c = rng.uniform(-3, 3);
        if (c == 0) c = 1;
        p += Rational(c) * NcPoly::monomial(random_x_word(rng, rng.uniform(1, max_len)));
    }
    return p;
}

namespace {

NcPoly random_nested_commutator(Rng& rng, int max_weight,
                                const std::function<NcPoly(int)>& letter) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        int depth = rng.uniform(0, 2);
        int budget = max_weight;
        std::function<NcPoly(int)> build = [&](int level) -> NcPoly {
            if (level == 0) {
                int w = rng.uniform(1, std::max(1, budget));
                budget -= w;
                return letter(w);
            }
            NcPoly a = build(level - 1);
            NcPoly b = build(0);
            return commutator(a, b);
        };
        NcPoly e = build(depth);
        if (!e.is_zero()) return e;
    }
    return letter(1);
}

}  // namespace

NcPoly random_lie_dbi(Rng& rng, int max_weight) {
    return random_nested_commutator(rng, max_weight, [&](int w) {
        int k = rng.uniform(1, w);
        return NcPoly::monomial(Word(Alphabet::Dbi, {Letter::dbi(k, w - k)}));
    });
}

NcPoly random_lie_b(Rng& rng, int max_weight) {
    return random_nested_commutator(rng, max_weight, [&](int w) {
        int s = rng.uniform(0, 1) == 0 ? 0 : rng.uniform(1, w);
        return NcPoly::monomial(Word(Alphabet::B, {Letter::b(s)}));
    });
}

NcPoly random_lie_x(Rng& rng, int max_weight) {
    (void)max_weight;
    return random_nested_commutator(rng, max_weight, [&](int) {
        return NcPoly::monomial(Word(Alphabet::X, {Letter::x(rng.uniform(0, 1))}));
    });
}

}  // namespace qlie::oracles
