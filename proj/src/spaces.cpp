#include "qlie/spaces.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "qlie/embedding.hpp"
#include "qlie/print.hpp"

namespace qlie {

std::string space_name(Space s) { return s == Space::lq ? "lq" : "ls"; }

ResourceLimits ResourceLimits::from_env() {
    ResourceLimits lim;
    if (const char* w = std::getenv("LQ_MAX_WEIGHT")) {
        int v = std::atoi(w);
        if (v > 0) lim.max_weight = v;
    }
    if (const char* d = std::getenv("LQ_MAX_DEPTH")) {
        int v = std::atoi(d);
        if (v > 0) lim.max_depth = v;
    }
    return lim;
}

namespace {

std::vector<Letter> cell_letters(Alphabet tag, int weight) {
    std::vector<Letter> out;
    switch (tag) {
        case Alphabet::B:
            for (int s = 0; s <= weight; ++s) out.push_back(Letter::b(s));
            break;
        case Alphabet::X:
            out = {Letter::x(0), Letter::x(1)};
            break;
        case Alphabet::Y:
            for (int k = 1; k <= weight; ++k) out.push_back(Letter::y(k));
            break;
        case Alphabet::Dbi:
            for (int t = 1; t <= weight; ++t)
                for (int k = 1; k <= t; ++k) out.push_back(Letter::dbi(k, t - k));
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_lyndon(const std::vector<Letter>& w) {
    const std::size_t n = w.size();
    if (n == 0) return false;
    for (std::size_t r = 1; r < n; ++r) {
        // compare w with its rotation by r
        for (std::size_t i = 0; i < n; ++i) {
            const Letter& a = w[i];
            const Letter& b = w[(i + r) % n];
            if (a < b) break;
            if (b < a) return false;
            if (i + 1 == n) return false;  // rotation equal => periodic
        }
    }
    return true;
}

void gen_words(const std::vector<Letter>& letters, int weight, int depth,
               std::vector<Letter>& cur, int cw, int cd,
               std::vector<std::vector<Letter>>& out) {
    if (cw == weight && cd == depth) out.push_back(cur);
    if (cw >= weight) return;
    for (const Letter& l : letters) {
        if (cw + l.weight() > weight || cd + l.depth() > depth) continue;
        cur.push_back(l);
        gen_words(letters, weight, depth, cur, cw + l.weight(), cd + l.depth(), out);
        cur.pop_back();
    }
}

NcPoly standard_bracketing(Alphabet tag, const std::vector<Letter>& w) {
    if (w.size() == 1) return NcPoly::monomial(Word(tag, w));
    // standard factorization: w = uv with v the longest proper Lyndon suffix
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::vector<Letter> v(w.begin() + static_cast<long>(i), w.end());
        if (is_lyndon(v)) {
            std::vector<Letter> u(w.begin(), w.begin() + static_cast<long>(i));
            return commutator(standard_bracketing(tag, u),
                              standard_bracketing(tag, v));
        }
    }
    throw DomainError("not a Lyndon word");
}

}  // namespace

std::vector<NcPoly> lyndon_basis(Alphabet tag, int weight, int depth) {
    if (weight < 0 || depth < 0) throw DomainError("negative bigrading");
    std::vector<std::vector<Letter>> words;
    std::vector<Letter> cur;
    gen_words(cell_letters(tag, weight), weight, depth, cur, 0, 0, words);
    std::vector<std::vector<Letter>> lyndon;
    for (auto& w : words)
        if (is_lyndon(w)) lyndon.push_back(std::move(w));
    std::sort(lyndon.begin(), lyndon.end());
    std::vector<NcPoly> out;
    out.reserve(lyndon.size());
    for (const auto& w : lyndon) out.push_back(standard_bracketing(tag, w));
    return out;
}

namespace {

MembershipReport fail(const char* cond, std::string detail) {
    return {false, cond, std::move(detail)};
}

MembershipReport lq_check_component(const NcPoly& comp) {
    // (i) zero coefficient at b0
    Word b0(Alphabet::B, {Letter::b(0)});
    if (Rational c = comp.coeff(b0); c != 0)
        return fail("i", "coefficient " + to_string(c) + " at b0");
    // (ii) zero coefficients at b0^m b_k with k+m even
    for (const auto& [w, c] : comp.terms()) {
        if (w.depth() != 1) continue;
        BBlocks bl = b_blocks(w);
        if (bl.tail != 0 || bl.mk.size() != 1) continue;
        auto [m, k] = bl.mk[0];
        if ((k + m) % 2 == 0)
            return fail("ii", "coefficient " + to_string(c) + " at " +
                                  to_string(w) + " with k+m even");
    }
    // (iii) primitivity
    PrimitivityReport prim = is_primitive(comp);
    if (!prim.is_primitive) {
        std::string detail = "not primitive";
        if (prim.witness)
            detail += ": pairing " + to_string(prim.witness->pairing) +
                      " against (" + to_string(prim.witness->u) + ", " +
                      to_string(prim.witness->v) + ")";
        else
            detail += ": nonzero constant term";
        return fail("iii", detail);
    }
    // (iv) tau-invariance of pi0
    NcPoly p0 = pi0(comp);
    NcPoly diff = tau(p0) - p0;
    if (!diff.is_zero()) {
        const auto& [w, c] = *diff.terms().begin();
        return fail("iv", "tau(pi0(p)) - pi0(p) has coefficient " + to_string(c) +
                              " at " + to_string(w));
    }
    return {true, "", ""};
}

}  // namespace

MembershipReport is_in_lq(const NcPoly& p) {
    NcPoly q = p.alphabet() == Alphabet::Dbi ? from_dbi(p) : p;
    require_alphabet(q, Alphabet::B, "is_in_lq");
    for (const auto& [kd, comp] : bigraded_components(q)) {
        MembershipReport r = lq_check_component(comp);
        if (!r.member) {
            r.detail = "component (" + std::to_string(kd.first) + "," +
                       std::to_string(kd.second) + "): " + r.detail;
            return r;
        }
    }
    return {true, "", ""};
}

MembershipReport is_in_ls(const NcPoly& p) {
    require_alphabet(p, Alphabet::X, "is_in_ls");
    // (i) zero coefficients at x0 and x1
    for (int i : {0, 1}) {
        Word xi(Alphabet::X, {Letter::x(i)});
        if (Rational c = p.coeff(xi); c != 0)
            return fail("i", "coefficient " + to_string(c) + " at " + to_string(xi));
    }
    // (ii) zero coefficient at x0^{m-1} x1 for m even
    for (const auto& [w, c] : p.terms()) {
        if (w.empty() || w.depth() != 1 || w[w.size() - 1].index() != 1) continue;
        if (w.weight() % 2 == 0)
            return fail("ii", "coefficient " + to_string(c) + " at " +
                                  to_string(w) + " of even weight");
    }
    // (iii) primitivity in Q<X>
    PrimitivityReport prim = is_primitive(p);
    if (!prim.is_primitive) {
        std::string detail = "not primitive";
        if (prim.witness)
            detail += ": pairing " + to_string(prim.witness->pairing) +
                      " against (" + to_string(prim.witness->u) + ", " +
                      to_string(prim.witness->v) + ")";
        else
            detail += ": nonzero constant term";
        return fail("iii", detail);
    }
    // (iv) pi_y(p) primitive in Q<Y>
    PrimitivityReport primy = is_primitive(pi_y(p));
    if (!primy.is_primitive) {
        std::string detail = "pi_y image not primitive";
        if (primy.witness)
            detail += ": pairing " + to_string(primy.witness->pairing) +
                      " against (" + to_string(primy.witness->u) + ", " +
                      to_string(primy.witness->v) + ")";
        return fail("iv", detail);
    }
    return {true, "", ""};
}

namespace {

void check_limits(int weight, int depth, const ResourceLimits& limits,
                  const char* what) {
    if (weight > limits.max_weight || depth > limits.max_depth)
        throw ResourceLimitError(
            std::string(what) + ": requested cell (" + std::to_string(weight) +
            "," + std::to_string(depth) + ") exceeds limits (max weight " +
            std::to_string(limits.max_weight) + ", max depth " +
            std::to_string(limits.max_depth) +
            "); override with LQ_MAX_WEIGHT / LQ_MAX_DEPTH");
}

}  // namespace

GradedBasis basis_lq(int weight, int depth, const ResourceLimits& limits) {
    check_limits(weight, depth, limits, "basis_lq");
    GradedBasis gb{Space::lq, weight, depth, {}};
    if (weight < 1 || depth < 1 || depth > weight) return gb;
    std::vector<NcPoly> gens = lyndon_basis(Alphabet::Dbi, weight, depth);
    if (gens.empty()) return gb;

    // (iv') tau_dbi-invariance rows, plus (ii') vanishing coefficients at
    // single letters D_{k,m} with k+m even (bites only in depth 1).
    std::set<Word> words;
    std::vector<NcPoly> conds;
    conds.reserve(gens.size());
    for (const NcPoly& g : gens) conds.push_back(tau_dbi(g) - g);
    for (const NcPoly& q : conds)
        for (const auto& [w, c] : q.terms()) words.insert(w);
    std::vector<Word> even_letters;
    if (depth == 1 && weight % 2 == 0)
        for (const NcPoly& g : gens)
            for (const auto& [w, c] : g.terms()) even_letters.push_back(w);
    std::sort(even_letters.begin(), even_letters.end());
    even_letters.erase(std::unique(even_letters.begin(), even_letters.end()),
                       even_letters.end());

    RationalMatrix m(words.size() + even_letters.size(), gens.size());
    std::size_t row = 0;
    for (const Word& w : words) {
        for (std::size_t j = 0; j < gens.size(); ++j)
            m.at(row, j) = conds[j].coeff(w);
        ++row;
    }
    for (const Word& w : even_letters) {
        for (std::size_t j = 0; j < gens.size(); ++j)
            m.at(row, j) = gens[j].coeff(w);
        ++row;
    }
    for (const auto& v : kernel(m)) {
        NcPoly e(Alphabet::Dbi);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (v[j] != 0) e += v[j] * gens[j];
        gb.basis.push_back(std::move(e));
    }
    return gb;
}

GradedBasis basis_ls(int weight, int depth, const ResourceLimits& limits) {
    check_limits(weight, depth, limits, "basis_ls");
    GradedBasis gb{Space::ls, weight, depth, {}};
    if (weight < 1 || depth < 0 || depth > weight) return gb;
    std::vector<NcPoly> gens = lyndon_basis(Alphabet::X, weight, depth);
    if (gens.empty()) return gb;

    std::vector<std::vector<Rational>> rows;
    auto word_row = [&](const Word& w) {
        std::vector<Rational> r(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) r[j] = gens[j].coeff(w);
        return r;
    };
    // (i) bites only in weight 1
    if (weight == 1) {
        for (int i : {0, 1}) {
            Word xi(Alphabet::X, {Letter::x(i)});
            if (xi.depth() == depth) rows.push_back(word_row(xi));
        }
    }
    // (ii) bites only in depth 1, even weight
    if (depth == 1 && weight % 2 == 0) {
        std::vector<Letter> ls(static_cast<std::size_t>(weight - 1), Letter::x(0));
        ls.push_back(Letter::x(1));
        rows.push_back(word_row(Word(Alphabet::X, std::move(ls))));
    }
    // (iv) shuffle-pairing functionals of the Y projections: accumulate the
    // complementary-split multiplicities of each projected generator.
    std::vector<NcPoly> piy;
    piy.reserve(gens.size());
    for (const NcPoly& g : gens) piy.push_back(pi_y(g));
    std::map<std::pair<Word, Word>, std::vector<Rational>> pair_rows;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (const auto& [w, c] : piy[j].terms()) {
            const std::uint64_t n = w.size();
            if (n < 2) continue;
            const std::uint64_t full = (std::uint64_t{1} << n) - 1;
            for (std::uint64_t mask = 1; mask < full; ++mask) {
                Word u = w.subword(mask);
                Word v = w.subword(full & ~mask);
                if (v < u) std::swap(u, v);
                auto it = pair_rows.find({u, v});
                if (it == pair_rows.end())
                    it = pair_rows
                             .emplace(std::make_pair(std::move(u), std::move(v)),
                                      std::vector<Rational>(gens.size()))
                             .first;
                it->second[j] += c;
            }
        }
    }
    for (auto& [pair, r] : pair_rows) rows.push_back(std::move(r));

    RationalMatrix m(rows.size(), gens.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) m.at(i, j) = rows[i][j];
    for (const auto& v : kernel(m)) {
        NcPoly e(Alphabet::X);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (v[j] != 0) e += v[j] * gens[j];
        gb.basis.push_back(std::move(e));
    }
    return gb;
}

int DimTable::dim(int weight, int depth) const {
    for (const Entry& e : entries)
        if (e.weight == weight && e.depth == depth) return e.dim;
    throw DomainError("cell outside the computed table");
}

DimTable dim_table(Space space, int max_weight, int max_depth,
                   const ResourceLimits& limits) {
    if (max_weight < 0 || max_depth < 0) throw DomainError("negative bounds");
    check_limits(max_weight, max_depth, limits, "dim_table");
    DimTable t{space, max_weight, max_depth, {}};
    for (int k = 0; k <= max_weight; ++k) {
        for (int d = 0; d <= max_depth; ++d) {
            GradedBasis gb = space == Space::lq ? basis_lq(k, d, limits)
                                                : basis_ls(k, d, limits);
            t.entries.push_back({k, d, gb.dim()});
        }
    }
    return t;
}

}  // namespace qlie
