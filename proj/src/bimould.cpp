#include "qlie/bimould.hpp"

#include <algorithm>

namespace qlie {

CommPoly CommPoly::constant(int depth, Rational c) {
    CommPoly p(depth);
    p.add_term(std::vector<int>(2 * depth, 0), c);
    return p;
}

CommPoly CommPoly::variable(int depth, char kind, int i, Rational c) {
    if (i < 1 || i > depth) throw DomainError("variable index out of range");
    CommPoly p(depth);
    std::vector<int> e(2 * depth, 0);
    e[2 * (i - 1) + (kind == 'x' ? 0 : 1)] = 1;
    p.add_term(e, c);
    return p;
}

void CommPoly::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != 2 * depth_)
        throw DomainError("exponent vector length does not match depth");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational CommPoly::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

CommPoly& CommPoly::operator+=(const CommPoly& q) {
    if (q.depth_ != depth_) throw DomainError("depth mismatch in CommPoly add");
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

CommPoly operator*(const CommPoly& p, const CommPoly& q) {
    if (p.depth_ != q.depth_) throw DomainError("depth mismatch in CommPoly mul");
    CommPoly r(p.depth_);
    std::vector<int> e(2 * p.depth_);
    for (const auto& [e1, c1] : p.terms_) {
        for (const auto& [e2, c2] : q.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

CommPoly CommPoly::substitute(const std::vector<CommPoly>& x_args,
                              const std::vector<CommPoly>& y_args,
                              int target_depth) const {
    if (static_cast<int>(x_args.size()) != depth_ ||
        static_cast<int>(y_args.size()) != depth_)
        throw DomainError("substitution arity does not match depth");
    // Lazily extended power tables, one per substituted variable.
    std::vector<std::vector<CommPoly>> pow_x(depth_), pow_y(depth_);
    auto power = [&](std::vector<CommPoly>& tab, const CommPoly& base, int n)
        -> const CommPoly& {
        if (tab.empty()) tab.push_back(CommPoly::constant(target_depth, 1));
        while (static_cast<int>(tab.size()) <= n) tab.push_back(tab.back() * base);
        return tab[static_cast<std::size_t>(n)];
    };
    CommPoly r(target_depth);
    for (const auto& [e, c] : terms_) {
        CommPoly t = CommPoly::constant(target_depth, c);
        for (int i = 0; i < depth_; ++i) {
            if (e[2 * i] > 0) t = t * power(pow_x[i], x_args[i], e[2 * i]);
            if (e[2 * i + 1] > 0) t = t * power(pow_y[i], y_args[i], e[2 * i + 1]);
        }
        r += t;
    }
    return r;
}

const CommPoly Bimould::component(int d) const {
    auto it = comps_.find(d);
    return it == comps_.end() ? CommPoly(d) : it->second;
}

void Bimould::set_component(int d, CommPoly p) {
    if (p.depth() != d) throw DomainError("component depth mismatch");
    if (p.is_zero())
        comps_.erase(d);
    else
        comps_.insert_or_assign(d, std::move(p));
}

Bimould& Bimould::operator+=(const Bimould& b) {
    for (const auto& [d, comp] : b.comps_) {
        CommPoly s = component(d);
        s += comp;
        set_component(d, std::move(s));
    }
    return *this;
}

Bimould& Bimould::operator-=(const Bimould& b) {
    for (const auto& [d, comp] : b.comps_) {
        CommPoly s = component(d);
        s += comp * Rational(-1);
        set_component(d, std::move(s));
    }
    return *this;
}

Bimould beta(const NcPoly& p) {
    require_alphabet(p, Alphabet::Dbi, "beta");
    Bimould a;
    for (const auto& [w, c] : p.terms()) {
        const int d = static_cast<int>(w.size());
        if (d == 0) continue;
        std::vector<int> e;
        e.reserve(2 * w.size());
        for (const Letter& l : w) {
            e.push_back(l.index() - 1);
            e.push_back(l.ad_power());
        }
        CommPoly comp = a.component(d);
        comp.add_term(e, c);
        a.set_component(d, std::move(comp));
    }
    return a;
}

NcPoly coefficient_poly(const Bimould& a) {
    NcPoly p(Alphabet::Dbi);
    for (const auto& [d, comp] : a.components()) {
        if (d == 0) continue;
        for (const auto& [e, c] : comp.terms()) {
            std::vector<Letter> ls;
            for (int i = 0; i < d; ++i)
                ls.push_back(Letter::dbi(e[2 * i] + 1, e[2 * i + 1]));
            p.add_term(Word(Alphabet::Dbi, std::move(ls)), c);
        }
    }
    return p;
}

Bimould mu(const Bimould& a, const Bimould& b) {
    Bimould r;
    const int maxd = a.max_depth() + b.max_depth();
    for (int d = 0; d <= maxd; ++d) {
        CommPoly comp(d);
        for (const auto& [i, ca] : a.components()) {
            if (i > d) continue;
            auto it = b.components().find(d - i);
            if (it == b.components().end()) continue;
            // the b factor occupies variable slots i+1..d
            std::vector<int> e(2 * d);
            for (const auto& [e1, c1] : ca.terms()) {
                for (const auto& [e2, c2] : it->second.terms()) {
                    std::copy(e1.begin(), e1.end(), e.begin());
                    std::copy(e2.begin(), e2.end(), e.begin() + e1.size());
                    comp.add_term(e, c1 * c2);
                }
            }
        }
        r.set_component(d, std::move(comp));
    }
    return r;
}

namespace {

CommPoly var(int depth, char kind, int i) {
    return CommPoly::variable(depth, kind, i);
}

// Y_{lo} + ... + Y_{hi} in depth d.
CommPoly y_sum(int d, int lo, int hi) {
    CommPoly r(d);
    for (int t = lo; t <= hi; ++t) r += var(d, 'y', t);
    return r;
}

// X_i - X_j in depth d; j = 0 means just X_i.
CommPoly x_diff(int d, int i, int j) {
    CommPoly r = var(d, 'x', i);
    if (j >= 1) r += var(d, 'x', j) * Rational(-1);
    return r;
}

}  // namespace

Bimould swap(const Bimould& a) {
    Bimould r;
    for (const auto& [d, comp] : a.components()) {
        if (d == 0) {
            r.set_component(0, comp);
            continue;
        }
        std::vector<CommPoly> xs, ys;
        for (int j = 1; j <= d; ++j) {
            xs.push_back(y_sum(d, d - j + 1, d));
            ys.push_back(j < d ? x_diff(d, d + 1 - j, d - j) : var(d, 'x', 1));
        }
        r.set_component(d, comp.substitute(xs, ys, d));
    }
    return r;
}

Bimould arit(const Bimould& b, const Bimould& a) {
    Bimould r;
    const int maxd = a.max_depth() + b.max_depth();
    for (int d = 1; d <= maxd; ++d) {
        CommPoly comp(d);
        for (int j = 1; j <= d; ++j) {
            for (int i = 1; i <= d - j; ++i) {
                auto ita = a.components().find(d - j);
                auto itb = b.components().find(j);
                if (ita == a.components().end() || itb == b.components().end())
                    continue;
                std::vector<CommPoly> bx1, by1, bx2, by2;
                for (int t = 1; t <= j; ++t) {
                    bx1.push_back(x_diff(d, i + t, i));
                    by1.push_back(var(d, 'y', i + t));
                    bx2.push_back(x_diff(d, i + t - 1, i + j));
                    by2.push_back(var(d, 'y', i + t - 1));
                }
                std::vector<CommPoly> ax1, ax2, ay;
                for (int t = 1; t < i; ++t) {
                    ax1.push_back(var(d, 'x', t));
                    ax2.push_back(var(d, 'x', t));
                    ay.push_back(var(d, 'y', t));
                }
                ax1.push_back(var(d, 'x', i));
                ax2.push_back(var(d, 'x', i + j));
                ay.push_back(y_sum(d, i, i + j));
                for (int t = i + j + 1; t <= d; ++t) {
                    ax1.push_back(var(d, 'x', t));
                    ax2.push_back(var(d, 'x', t));
                    ay.push_back(var(d, 'y', t));
                }
                comp += ita->second.substitute(ax1, ay, d) *
                        itb->second.substitute(bx1, by1, d);
                comp += ita->second.substitute(ax2, ay, d) *
                        itb->second.substitute(bx2, by2, d) * Rational(-1);
            }
        }
        r.set_component(d, std::move(comp));
    }
    return r;
}

Bimould ari(const Bimould& a, const Bimould& b) {
    return arit(a, b) - arit(b, a) + mu(a, b) - mu(b, a);
}

Bimould delta(const Bimould& a) {
    Bimould r;
    for (const auto& [d, comp] : a.components()) {
        if (d == 0) continue;
        CommPoly nc(d);
        for (const auto& [e, c] : comp.terms()) {
            for (int i = 0; i < d; ++i) {
                std::vector<int> e2 = e;
                ++e2[2 * i];
                ++e2[2 * i + 1];
                nc.add_term(e2, c);
            }
        }
        r.set_component(d, std::move(nc));
    }
    return r;
}

AlternalityReport is_alternal(const Bimould& a) {
    PrimitivityReport rep = is_primitive(coefficient_poly(a));
    return {rep.is_primitive, rep.witness};
}

SwapInvarianceReport is_swap_invariant(const Bimould& a) {
    Bimould s = swap(a);
    if (s == a) return {true, std::nullopt};
    Bimould diff = s - a;
    const auto& [d, comp] = *diff.components().begin();
    return {false, std::make_pair(d, comp.terms().begin()->first)};
}

}  // namespace qlie
