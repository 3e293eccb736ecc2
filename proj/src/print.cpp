#include "qlie/print.hpp"

#include <sstream>

namespace qlie {

namespace {

std::string letter_str(const Letter& l) {
    switch (l.alphabet()) {
        case Alphabet::B: return "b" + std::to_string(l.index());
        case Alphabet::X: return "x" + std::to_string(l.index());
        case Alphabet::Y: return "y" + std::to_string(l.index());
        case Alphabet::Dbi:
            return "D(" + std::to_string(l.index()) + "," +
                   std::to_string(l.ad_power()) + ")";
    }
    return "?";
}

}  // namespace

std::string to_string(const Word& w) {
    std::string s;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!s.empty()) s += ' ';
        s += letter_str(w[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string to_string(const NcPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (w.empty()) {
            s += to_string(a);
        } else if (a == 1) {
            s += to_string(w);
        } else {
            s += to_string(a) + " * " + to_string(w);
        }
        first = false;
    }
    return s;
}

namespace {

std::string monomial_str(int depth, const std::vector<int>& e) {
    std::string s;
    for (int i = 0; i < depth; ++i) {
        for (int part = 0; part < 2; ++part) {
            int exp = e[2 * i + part];
            if (exp == 0) continue;
            if (!s.empty()) s += ' ';
            s += (part == 0 ? "X" : "Y") + std::to_string(i + 1);
            if (exp > 1) s += "^" + std::to_string(exp);
        }
    }
    return s;
}

}  // namespace

std::string to_string(const Bimould& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first_comp = true;
    for (const auto& [d, comp] : a.components()) {
        if (!first_comp) os << "\n";
        first_comp = false;
        os << "[" << d << "] ";
        bool first = true;
        for (auto it = comp.terms().rbegin(); it != comp.terms().rend(); ++it) {
            const auto& [e, c] = *it;
            Rational x = c;
            if (first) {
                if (x < 0) {
                    os << "-";
                    x = -x;
                }
            } else {
                os << (x < 0 ? " - " : " + ");
                if (x < 0) x = -x;
            }
            std::string mon = monomial_str(d, e);
            if (mon.empty()) {
                os << to_string(x);
            } else if (x == 1) {
                os << mon;
            } else {
                os << to_string(x) << " * " << mon;
            }
            first = false;
        }
    }
    return os.str();
}

}  // namespace qlie
