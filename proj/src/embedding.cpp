#include "qlie/embedding.hpp"

namespace qlie {

NcPoly pi_y(const NcPoly& p) {
    require_alphabet(p, Alphabet::X, "pi_y");
    NcPoly r(Alphabet::Y);
    for (const auto& [w, c] : p.terms()) {
        if (!w.empty() && w[w.size() - 1].index() == 0) continue;
        std::vector<Letter> ys;
        int run = 0;
        for (const Letter& l : w) {
            if (l.index() == 0) {
                ++run;
            } else {
                ys.push_back(Letter::y(run + 1));
                run = 0;
            }
        }
        r.add_term(Word(Alphabet::Y, std::move(ys)), c);
    }
    return r;
}

NcPoly theta_x(const NcPoly& p) {
    require_alphabet(p, Alphabet::X, "theta_x");
    NcPoly r(Alphabet::B);
    for (const auto& [w, c] : p.terms()) {
        std::vector<Letter> bs;
        bs.reserve(w.size());
        for (const Letter& l : w) bs.push_back(Letter::b(l.index()));
        r.add_term(Word(Alphabet::B, std::move(bs)), c);
    }
    return r;
}

NcPoly theta_y(const NcPoly& p) {
    require_alphabet(p, Alphabet::Y, "theta_y");
    NcPoly r(Alphabet::B);
    for (const auto& [w, c] : p.terms()) {
        std::vector<Letter> bs;
        bs.reserve(w.size());
        for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
            bs.push_back(Letter::b(it->index()));
        r.add_term(Word(Alphabet::B, std::move(bs)), c);
    }
    return r;
}

NcPoly theta(const NcPoly& p) { return theta_x(p) + theta_y(pi_y(p)); }

}  // namespace qlie
