#include "qlie/cli.hpp"

#include <cctype>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlie/brackets.hpp"
#include "qlie/embedding.hpp"
#include "qlie/print.hpp"
#include "qlie/spaces.hpp"

namespace qlie::cli {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }

    long parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a number", pos);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) throw ParseError("number too large", pos);
            ++pos;
        }
        return v;
    }

    Rational parse_rational(bool negative) {
        long num = parse_nat();
        long den = 1;
        std::size_t save = pos;
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip_ws();
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                den = parse_nat();
                if (den == 0) throw ParseError("zero denominator", pos);
            } else {
                pos = save;  // the '/' was not part of a rational
            }
        }
        Rational r(num, den);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    void unify(std::optional<Alphabet>& tag, Alphabet seen, std::size_t where) {
        if (!tag) {
            tag = seen;
        } else if (*tag != seen) {
            throw ParseError("mixed alphabets: " + alphabet_name(*tag) + " and " +
                                 alphabet_name(seen),
                             where);
        }
    }

    // atom := 'b'nat | 'x'(0|1) | 'y'posnat | 'D('nat','nat')'
    //       | 'ad0'['^'posnat]'('word')' ; optional '^'posnat power suffix
    NcPoly parse_atom(std::optional<Alphabet>& tag) {
        skip_ws();
        std::size_t start = pos;
        NcPoly base(Alphabet::B);
        if (s.compare(pos, 3, "ad0") == 0) {
            pos += 3;
            long n = 1;
            if (accept('^')) n = parse_nat();
            expect('(');
            NcPoly inner = parse_word(tag);
            expect(')');
            Alphabet a = tag.value_or(Alphabet::B);
            if (a != Alphabet::B && a != Alphabet::X)
                throw ParseError("ad0 requires the b or x alphabet", start);
            unify(tag, a, start);
            NcPoly zero_letter = NcPoly::monomial(
                Word(a, {a == Alphabet::B ? Letter::b(0) : Letter::x(0)}));
            base = inner;
            for (long i = 0; i < n; ++i) base = commutator(zero_letter, base);
        } else if (s[pos] == 'b') {
            ++pos;
            long v = parse_nat();
            unify(tag, Alphabet::B, start);
            base = NcPoly::monomial(Word(Alphabet::B, {Letter::b(static_cast<int>(v))}));
        } else if (s[pos] == 'x') {
            ++pos;
            long v = parse_nat();
            if (v != 0 && v != 1) throw ParseError("x index must be 0 or 1", start);
            unify(tag, Alphabet::X, start);
            base = NcPoly::monomial(Word(Alphabet::X, {Letter::x(static_cast<int>(v))}));
        } else if (s[pos] == 'y') {
            ++pos;
            long v = parse_nat();
            if (v < 1) throw ParseError("y index must be >= 1", start);
            unify(tag, Alphabet::Y, start);
            base = NcPoly::monomial(Word(Alphabet::Y, {Letter::y(static_cast<int>(v))}));
        } else if (s[pos] == 'D') {
            ++pos;
            expect('(');
            long k = parse_nat();
            expect(',');
            long m = parse_nat();
            expect(')');
            if (k < 1) throw ParseError("D(k,m) requires k >= 1", start);
            unify(tag, Alphabet::Dbi, start);
            base = NcPoly::monomial(Word(
                Alphabet::Dbi, {Letter::dbi(static_cast<int>(k), static_cast<int>(m))}));
        } else {
            throw ParseError("expected a letter", pos);
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            long n = parse_nat();
            if (n < 1) throw ParseError("power must be >= 1", pos);
            NcPoly p = base;
            for (long i = 1; i < n; ++i) p = p * base;
            return p;
        }
        return base;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        if (c == 'b' || c == 'x' || c == 'y' || c == 'D') return true;
        return s.compare(pos, 3, "ad0") == 0;
    }

    NcPoly parse_word(std::optional<Alphabet>& tag) {
        NcPoly p = parse_atom(tag);
        while (at_atom_start()) p = p * parse_atom(tag);
        return p;
    }

    // term := [rational '*'] word | rational
    NcPoly parse_term(std::optional<Alphabet>& tag, bool negative) {
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Rational c = parse_rational(negative);
            if (accept('*')) return c * parse_word(tag);
            NcPoly p(tag.value_or(Alphabet::B));
            p.add_term(Word(p.alphabet()), c);
            return p;
        }
        NcPoly p = parse_word(tag);
        return negative ? -p : p;
    }

    Expr parse_poly() {
        Expr e;
        std::optional<Alphabet> tag;
        bool neg = accept('-');
        NcPoly acc = parse_term(tag, neg);
        while (!eof()) {
            if (accept('+'))
                neg = false;
            else if (accept('-'))
                neg = true;
            else
                throw ParseError("expected '+' or '-'", pos);
            NcPoly t = parse_term(tag, neg);
            if (!tag) {
                acc += t;
            } else {
                // earlier constant-only terms may need retagging
                if (acc.alphabet() != *tag) acc = retag_constant(acc, *tag);
                if (t.alphabet() != *tag) t = retag_constant(t, *tag);
                acc += t;
            }
        }
        e.poly = acc;
        e.tag = tag;
        return e;
    }

    static NcPoly retag_constant(const NcPoly& p, Alphabet tag) {
        NcPoly r(tag);
        for (const auto& [w, c] : p.terms()) {
            if (!w.empty()) throw DomainError("cannot retag a non-constant");
            r.add_term(Word(tag), c);
        }
        return r;
    }
};

NcPoly adopt(const Expr& e, Alphabet tag) {
    if (!e.tag) return Parser::retag_constant(e.poly, tag);
    return e.poly;
}

// Picks the common alphabet of two expressions, letting constants follow.
Alphabet unify_tags(const Expr& a, const Expr& b, Alphabet fallback) {
    if (a.tag && b.tag) {
        if (*a.tag != *b.tag)
            throw DomainError("alphabet mismatch: " + alphabet_name(*a.tag) +
                              " vs " + alphabet_name(*b.tag));
        return *a.tag;
    }
    if (a.tag) return *a.tag;
    if (b.tag) return *b.tag;
    return fallback;
}

}  // namespace

Expr parse_expr(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw ParseError("empty expression", 0);
    Expr e = p.parse_poly();
    return e;
}

std::string print(const NcPoly& p) { return to_string(p); }
std::string print(const Bimould& a) { return to_string(a); }

namespace {

// Dbi results computed from b-alphabet inputs print in the b alphabet
// unless --as dbi is passed.
std::string render(const NcPoly& p, Alphabet input_tag, const std::string& as) {
    if (p.alphabet() == Alphabet::Dbi &&
        (as == "b" || (as.empty() && input_tag == Alphabet::B)))
        return to_string(from_dbi(p));
    if (p.alphabet() == Alphabet::B && as == "dbi") return to_string(to_dbi(p));
    return to_string(p);
}

NcPoly as_dbi(const NcPoly& p) {
    return p.alphabet() == Alphabet::Dbi ? p : to_dbi(p);
}

int run_checked(int argc, const char* const* argv, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact-arithmetic computer algebra for the bigraded Lie "
                 "algebras lq and ls"};
    app.require_subcommand(1);

    std::string p_text, q_text, type, name, space, format = "csv", as;
    int weight = 0, depth = 0, max_weight = 0, max_depth = 0;

    CLI::App* sh = app.add_subcommand("shuffle", "shuffle product of two polynomials");
    sh->add_option("P", p_text)->required();
    sh->add_option("Q", q_text)->required();

    CLI::App* st = app.add_subcommand(
        "stuffle", "balanced quasi-shuffle product (b alphabet)");
    st->add_option("P", p_text)->required();
    st->add_option("Q", q_text)->required();

    CLI::App* br = app.add_subcommand("bracket", "Lie brackets");
    br->add_option("--type", type, "A | ihara | ari")->required();
    br->add_option("P", p_text)->required();
    br->add_option("Q", q_text)->required();
    br->add_option("--as", as, "render b-alphabet results as: b | dbi")
        ->check(CLI::IsMember({"b", "dbi"}));

    CLI::App* mp = app.add_subcommand("map", "apply a named linear map");
    mp->add_option("--name", name,
                   "tau|pi0|sec|rho|S0|taudbi|delta|grD|piY|thetaX|thetaY|theta|beta")
        ->required();
    mp->add_option("P", p_text)->required();
    mp->add_option("--as", as, "render results as: b | dbi")
        ->check(CLI::IsMember({"b", "dbi"}));

    CLI::App* mb = app.add_subcommand("member", "membership in lq or ls");
    mb->add_option("--space", space, "lq | ls")->required();
    mb->add_option("P", p_text)->required();

    CLI::App* bs = app.add_subcommand("basis", "basis of one bigraded cell");
    bs->add_option("--space", space, "lq | ls")->required();
    bs->add_option("--weight", weight)->required();
    bs->add_option("--depth", depth)->required();
    bs->add_option("--as", as, "render lq basis vectors as: b | dbi")
        ->check(CLI::IsMember({"b", "dbi"}));

    CLI::App* dm = app.add_subcommand("dims", "dimension table sweep");
    dm->add_option("--space", space, "lq | ls")->required();
    dm->add_option("--max-weight", max_weight)->required();
    dm->add_option("--max-depth", max_depth)->required();
    dm->add_option("--format", format, "json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return 2;
    }

    if (sh->parsed()) {
        Expr p = parse_expr(p_text), q = parse_expr(q_text);
        Alphabet tag = unify_tags(p, q, Alphabet::B);
        out << to_string(shuffle(adopt(p, tag), adopt(q, tag))) << "\n";
    } else if (st->parsed()) {
        Expr p = parse_expr(p_text), q = parse_expr(q_text);
        Alphabet tag = unify_tags(p, q, Alphabet::B);
        out << to_string(balanced_quasi_shuffle(adopt(p, tag), adopt(q, tag)))
            << "\n";
    } else if (br->parsed()) {
        Expr p = parse_expr(p_text), q = parse_expr(q_text);
        if (type == "A") {
            Alphabet tag = unify_tags(p, q, Alphabet::B);
            NcPoly r = bracket_a(adopt(p, tag), adopt(q, tag));
            out << render(r, tag, as) << "\n";
        } else if (type == "ihara") {
            Alphabet tag = unify_tags(p, q, Alphabet::X);
            if (tag != Alphabet::X)
                throw DomainError("the ihara bracket needs the x alphabet");
            out << to_string(ihara_bracket(adopt(p, tag), adopt(q, tag))) << "\n";
        } else if (type == "ari") {
            Alphabet tag = unify_tags(p, q, Alphabet::Dbi);
            NcPoly pd = as_dbi(adopt(p, tag));
            NcPoly qd = as_dbi(adopt(q, tag));
            out << to_string(ari(beta(pd), beta(qd))) << "\n";
        } else {
            err << "usage error: unknown bracket type '" << type << "'\n";
            return 2;
        }
    } else if (mp->parsed()) {
        Expr pe = parse_expr(p_text);
        auto need = [&](Alphabet tag) { return adopt(pe, tag); };
        Alphabet in = pe.tag.value_or(Alphabet::B);
        if (name == "tau") {
            out << to_string(tau(need(Alphabet::B))) << "\n";
        } else if (name == "pi0") {
            out << to_string(pi0(need(Alphabet::B))) << "\n";
        } else if (name == "sec") {
            out << to_string(sec(need(Alphabet::B))) << "\n";
        } else if (name == "rho") {
            out << to_string(rho(need(Alphabet::B))) << "\n";
        } else if (name == "S0") {
            out << to_string(antipode0(need(Alphabet::B))) << "\n";
        } else if (name == "taudbi") {
            NcPoly r = tau_dbi(as_dbi(need(in)));
            out << render(r, in, as) << "\n";
        } else if (name == "delta") {
            NcPoly r = delta(as_dbi(need(in)));
            out << render(r, in, as) << "\n";
        } else if (name == "grD") {
            out << to_string(gr_depth(need(in))) << "\n";
        } else if (name == "piY") {
            out << to_string(pi_y(need(Alphabet::X))) << "\n";
        } else if (name == "thetaX") {
            out << to_string(theta_x(need(Alphabet::X))) << "\n";
        } else if (name == "thetaY") {
            out << to_string(theta_y(need(Alphabet::Y))) << "\n";
        } else if (name == "theta") {
            out << to_string(theta(need(Alphabet::X))) << "\n";
        } else if (name == "beta") {
            out << to_string(beta(as_dbi(need(in)))) << "\n";
        } else {
            err << "usage error: unknown map '" << name << "'\n";
            return 2;
        }
    } else if (mb->parsed()) {
        Expr pe = parse_expr(p_text);
        MembershipReport rep;
        if (space == "lq") {
            rep = is_in_lq(adopt(pe, pe.tag.value_or(Alphabet::B)));
        } else if (space == "ls") {
            rep = is_in_ls(adopt(pe, Alphabet::X));
        } else {
            err << "usage error: unknown space '" << space << "'\n";
            return 2;
        }
        if (rep.member) {
            out << "true\n";
        } else {
            out << "false\n";
            out << "condition (" << rep.condition << "): " << rep.detail << "\n";
        }
    } else if (bs->parsed()) {
        if (space != "lq" && space != "ls") {
            err << "usage error: unknown space '" << space << "'\n";
            return 2;
        }
        GradedBasis gb = space == "lq" ? basis_lq(weight, depth)
                                       : basis_ls(weight, depth);
        out << "dim " << gb.dim() << "\n";
        for (const NcPoly& e : gb.basis) {
            if (space == "lq" && as == "b")
                out << to_string(from_dbi(e)) << "\n";
            else
                out << to_string(e) << "\n";
        }
    } else if (dm->parsed()) {
        if (space != "lq" && space != "ls") {
            err << "usage error: unknown space '" << space << "'\n";
            return 2;
        }
        DimTable t = dim_table(space == "lq" ? Space::lq : Space::ls, max_weight,
                               max_depth);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["space"] = space;
            j["entries"] = nlohmann::ordered_json::array();
            for (const auto& e : t.entries) {
                nlohmann::ordered_json cell;
                cell["weight"] = e.weight;
                cell["depth"] = e.depth;
                cell["dim"] = e.dim;
                j["entries"].push_back(cell);
            }
            out << j.dump() << "\n";
        } else if (format == "csv") {
            out << "weight,depth,dim\n";
            for (const auto& e : t.entries)
                out << e.weight << "," << e.depth << "," << e.dim << "\n";
        } else {
            err << "usage error: unknown format '" << format << "'\n";
            return 2;
        }
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return run_checked(argc, argv, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qlie::cli
