#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlie/bimould.hpp"
#include "qlie/brackets.hpp"
#include "qlie/cli.hpp"
#include "qlie/embedding.hpp"
#include "qlie/print.hpp"
#include "qlie/spaces.hpp"

namespace py = pybind11;
using namespace qlie;

namespace {

NcPoly parse(const std::string& text) {
    cli::Expr e = cli::parse_expr(text);
    return e.poly;  // constants default to the b alphabet
}

Side side_of(const std::string& s) {
    if (s == "left") return Side::left;
    if (s == "right") return Side::right;
    if (s == "both") return Side::both;
    throw DomainError("side must be left, right or both");
}

Alphabet alphabet_of(const std::string& s) {
    if (s == "b") return Alphabet::B;
    if (s == "x") return Alphabet::X;
    if (s == "y") return Alphabet::Y;
    if (s == "dbi") return Alphabet::Dbi;
    throw DomainError("alphabet must be b, x, y or dbi");
}

py::tuple report_tuple(const MembershipReport& r) {
    return py::make_tuple(r.member, r.condition, r.detail);
}

}  // namespace

PYBIND11_MODULE(qlie, m) {
    m.doc() = "exact-arithmetic computer algebra for the bigraded Lie algebras "
              "lq and ls";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<NcPoly>(m, "NcPoly")
        .def("__str__", [](const NcPoly& p) { return to_string(p); })
        .def("__repr__",
             [](const NcPoly& p) { return "NcPoly(\"" + to_string(p) + "\")"; })
        .def("__eq__", [](const NcPoly& p, const NcPoly& q) { return p == q; })
        .def("__add__", [](const NcPoly& p, const NcPoly& q) { return p + q; })
        .def("__sub__", [](const NcPoly& p, const NcPoly& q) { return p - q; })
        .def("__mul__", [](const NcPoly& p, const NcPoly& q) { return p * q; })
        .def("__rmul__", [](const NcPoly& p, long c) { return Rational(c) * p; })
        .def("__neg__", [](const NcPoly& p) { return -p; })
        .def("is_zero", &NcPoly::is_zero)
        .def("term_count", &NcPoly::term_count)
        .def("alphabet", [](const NcPoly& p) {
            switch (p.alphabet()) {
                case Alphabet::B: return "b";
                case Alphabet::X: return "x";
                case Alphabet::Y: return "y";
                case Alphabet::Dbi: return "dbi";
            }
            return "?";
        })
        .def("weight_depth_support", [](const NcPoly& p) {
            std::vector<std::pair<int, int>> out;
            for (const auto& [kd, comp] : bigraded_components(p)) out.push_back(kd);
            return out;
        })
        .def("coeff", [](const NcPoly& p, const std::string& word) {
            NcPoly q = parse(word);
            if (q.term_count() != 1 || q.terms().begin()->second != 1)
                throw DomainError("coeff expects a single monic word");
            return to_string(p.coeff(q.terms().begin()->first));
        });

    py::class_<Bimould>(m, "Bimould")
        .def("__str__", [](const Bimould& a) { return to_string(a); })
        .def("__repr__", [](const Bimould& a) { return to_string(a); })
        .def("__eq__", [](const Bimould& a, const Bimould& b) { return a == b; })
        .def("is_zero", &Bimould::is_zero)
        .def("max_depth", &Bimould::max_depth);

    m.def("parse", &parse, py::arg("text"),
          "parse an expression; letters b<n>, x0/x1, y<n>, D(k,m), sugar "
          "ad0^n(...)");

    // products
    m.def("shuffle", &shuffle);
    m.def("stuffle", &balanced_quasi_shuffle);
    m.def("concat", [](const NcPoly& p, const NcPoly& q) { return p * q; });
    m.def("gr_d", &gr_depth);

    // hopf maps
    m.def("tau", &tau);
    m.def("pi0", &pi0);
    m.def("sec", &sec);
    m.def("partial0", &partial0);
    m.def("rho", &rho);
    m.def("antipode", &antipode);
    m.def("s0", &antipode0);
    m.def("from_dbi", &from_dbi);
    m.def("to_dbi", &to_dbi);
    m.def("tau_dbi", &tau_dbi);
    m.def("is_primitive", [](const NcPoly& p) -> py::tuple {
        PrimitivityReport r = is_primitive(p);
        if (r.witness)
            return py::make_tuple(r.is_primitive, to_string(r.witness->u),
                                  to_string(r.witness->v),
                                  to_string(r.witness->pairing));
        return py::make_tuple(r.is_primitive, py::none(), py::none(), py::none());
    });

    // brackets and derivations
    m.def("der_a", [](const NcPoly& w, const std::string& side, const NcPoly& t) {
        return der_a(w, side_of(side), t);
    });
    m.def("bracket_a", &bracket_a);
    m.def("der_a0", [](const NcPoly& w, const std::string& side, const NcPoly& v) {
        return der_a0(w, side_of(side), v);
    });
    m.def("mul0", &mul0);
    m.def("bracket_a0", &bracket_a0);
    m.def("ihara_bracket", &ihara_bracket);
    m.def("delta", [](const NcPoly& p) { return delta(p); });
    m.def("delta", [](const Bimould& a) { return delta(a); });

    // embedding
    m.def("pi_y", &pi_y);
    m.def("theta_x", &theta_x);
    m.def("theta_y", &theta_y);
    m.def("theta", &theta);

    // bimoulds
    m.def("beta", &beta);
    m.def("coefficient_poly", &coefficient_poly);
    m.def("mu", &mu);
    m.def("swap", [](const Bimould& a) { return qlie::swap(a); });
    m.def("arit", &arit);
    m.def("ari", &ari);
    m.def("is_alternal", [](const Bimould& a) -> py::tuple {
        AlternalityReport r = is_alternal(a);
        if (r.witness)
            return py::make_tuple(r.alternal, to_string(r.witness->u),
                                  to_string(r.witness->v));
        return py::make_tuple(r.alternal, py::none(), py::none());
    });
    m.def("is_swap_invariant",
          [](const Bimould& a) { return is_swap_invariant(a).swap_invariant; });

    // spaces
    m.def("lyndon_basis", [](const std::string& alphabet, int k, int d) {
        return lyndon_basis(alphabet_of(alphabet), k, d);
    });
    m.def("is_in_lq", [](const NcPoly& p) { return report_tuple(is_in_lq(p)); });
    m.def("is_in_ls", [](const NcPoly& p) { return report_tuple(is_in_ls(p)); });
    m.def("basis", [](const std::string& space, int k, int d) {
        if (space == "lq") return basis_lq(k, d).basis;
        if (space == "ls") return basis_ls(k, d).basis;
        throw DomainError("space must be lq or ls");
    });
    m.def("dims", [](const std::string& space, int max_weight, int max_depth) {
        DimTable t = dim_table(space == "lq" ? Space::lq : Space::ls, max_weight,
                               max_depth);
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& e : t.entries) out.emplace_back(e.weight, e.depth, e.dim);
        return out;
    });
}
