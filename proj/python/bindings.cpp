#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "../tools/cli.hpp"
#include "cedga/analysis.hpp"
#include "cedga/catalog.hpp"
#include "cedga/dsl.hpp"
#include "cedga/obstruct.hpp"

namespace py = pybind11;
using namespace cedga;

namespace {

struct PyPresentation {
    PresentationPtr p;
};

struct PyBundle {
    std::shared_ptr<const CatalogBundle> b;
};

CoeffRing ring_from_name(const std::string& s)
{
    if (s == "Q")
        return CoeffRing::rationals();
    if (s == "GF2")
        return CoeffRing::gf2();
    if (s.rfind("laurent(", 0) == 0 && s.back() == ')') {
        std::vector<std::string> params;
        std::stringstream ss(s.substr(8, s.size() - 9));
        for (std::string p; std::getline(ss, p, ',');)
            params.push_back(p);
        return CoeffRing::laurent(params);
    }
    throw InvalidArgument("unknown ring '" + s + "'");
}

Bounds make_bounds(int max_len, int max_level, int degree_bound)
{
    return Bounds{max_len, max_level, degree_bound};
}

std::optional<Parity> parity_arg(const std::optional<std::string>& s)
{
    if (!s)
        return std::nullopt;
    if (*s == "even")
        return Parity::Even;
    if (*s == "odd")
        return Parity::Odd;
    throw InvalidArgument("parity must be 'even' or 'odd'");
}

py::dict exactness_dict(const Presentation& P, const ExactnessResult& r)
{
    py::dict d;
    bool w = r.verdict == ExactVerdict::Witness;
    d["verdict"] = w ? "witness" : "none_within_bounds";
    d["target"] = P.to_string(r.target);
    d["witness"] = w ? py::object(py::str(P.to_string(r.witness))) : py::object(py::none());
    d["parity"] = r.parity ? py::object(py::str(to_string(*r.parity))) : py::object(py::none());
    d["candidates"] = r.candidates;
    d["rank"] = r.rank;
    d["length_histogram"] = r.length_histogram;
    return d;
}

py::list generator_list(const Presentation& P)
{
    py::list out;
    for (const auto& g : P.generators()) {
        py::dict d;
        d["name"] = g.name;
        d["degree"] = g.degree;
        d["source"] = P.idempotents()[g.source].label;
        d["target"] = P.idempotents()[g.target].label;
        d["role"] = g.role == ChordRole::Long ? "long" : "short";
        d["link"] = g.link;
        d["level"] = g.level ? py::object(py::int_(*g.level)) : py::object(py::none());
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_cedga, m)
{
    m.doc() = "Free dg-algebras over idempotents";

    auto& base = py::register_exception<Error>(m, "CedgaError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<PyPresentation>(m, "Presentation")
        .def_property_readonly("ring", [](const PyPresentation& s) { return s.p->ring().to_string(); })
        .def_property_readonly("idempotents",
                               [](const PyPresentation& s) {
                                   std::vector<std::string> out;
                                   for (const auto& e : s.p->idempotents())
                                       out.push_back(e.label);
                                   return out;
                               })
        .def_property_readonly("generators", [](const PyPresentation& s) { return generator_list(*s.p); })
        .def(
            "differential",
            [](const PyPresentation& s, const std::string& g) -> std::optional<std::string> {
                const auto& d = s.p->differential(s.p->generator_id(g));
                if (!d)
                    return std::nullopt;
                return s.p->to_string(*d);
            },
            py::arg("generator"))
        .def(
            "d",
            [](const PyPresentation& s, const std::string& x) {
                return s.p->to_string(apply_differential(*s.p, parse_element(x, *s.p)));
            },
            py::arg("element"), "d of an element written in the text syntax")
        .def("to_text",
             [](const PyPresentation& s) {
                 CatalogBundle b;
                 b.presentations.push_back({"main", s.p});
                 return serialize(b);
             })
        .def("__repr__", [](const PyPresentation& s) {
            return "<Presentation " + std::to_string(s.p->generators().size()) + " generators over " +
                   s.p->ring().to_string() + ">";
        });

    py::class_<PyBundle>(m, "Bundle")
        .def_property_readonly("presentations",
                               [](const PyBundle& s) {
                                   std::vector<std::string> out;
                                   for (const auto& p : s.b->presentations)
                                       out.push_back(p.name);
                                   return out;
                               })
        .def_property_readonly("maps",
                               [](const PyBundle& s) {
                                   std::vector<std::string> out;
                                   for (const auto& x : s.b->maps)
                                       out.push_back(x.name);
                                   return out;
                               })
        .def_property_readonly("augmentations",
                               [](const PyBundle& s) {
                                   std::vector<std::string> out;
                                   for (const auto& x : s.b->augmentations)
                                       out.push_back(x.name);
                                   return out;
                               })
        .def_property_readonly("notes", [](const PyBundle& s) { return s.b->notes; })
        .def(
            "presentation",
            [](const PyBundle& s, std::optional<std::string> name) {
                if (!name) {
                    if (s.b->presentations.empty())
                        throw InvalidArgument("bundle has no presentation");
                    return PyPresentation{s.b->presentations.front().presentation};
                }
                return PyPresentation{s.b->presentation_ptr(*name)};
            },
            py::arg("name") = py::none())
        .def(
            "verify_map",
            [](const PyBundle& s, const std::string& name) {
                const DgMap& phi = s.b->map(name);
                auto rep = verify_chain_map(phi);
                py::dict d;
                d["ok"] = rep.ok();
                py::list fails;
                for (const auto& f : rep.failures)
                    fails.append(py::make_tuple(f.generator, phi.target().to_string(f.residual)));
                d["failures"] = fails;
                d["degree_violations"] = rep.degree_violations;
                d["unassigned"] = rep.unassigned;
                return d;
            },
            py::arg("name"))
        .def(
            "verify_augmentation",
            [](const PyBundle& s, const std::string& name) {
                const Augmentation& a = s.b->augmentation(name);
                auto rep = verify_augmentation(a);
                py::dict d;
                d["ok"] = rep.ok();
                py::list fails;
                for (const auto& f : rep.failures)
                    fails.append(py::make_tuple(f.generator, f.residual.to_string(a.source().ring())));
                d["failures"] = fails;
                d["scope_violations"] = rep.scope_violations;
                return d;
            },
            py::arg("name"))
        .def(
            "linearize",
            [](const PyBundle& s, const std::string& aug) {
                const Augmentation& a = s.b->augmentation(aug);
                return PyPresentation{std::make_shared<Presentation>(partial_linearize(a.source(), a))};
            },
            py::arg("augmentation"))
        .def(
            "obstruct",
            [](const PyBundle& s, const std::string& map, int max_len, int max_level) {
                const DgMap& phi = s.b->map(map);
                auto rep = obstruct_y_filling(phi.source(), phi.target(), phi, make_bounds(max_len, max_level, 8));
                py::dict d;
                d["verdict"] = to_string(rep.verdict);
                d["transcript"] = rep.transcript;
                if (rep.verdict == ObstructionVerdict::Obstructed) {
                    d["decisive_generator"] = rep.decisive_generator;
                    d["certificate"] = exactness_dict(phi.target(), rep.certificate);
                }
                else
                    d["blocking"] = rep.blocking;
                return d;
            },
            py::arg("map"), py::arg("max_len") = 6, py::arg("max_level") = 2)
        .def("to_text", [](const PyBundle& s) { return serialize(*s.b); });

    m.def(
        "parse", [](const std::string& text) { return PyBundle{std::make_shared<CatalogBundle>(parse(text))}; },
        py::arg("text"), "Parses a .cedga text");
    m.def("example_names", &example_names);
    m.def(
        "example",
        [](const std::string& name, int p_max, std::optional<std::string> ring) {
            ExampleOptions o;
            o.p_max = p_max;
            if (ring)
                o.ring = ring_from_name(*ring);
            return PyBundle{std::make_shared<CatalogBundle>(example(name, o))};
        },
        py::arg("name"), py::arg("p_max") = 2, py::arg("ring") = py::none());

    m.def(
        "check_d_squared",
        [](const PyPresentation& s) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& c : check_d_squared(*s.p).counterexamples)
                out.emplace_back(c.generator, s.p->to_string(c.residual));
            return out;
        },
        py::arg("presentation"), "Generators g with d(d g) != 0, with the residual");
    m.def(
        "check_degree",
        [](const PyPresentation& s) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& v : check_degree(*s.p).violations)
                out.emplace_back(v.generator, v.detail);
            return out;
        },
        py::arg("presentation"));
    m.def(
        "check_parity_flip",
        [](const PyPresentation& s) -> std::optional<std::pair<std::string, std::string>> {
            auto rep = check_parity_flip(*s.p);
            if (!rep.witness)
                return std::nullopt;
            return std::make_pair(rep.witness->generator, s.p->word_to_string(rep.witness->word));
        },
        py::arg("presentation"), "None when d flips length parity, else (generator, word)");
    m.def(
        "exactness_search",
        [](const PyPresentation& s, const std::string& target, int max_len, int max_level,
           std::optional<std::string> parity) {
            auto r = exactness_search(*s.p, parse_element(target, *s.p), make_bounds(max_len, max_level, 8),
                                      parity_arg(parity));
            return exactness_dict(*s.p, r);
        },
        py::arg("presentation"), py::arg("target"), py::arg("max_len") = 6, py::arg("max_level") = 2,
        py::arg("parity") = py::none());
    m.def(
        "is_trivial",
        [](const PyPresentation& s, int max_len, int max_level) {
            return is_trivial(*s.p, make_bounds(max_len, max_level, 8)).certified_trivial;
        },
        py::arg("presentation"), py::arg("max_len") = 6, py::arg("max_level") = 2);
    m.def(
        "h0",
        [](const PyPresentation& s, int degree_bound) {
            auto rep = h0(*s.p, degree_bound);
            py::dict d;
            d["is_ground_ring"] = rep.is_ground_ring;
            d["dimension"] = rep.dimension;
            d["complete"] = rep.complete;
            d["finite"] = rep.finite;
            d["counts_by_length"] = rep.counts_by_length;
            std::vector<std::string> basis;
            for (const auto& w : rep.basis)
                basis.push_back(s.p->word_to_string(w));
            d["basis"] = basis;
            return d;
        },
        py::arg("presentation"), py::arg("degree_bound") = 8);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& stdin_text) {
            std::istringstream in(stdin_text);
            std::ostringstream out, err;
            int code = cli::run(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Runs the command line tool; returns (exit code, stdout, stderr)");
}
