/*
 * Copyright 2026 The roughring Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>

#include "roughring/approx_space.hpp"
#include "roughring/auditor.hpp"
#include "roughring/ideal.hpp"
#include "roughring/ring.hpp"
#include "roughring/rough_ideal.hpp"

namespace py = pybind11;
using namespace roughring;

namespace {

ElementSet to_set(std::size_t n, const std::vector<Element>& members) {
    return ElementSet::from_members(n, members);
}

std::set<Element> from_set(const ElementSet& s) {
    const auto m = s.members();
    return {m.begin(), m.end()};
}

SumMode sum_mode_of(const std::string& name) {
    if (name == "pairwise") return SumMode::Pairwise;
    if (name == "closure") return SumMode::Closure;
    throw Error(ErrorKind::ParseError, "sum_mode must be 'pairwise' or 'closure'");
}

Strategy strategy_of(const std::string& mode, std::uint64_t samples, std::uint64_t seed) {
    if (mode == "exhaustive") {
        Strategy s;
        s.sample_count = samples;
        s.seed = seed;
        return s;
    }
    if (mode == "randomized") return Strategy::randomized(samples, seed);
    throw Error(ErrorKind::ParseError, "mode must be 'exhaustive' or 'randomized'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rough approximations of subsets of finite commutative rings";

    py::register_exception<Error>(m, "RoughringError", PyExc_ValueError);

    py::class_<FiniteRing>(m, "FiniteRing")
        .def_property_readonly("name", &FiniteRing::name)
        .def_property_readonly("order", &FiniteRing::size)
        .def_property_readonly("zero", &FiniteRing::zero)
        .def_property_readonly("one", &FiniteRing::one)
        .def_property_readonly("labels", &FiniteRing::labels)
        .def("add", &FiniteRing::add)
        .def("mul", &FiniteRing::mul)
        .def("neg", &FiniteRing::neg)
        .def("elements", &FiniteRing::elements)
        .def("add_table", &FiniteRing::add_table)
        .def("mul_table", &FiniteRing::mul_table)
        .def("__len__", &FiniteRing::size)
        .def("__repr__", [](const FiniteRing& r) { return "<FiniteRing " + r.name() + ">"; })
        .def_static("from_tables", [](std::size_t n, const OpTable& add, const OpTable& mul,
                                      Element zero, Element one) {
            return FiniteRing::from_tables(n, add, mul, zero, one);
        });

    m.def("make_zn", &make_zn, py::arg("n"));
    m.def("direct_product", &direct_product);
    m.def("parse_ring", &parse_ring_spec, py::arg("spec"));

    py::class_<Ideal>(m, "Ideal")
        .def_property_readonly("members", [](const Ideal& i) { return from_set(i.members()); })
        .def_property_readonly("generators", &Ideal::generators)
        .def("__len__", &Ideal::size)
        .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
        .def("__repr__", [](const Ideal& i) { return "<Ideal " + i.members().to_string() + ">"; });

    m.def("ideal", [](const FiniteRing& r, const std::vector<Element>& members) {
        return Ideal::from_set(r, to_set(r.size(), members));
    });
    m.def("parse_ideal", &parse_ideal_spec, py::arg("ring"), py::arg("spec"));
    m.def("is_ideal", [](const FiniteRing& r, const std::vector<Element>& members) {
        return is_ideal(r, to_set(r.size(), members));
    });
    m.def("principal_ideal", &principal_ideal);
    m.def("generated_ideal", &generated_ideal);
    m.def("all_ideals", &all_ideals);
    m.def("maximal_ideals", &maximal_ideals);
    m.def("is_maximal", &is_maximal);
    m.def("is_prime", &is_prime);
    m.def("classify", [](const FiniteRing& r, const Ideal& i) {
        const IdealClassification c = classify(r, i);
        py::dict d;
        d["is_proper"] = c.is_proper;
        d["is_maximal"] = c.is_maximal;
        d["is_prime"] = c.is_prime;
        d["is_principal"] = c.is_principal;
        d["principal_generator"] = c.principal_generator;
        return d;
    });
    m.def("coset_partition", [](const FiniteRing& r, const Ideal& i) {
        std::vector<std::set<Element>> out;
        for (const ElementSet& b : coset_partition(r, i).blocks()) out.push_back(from_set(b));
        return out;
    });

    m.def("upper", [](const FiniteRing& r, const Ideal& i, const std::vector<Element>& x) {
        return from_set(upper_wrt(r, i, to_set(r.size(), x)));
    });
    m.def("lower", [](const FiniteRing& r, const Ideal& i, const std::vector<Element>& x) {
        return from_set(lower_wrt(r, i, to_set(r.size(), x)));
    });
    m.def("apr", [](const FiniteRing& r, const Ideal& i, const std::vector<Element>& x) {
        const RoughApproximation a = apr(r, i, to_set(r.size(), x));
        py::dict d;
        d["lower"] = from_set(a.lower);
        d["upper"] = from_set(a.upper);
        d["boundary"] = from_set(a.boundary);
        d["rough"] = a.rough;
        return d;
    });
    m.def(
        "set_sum",
        [](const FiniteRing& r, const std::vector<Element>& a, const std::vector<Element>& b,
           const std::string& mode) {
            return from_set(set_sum(r, to_set(r.size(), a), to_set(r.size(), b), sum_mode_of(mode)));
        },
        py::arg("ring"), py::arg("a"), py::arg("b"), py::arg("sum_mode") = "pairwise");
    m.def("set_product", [](const FiniteRing& r, const std::vector<Element>& a,
                            const std::vector<Element>& b) {
        return from_set(set_product(r, to_set(r.size(), a), to_set(r.size(), b)));
    });

    py::class_<ApproximationSpace>(m, "ApproximationSpace")
        .def(py::init([](std::size_t n, const std::vector<std::vector<Element>>& blocks) {
                 std::vector<ElementSet> sets;
                 for (const auto& b : blocks) sets.push_back(to_set(n, b));
                 return ApproximationSpace(std::move(sets));
             }),
             py::arg("universe_size"), py::arg("blocks"))
        .def_property_readonly("universe_size", &ApproximationSpace::universe_size)
        .def("upper", [](const ApproximationSpace& s, const std::vector<Element>& x) {
            return from_set(s.upper(to_set(s.universe_size(), x)));
        })
        .def("lower", [](const ApproximationSpace& s, const std::vector<Element>& x) {
            return from_set(s.lower(to_set(s.universe_size(), x)));
        })
        .def("boundary", [](const ApproximationSpace& s, const std::vector<Element>& x) {
            return from_set(s.boundary(to_set(s.universe_size(), x)));
        })
        .def("is_rough", [](const ApproximationSpace& s, const std::vector<Element>& x) {
            return s.is_rough(to_set(s.universe_size(), x));
        })
        .def("equivalence_class", [](const ApproximationSpace& s, Element x) {
            return from_set(s.equivalence_class(x));
        });

    m.def(
        "audit",
        [](const FiniteRing& r, const Ideal& i, const std::vector<std::string>& groups,
           const std::string& mode, std::uint64_t samples, std::uint64_t seed,
           const std::string& sum_mode, bool force) {
            std::vector<PropertyGroup> gs;
            for (const std::string& g : groups) gs.push_back(parse_property_group(g));
            return to_json(audit_groups(r, i, gs, strategy_of(mode, samples, seed),
                                        sum_mode_of(sum_mode), force));
        },
        py::arg("ring"), py::arg("ideal"), py::arg("groups"), py::arg("mode") = "exhaustive",
        py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("sum_mode") = "pairwise",
        py::arg("force") = false, "Runs the audit and returns the machine-readable JSON report.");
    m.def(
        "audit_space",
        [](const ApproximationSpace& s, const std::string& mode, std::uint64_t samples,
           std::uint64_t seed) {
            return to_json(audit_space_properties(s, strategy_of(mode, samples, seed)));
        },
        py::arg("space"), py::arg("mode") = "exhaustive", py::arg("samples") = 100000,
        py::arg("seed") = 0);
}
