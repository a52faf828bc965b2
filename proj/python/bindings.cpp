#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "factcat/category.hpp"
#include "factcat/codec.hpp"
#include "factcat/divisibility.hpp"
#include "factcat/errors.hpp"
#include "factcat/monoidal.hpp"
#include "factcat/oracle.hpp"
#include "factcat/weq.hpp"

namespace py = pybind11;
using namespace factcat;
using codec::json;

namespace {

// Elements cross the boundary as int (zx, nat) or str ("1/2", "a^2*b");
// fractions.Fraction is accepted on input.
json to_wire(const py::handle& v) {
    if (py::isinstance<py::bool_>(v)) throw py::type_error("booleans are not monoid elements");
    if (py::isinstance<py::int_>(v)) return v.cast<std::int64_t>();
    if (py::isinstance<py::str>(v)) return v.cast<std::string>();
    if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator")) {
        return py::str(v.attr("numerator")).cast<std::string>() + "/" +
               py::str(v.attr("denominator")).cast<std::string>();
    }
    throw py::type_error("expected int, str or Fraction, got " + py::repr(v).cast<std::string>());
}

py::object to_py(const Monoid& mon, const Element& a) {
    const auto j = codec::encode_element(mon, a);
    if (j.is_number_integer()) return py::int_(j.get<std::int64_t>());
    return py::str(j.get<std::string>());
}

py::list to_py(const Monoid& mon, const std::vector<Element>& xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(mon, x));
    return out;
}

py::list to_py(const FactorTuple& t) {
    return to_py(t.monoid(), std::vector<Element>(t.entries().begin(), t.entries().end()));
}

Element element(const std::shared_ptr<Monoid>& h, const py::handle& v) { return codec::decode_element(*h, to_wire(v)); }

FactorTuple tuple(const std::shared_ptr<Monoid>& h, const py::iterable& xs) {
    std::vector<Element> entries;
    for (const auto& x : xs) entries.push_back(element(h, x));
    return FactorTuple(h, std::move(entries));
}

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Morphism make_morphism(const std::shared_ptr<Monoid>& h, const py::iterable& dom, const py::iterable& cod,
                       const std::vector<std::int64_t>& map) {
    auto x = tuple(h, dom);
    auto y = tuple(h, cod);
    auto fn = IndexFunction::from_one_based(x.size(), map);
    return Morphism::validated(std::move(x), std::move(y), std::move(fn));
}

std::vector<Morphism> morphism_list(const py::iterable& xs) {
    std::vector<Morphism> out;
    for (const auto& x : xs) out.push_back(x.cast<Morphism>());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "The category of factorization of a monoid";

    auto base = py::register_exception<Error>(m, "FactcatError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<GuardError>(m, "GuardError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Monoid, std::shared_ptr<Monoid>>(m, "Monoid")
        .def(py::init([](const std::string& name) { return std::const_pointer_cast<Monoid>(make_monoid(name)); }),
             py::arg("name"))
        .def_property_readonly("name", &Monoid::name)
        .def_property_readonly("is_divisibility_monoid", &Monoid::is_divisibility_monoid)
        .def("identity", [](const std::shared_ptr<Monoid>& h) { return to_py(*h, h->identity()); })
        .def("op", [](const std::shared_ptr<Monoid>& h, py::handle a, py::handle b) {
            return to_py(*h, h->op(element(h, a), element(h, b)));
        })
        .def("leq", [](const std::shared_ptr<Monoid>& h, py::handle a, py::handle b) { return h->leq(element(h, a), element(h, b)); })
        .def("is_invertible", [](const std::shared_ptr<Monoid>& h, py::handle a) { return h->is_invertible(element(h, a)); })
        .def("exact_divide", [](const std::shared_ptr<Monoid>& h, py::handle a, py::handle b) -> py::object {
            const auto q = h->exact_divide(element(h, a), element(h, b));
            return q ? to_py(*h, *q) : py::none();
        })
        .def("are_associates", [](const std::shared_ptr<Monoid>& h, py::handle a, py::handle b) {
            return h->are_associates(element(h, a), element(h, b));
        })
        .def("is_irreducible", [](const std::shared_ptr<Monoid>& h, py::handle a) { return h->is_irreducible(element(h, a)); })
        .def("is_prime", [](const std::shared_ptr<Monoid>& h, py::handle a) { return h->is_prime(element(h, a)); })
        .def("factor_irreducibles", [](const std::shared_ptr<Monoid>& h, py::handle a) {
            const auto f = h->factor_irreducibles(element(h, a));
            return py::make_tuple(to_py(*h, f.unit), to_py(*h, f.factors));
        })
        .def("__eq__", [](const std::shared_ptr<Monoid>& a, const std::shared_ptr<Monoid>& b) { return *a == *b; })
        .def("__repr__", [](const std::shared_ptr<Monoid>& h) { return "Monoid('" + h->name() + "')"; });

    py::class_<Morphism>(m, "Morphism")
        .def(py::init([](const std::shared_ptr<Monoid>& h, py::iterable dom, py::iterable cod,
                         const std::vector<std::int64_t>& map) { return make_morphism(h, dom, cod, map); }),
             py::arg("monoid"), py::arg("domain"), py::arg("codomain"), py::arg("map"))
        .def_static("from_json", [](const std::string& text) { return codec::decode_morphism(nullptr, codec::parse_json(text)); })
        .def("to_json", [](const Morphism& f) { return codec::encode_morphism(f).dump(); })
        .def_property_readonly("monoid", [](const Morphism& f) { return std::const_pointer_cast<Monoid>(f.monoid_handle()); })
        .def_property_readonly("domain", [](const Morphism& f) { return to_py(f.domain()); })
        .def_property_readonly("codomain", [](const Morphism& f) { return to_py(f.codomain()); })
        .def_property_readonly("map", [](const Morphism& f) { return f.index_fn().one_based(); })
        .def("__eq__", [](const Morphism& a, const Morphism& b) { return a == b; })
        .def("__repr__", [](const Morphism& f) { return "<Morphism " + f.to_string() + ">"; });

    m.def("hom_set", [](const std::shared_ptr<Monoid>& h, py::iterable dom, py::iterable cod) {
        return hom_set(tuple(h, dom), tuple(h, cod));
    });
    m.def("identity", [](const std::shared_ptr<Monoid>& h, py::iterable t) { return identity_morphism(tuple(h, t)); });
    m.def("compose", &compose, py::arg("g"), py::arg("f"), "g o f");
    m.def("product", [](const std::shared_ptr<Monoid>& h, py::iterable t) { return to_py(*h, product_functor(tuple(h, t))); });
    m.def("tensor_objects", [](const std::shared_ptr<Monoid>& h, py::iterable s, py::iterable t) {
        return to_py(tensor_objects(tuple(h, s), tuple(h, t)));
    });
    m.def("tensor", &tensor_morphisms, py::arg("f"), py::arg("g"));
    m.def("braiding", [](const std::shared_ptr<Monoid>& h, py::iterable s, py::iterable t) {
        return braiding(tuple(h, s), tuple(h, t));
    });

    m.def("is_epic", &is_epic);
    m.def("is_monic", &is_monic);
    m.def("is_isomorphism", &is_isomorphism);
    m.def("inverse", &inverse);
    m.def("is_initial", [](const std::shared_ptr<Monoid>& h, py::iterable t) { return is_initial(tuple(h, t)); });
    m.def("refute_terminal", [](const std::shared_ptr<Monoid>& h, py::iterable t) {
        return to_py(refute_terminal(tuple(h, t)));
    });

    m.def("quotient_witness", [](const Morphism& f) {
        const auto q = quotient_witnesses(f);
        return py::make_tuple(to_py(f.monoid(), q.per_index), to_py(f.monoid(), q.total));
    }, "(r_n list, r)");
    m.def("is_weak_equivalence", &is_weak_equivalence);
    m.def("decompose_eip", [](const Morphism& f) {
        const auto d = decompose_eip(f);
        py::dict out;
        out["epsilon"] = d.epsilon;
        out["delta"] = d.delta;
        out["phi"] = d.phi;
        out["ratios"] = to_py(f.monoid(), d.ratios);
        out["dropped_unit"] = to_py(f.monoid(), d.dropped_unit);
        return out;
    });
    m.def("ore_square", [](const Morphism& f, const Morphism& g) {
        auto sq = ore_square(f, g);
        return py::make_tuple(sq.f_prime, sq.g_prime);
    }, "(f', g')");
    m.def("right_cancel_witness", &right_cancel_witness);

    m.def("weak_divisibility", [](const Morphism& f, const Morphism& g) {
        const auto w = weak_divisibility(f, g);
        py::dict out;
        out["divides"] = w.divides;
        out["s"] = to_py(f.monoid(), w.s);
        out["r"] = to_py(f.monoid(), w.r);
        return out;
    });
    m.def("weakly_divides", &weakly_divides);
    m.def("weak_div_diagram", [](const Morphism& f, const Morphism& g) {
        const auto d = weak_div_diagram(f, g);
        py::dict out;
        out["a"] = to_py(f.monoid(), d.a);
        out["b"] = to_py(f.monoid(), d.b);
        out["mu"] = d.mu;
        out["alpha"] = d.alpha;
        out["beta"] = d.beta;
        out["eta"] = d.eta;
        out["left"] = d.left;
        out["right"] = d.right;
        return out;
    });
    m.def("weakly_associate", &weakly_associate);
    m.def("is_weakly_irreducible", &is_weakly_irreducible);
    m.def("is_weakly_prime", &is_weakly_prime);
    m.def("is_weakly_irreducible_tuple", [](const std::shared_ptr<Monoid>& h, py::iterable t) {
        return is_weakly_irreducible_tuple(tuple(h, t));
    });
    m.def("is_weakly_prime_tuple", [](const std::shared_ptr<Monoid>& h, py::iterable t) {
        return is_weakly_prime_tuple(tuple(h, t));
    });
    m.def("atomic_chain", [](const Morphism& f) {
        const auto c = atomic_chain(f);
        py::list steps;
        for (std::size_t i = 0; i < c.steps.size(); ++i) {
            steps.append(py::make_tuple(c.tags[i] == StepTag::WeakEquivalence ? "weq" : "weakly_irreducible", c.steps[i]));
        }
        return py::make_tuple(steps, c.irr_count);
    }, "([(tag, step)], irr_count)");
    m.def("zeta_mor", &zeta_mor);
    m.def("zeta_obj", [](const std::shared_ptr<Monoid>& h, py::iterable t) { return zeta_obj(tuple(h, t)); });
    m.def("zeta_elt", [](const std::shared_ptr<Monoid>& h, py::handle a) { return zeta_elt(*h, element(h, a)); });
    m.def("divisor_classes", [](const std::shared_ptr<Monoid>& h, py::handle a) {
        return to_py(*h, divisor_classes(*h, element(h, a)));
    });
    m.def("weak_divisor_classes", [](const Morphism& f) { return to_py(f.monoid(), weak_divisor_classes(f)); });
    m.def("chain_stabilizes", [](py::iterable chain) { return chain_stabilizes(morphism_list(chain)); });
    m.def("enumerate_irreducible_factorizations", [](const std::shared_ptr<Monoid>& h, py::handle a, std::size_t max_count) {
        const auto e = enumerate_irreducible_factorizations(*h, element(h, a), max_count);
        py::list out;
        for (const auto& fs : e.factorizations) out.append(to_py(*h, fs));
        return py::make_tuple(out, e.truncated);
    }, py::arg("monoid"), py::arg("a"), py::arg("max_count") = 1000, "(factorizations, truncated)");
    m.def("ufd_wedge", [](const Morphism& f, const Morphism& g) -> py::object {
        auto r = ufd_wedge(f, g);
        if (auto* weq = std::get_if<Morphism>(&r)) return py::cast(*weq);
        const auto& w = std::get<Wedge>(r);
        py::dict out;
        out["apex"] = to_py(w.apex);
        out["from_v"] = w.from_v;
        out["from_w"] = w.from_w;
        out["to_z"] = w.to_z;
        return out;
    });

    m.def("suite_names", &oracle::suite_names);
    m.def("verify", [](const std::shared_ptr<Monoid>& h, std::vector<std::string> suites, py::object pool,
                       std::size_t max_len, std::uint64_t seed, std::uint64_t max_cases) {
        auto spec = oracle::UniverseSpec::defaults(h);
        if (!pool.is_none()) {
            spec.pool.clear();
            for (const auto& x : pool.cast<py::iterable>()) spec.pool.push_back(element(h, x));
        }
        spec.max_len = max_len;
        spec.seed = seed;
        spec.max_cases = max_cases;
        if (suites.empty()) suites = oracle::suite_names();
        oracle::RunReport report;
        {
            py::gil_scoped_release release;
            report = oracle::run_suite(spec, suites);
        }
        return json_to_py(oracle::to_json(report));
    }, py::arg("monoid"), py::arg("suites") = std::vector<std::string>{}, py::arg("pool") = py::none(),
       py::arg("max_len") = 3, py::arg("seed") = 1, py::arg("max_cases") = 1'000'000);
}
