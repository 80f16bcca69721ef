#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "xorgens/analysis.hpp"
#include "xorgens/engine.hpp"
#include "xorgens/errors.hpp"
#include "xorgens/factor_tables.hpp"
#include "xorgens/gf2_poly.hpp"
#include "xorgens/param_db.hpp"
#include "xorgens/search.hpp"
#include "xorgens/statcheck.hpp"

namespace py = pybind11;
using namespace xorgens;

namespace {

// BigNat <-> python int through decimal strings
py::object to_py_int(const BigNat& x) {
    return py::module_::import("builtins").attr("int")(bignat_to_decimal(x));
}

BigNat from_py_int(const py::object& x) {
    return bignat_from_decimal(py::cast<std::string>(py::str(x)));
}

Params params_from_kwargs(std::uint32_t w, std::uint32_t r, std::uint32_t s,
                          std::uint32_t a, std::uint32_t b, std::uint32_t c,
                          std::uint32_t d) {
    return Params{.w = w, .r = r, .s = s, .a = a, .b = b, .c = c, .d = d};
}

}  // namespace

PYBIND11_MODULE(_xorgens, m) {
    m.doc() = "long-period shift/xor random number generators with a Weyl output stage";

    py::register_exception<UnlistedError>(m, "UnlistedError", PyExc_LookupError);
    py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_ValueError);
    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);

    py::class_<Params>(m, "Params")
        .def(py::init(&params_from_kwargs), py::arg("w"), py::arg("r"), py::arg("s"),
             py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def_readonly("w", &Params::w)
        .def_readonly("r", &Params::r)
        .def_readonly("s", &Params::s)
        .def_readonly("a", &Params::a)
        .def_readonly("b", &Params::b)
        .def_readonly("c", &Params::c)
        .def_readonly("d", &Params::d)
        .def_property_readonly("n", &Params::n)
        .def_property_readonly("delta", &Params::delta)
        .def_property_readonly("weight",
                               [](const Params& p) -> py::object {
                                   if (p.weight) return py::int_(*p.weight);
                                   return py::none();
                               })
        .def("__eq__", [](const Params& a, const Params& b) { return a == b; })
        .def("__repr__", [](const Params& p) {
            std::ostringstream s;
            s << "Params(w=" << p.w << ", r=" << p.r << ", s=" << p.s << ", a=" << p.a
              << ", b=" << p.b << ", c=" << p.c << ", d=" << p.d << ")";
            return s.str();
        });

    m.def("lookup", &lookup, py::arg("w"), py::arg("n"),
          py::return_value_policy::copy, "stored parameter row for (w, n)");
    m.def("all_rows", &all_rows, py::return_value_policy::copy);
    m.def("validate", [](const Params& p) {
        std::vector<std::string> out;
        for (const Violation& v : validate(p)) out.push_back(v.criterion + ": " + v.detail);
        return out;
    });

    py::class_<FactorTable>(m, "FactorTable")
        .def_property_readonly("n", &FactorTable::n)
        .def_property_readonly("factors",
                               [](const FactorTable& t) {
                                   py::list out;
                                   for (const auto& e : t.entries())
                                       out.append(py::make_tuple(to_py_int(e.prime),
                                                                 e.multiplicity));
                                   return out;
                               })
        .def_property_readonly("modulus",
                               [](const FactorTable& t) { return to_py_int(t.modulus()); });

    m.def("load_table", &load_table, py::arg("n"), py::return_value_policy::reference,
          "validated factorization of 2^n - 1");
    m.def("supported_exponents", &supported_exponents, py::return_value_policy::copy);
    m.def("cofactor", [](unsigned n, const py::object& d) {
        return to_py_int(cofactor(n, from_py_int(d)));
    });
    m.def("is_probable_prime",
          [](const py::object& x) { return is_probable_prime(from_py_int(x)); });

    py::class_<Gf2Poly>(m, "Gf2Poly")
        .def_static("from_hex", &Gf2Poly::from_hex)
        .def_static("from_terms",
                    [](const std::vector<std::size_t>& exponents) {
                        Gf2Poly p;
                        for (std::size_t e : exponents) p.set_coeff(e, !p.coeff(e));
                        return p;
                    })
        .def("to_hex", &Gf2Poly::to_hex)
        .def("__str__", &Gf2Poly::to_text)
        .def("__repr__", [](const Gf2Poly& p) { return "Gf2Poly(" + p.to_text() + ")"; })
        .def("__eq__", [](const Gf2Poly& a, const Gf2Poly& b) { return a == b; })
        .def("__xor__", [](const Gf2Poly& a, const Gf2Poly& b) { return a ^ b; })
        .def_property_readonly("degree",
                               [](const Gf2Poly& p) -> py::object {
                                   if (const auto d = p.degree()) return py::int_(*d);
                                   return py::none();
                               })
        .def_property_readonly("weight", &Gf2Poly::weight)
        .def("coeff", &Gf2Poly::coeff);

    m.def("gf2_add", &add);
    m.def("gf2_mul", &mul);
    m.def("gf2_mulmod", &mulmod);
    m.def("gf2_gcd", &gcd);
    m.def("gf2_modexp", [](const Gf2Poly& base, const py::object& e, const Gf2Poly& mm) {
        return modexp(base, from_py_int(e), mm);
    });
    m.def("is_irreducible", &is_irreducible);
    m.def("is_primitive", &is_primitive);

    py::class_<Generator>(m, "Generator")
        .def(py::init<const Params&, std::uint64_t>(), py::arg("params"), py::arg("seed"))
        .def(py::init([](std::uint32_t w, std::uint32_t n, std::uint64_t seed) {
                 return Generator(lookup(w, n), seed);
             }),
             py::arg("w"), py::arg("n"), py::arg("seed"))
        .def("next_word", &Generator::next_word)
        .def("next_real", &Generator::next_real)
        .def("words",
             [](Generator& g, std::size_t count) {
                 std::vector<std::uint64_t> out(count);
                 for (auto& v : out) v = g.next_word();
                 return out;
             })
        .def("reals",
             [](Generator& g, std::size_t count) {
                 std::vector<double> out(count);
                 for (auto& v : out) v = g.next_real();
                 return out;
             })
        .def_property_readonly("params", &Generator::params);

    m.def("omega_for", &omega_for);
    m.def("gamma_for", &gamma_for);

    py::enum_<Primitivity>(m, "Primitivity")
        .value("PRIMITIVE", Primitivity::kPrimitive)
        .value("NOT_PRIMITIVE", Primitivity::kNotPrimitive)
        .value("NOT_FULL_DEGREE", Primitivity::kNotFullDegree)
        .value("UNCHECKED", Primitivity::kUnchecked);

    py::class_<CharPolyReport>(m, "CharPolyReport")
        .def_readonly("params", &CharPolyReport::params)
        .def_readonly("poly", &CharPolyReport::poly)
        .def_readonly("degree", &CharPolyReport::degree)
        .def_readonly("weight", &CharPolyReport::weight)
        .def_readonly("primitive", &CharPolyReport::primitive)
        .def_readonly("elapsed_seconds", &CharPolyReport::elapsed_seconds);

    m.def("char_poly",
          [](const Params& p, const FactorTable* factors) { return char_poly(p, factors); },
          py::arg("params"), py::arg("factors") = nullptr);
    m.def("verify_row",
          [](std::uint32_t w, std::uint32_t n) { return verify_row(w, n); },
          py::arg("w"), py::arg("n"));

    py::class_<SearchOutcome>(m, "SearchOutcome")
        .def_property_readonly("found",
                               [](const SearchOutcome& o) -> py::object {
                                   if (o.found) return py::cast(*o.found);
                                   return py::none();
                               })
        .def_readonly("delta_reached", &SearchOutcome::delta_reached)
        .def_readonly("candidates_tested", &SearchOutcome::candidates_tested)
        .def_readonly("rejects_by_criterion", &SearchOutcome::rejects_by_criterion)
        .def_readonly("successes", &SearchOutcome::successes)
        .def_readonly("complete", &SearchOutcome::complete);

    m.def("search_optimal",
          [](std::uint32_t w, std::uint32_t r, std::uint32_t delta_floor, double budget) {
              SearchOptions options;
              options.delta_floor = delta_floor;
              options.budget_seconds = budget;
              return search_optimal(w, r, load_table(w * r), options);
          },
          py::arg("w"), py::arg("r"), py::arg("delta_floor") = 1,
          py::arg("budget_seconds") = 0.0);

    m.def("hamming_bound_scan", &hamming_bound_scan);
    m.def("linearity_probe", [](const Params& p, std::uint64_t steps) {
        const LinearityProbe probe = linearity_probe(p, steps);
        return py::make_tuple(probe.raw_linear, probe.combined_linear);
    });
    m.def("low_weight_probability", &low_weight_probability);
    m.def("monobit", &monobit);
}
