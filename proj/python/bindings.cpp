#include "mv/counting.hpp"
#include "mv/kontsevich.hpp"
#include "mv/partitions.hpp"
#include "mv/volumes.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mv;

namespace {

py::object to_python(const nlohmann::ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

// Exact value a/b * pi^d as (Fraction, d).
py::tuple pi_value(const PiValue& v) { return py::make_tuple(fraction(v.coefficient()), v.pi_power()); }

MinimalStratumVolumeTable table_from(const std::optional<std::string>& minimal_strata) {
    auto t = MinimalStratumVolumeTable::builtin();
    if (minimal_strata) t.load_overrides(*minimal_strata);
    return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Masur-Veech volumes of odd strata of quadratic differentials";

    py::register_exception<Unavailable>(m, "Unavailable", PyExc_LookupError);

    m.def(
        "volume",
        [](const std::string& stratum, const std::string& source, const std::optional<std::string>& minimal_strata) {
            auto s = StratumSpec::parse(stratum);
            auto t = table_from(minimal_strata);
            VolumeBreakdown b;
            {
                py::gil_scoped_release release;
                b = masur_veech_volume(s, t, parse_source(source));
            }
            return pi_value(*b.vol);
        },
        py::arg("stratum"), py::arg("source") = "auto", py::arg("minimal_strata") = py::none(),
        "True volume as (Fraction, d), meaning Fraction * pi^d.");
    m.def(
        "completed",
        [](const std::string& stratum, const std::string& source) {
            auto s = StratumSpec::parse(stratum);
            VolumeBreakdown b;
            {
                py::gil_scoped_release release;
                b = completed_volume(s, parse_source(source), true);
            }
            return pi_value(b.completed);
        },
        py::arg("stratum"), py::arg("source") = "auto");
    m.def(
        "breakdown",
        [](const std::string& stratum, const std::string& source, const std::optional<std::string>& minimal_strata) {
            auto s = StratumSpec::parse(stratum);
            auto t = table_from(minimal_strata);
            VolumeBreakdown b;
            {
                py::gil_scoped_release release;
                b = masur_veech_volume(s, t, parse_source(source));
            }
            return to_python(b.to_json());
        },
        py::arg("stratum"), py::arg("source") = "auto", py::arg("minimal_strata") = py::none(),
        "Per-graph breakdown and boundary terms as a dict of exact strings.");
    m.def(
        "kontsevich",
        [](int g, int n, const std::string& kappa, const std::string& source) {
            return to_python(kontsevich_polynomial(g, n, parse_parts(kappa), parse_source(source)).to_json());
        },
        py::arg("g"), py::arg("n"), py::arg("kappa"), py::arg("source") = "auto");
    m.def(
        "count_metrics",
        [](int g, const std::string& kappa, const std::vector<long>& b) {
            return fraction(counting_function(g, static_cast<int>(b.size()), parse_parts(kappa), b));
        },
        py::arg("g"), py::arg("kappa"), py::arg("b"), "Counting function F_{g,n}^kappa(b) with n = len(b).");
    m.def(
        "expand",
        [](const std::string& stratum) {
            py::list out;
            for (const auto& [c, p] : theorem1_expand(StratumSpec::parse(stratum)))
                out.append(py::make_tuple(fraction(c), p.to_string()));
            return out;
        },
        py::arg("stratum"), "Completed volume as a combination of products of strata.");
    m.def(
        "st_count",
        [](const std::string& stratum, long N) {
            auto s = StratumSpec::parse(stratum);
            SquareTiledCount c;
            {
                py::gil_scoped_release release;
                c = square_tiled_count(s, N);
            }
            return py::make_tuple(fraction(c.total), fraction(c.normalized()));
        },
        py::arg("stratum"), py::arg("N"), "(card, 2d card / N^d) for surfaces with at most 2N squares.");
    m.def(
        "cylinders",
        [](const std::string& stratum) {
            auto d = cylinder_distribution(StratumSpec::parse(stratum));
            py::dict out;
            for (const auto& [k, v] : d.frequency) out[py::int_(k)] = fraction(v);
            return out;
        },
        py::arg("stratum"));
    m.def(
        "pin_minimal_strata",
        [](int max_d) {
            auto rep = pin_minimal_strata(MinimalStratumVolumeTable::anchored(), max_d);
            py::dict values;
            for (const auto& [g, e] : rep.table.entries()) values[py::str("H(" + std::to_string(2 * g - 2) + ")")] = pi_value(e.value);
            return py::make_tuple(rep.consistent, values);
        },
        py::arg("max_d") = 6, "Pin Vol H(2g-2) from H(0) and the tabulated rows; returns (consistent, values).");
    m.def("table_one", [] {
        py::list out;
        for (const auto& r : table_one_rows()) out.append(py::make_tuple(r.stratum, r.d, fraction(r.vol), fraction(r.completed)));
        return out;
    });
}
