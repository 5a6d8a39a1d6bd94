#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvspcurves/certify.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const mvsp::Json& j) {
    switch (j.type()) {
        case nlohmann::detail::value_t::null:
            return py::none();
        case nlohmann::detail::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::detail::value_t::number_integer:
            return py::int_(j.get<int64_t>());
        case nlohmann::detail::value_t::number_unsigned:
            return py::int_(j.get<uint64_t>());
        case nlohmann::detail::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::detail::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::detail::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        default: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
    }
}

mvsp::CertifyOptions make_options(uint64_t max_enum, uint32_t max_iters) {
    mvsp::CertifyOptions opt;
    if (max_enum) opt.bounds = mvsp::EnumBounds::all(max_enum);
    opt.max_iters = max_iters;
    return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Curves T_n(y) = f(x) from minimal-value-set polynomials: construction and certification";

    py::register_exception<mvsp::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<mvsp::BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
    py::register_exception<mvsp::AmbiguousValuation>(m, "AmbiguousValuation", PyExc_RuntimeError);

    m.def(
        "construct",
        [](uint64_t q, uint32_t n, std::optional<std::vector<uint32_t>> r_tuple) {
            mvsp::CurveInstance c = mvsp::make_instance(q, n, r_tuple.value_or(std::vector<uint32_t>{}));
            mvsp::Json rec;
            rec["field"] = mvsp::field_record(*c.spec_ptr());
            rec.update(mvsp::profile_record(c.profile()));
            rec["f"] = to_string(c.f());
            rec["u"] = to_string(c.u());
            rec["v"] = to_string(c.v());
            rec["N_formula"] = mvsp::json_int(c.point_count_formula());
            rec["genus_formula"] =
                c.genus_formula() ? mvsp::json_int(*c.genus_formula()) : mvsp::Json(nullptr);
            return json_to_py(rec);
        },
        py::arg("q"), py::arg("n"), py::arg("r_tuple") = py::none(),
        "Build the profile (default: the (0, r(n)) one) and return its record with f, u, v");

    m.def(
        "certify",
        [](uint64_t q, uint32_t n, std::optional<std::vector<uint32_t>> r_tuple, uint64_t max_enum,
           uint32_t max_iters) {
            auto res = mvsp::certify_instance(q, n, r_tuple.value_or(std::vector<uint32_t>{}),
                                              make_options(max_enum, max_iters));
            return json_to_py(res.report);
        },
        py::arg("q"), py::arg("n"), py::arg("r_tuple") = py::none(), py::arg("max_enum") = 0,
        py::arg("max_iters") = 3, "Run the full certification battery and return the report");

    m.def(
        "sweep_csv",
        [](std::vector<uint64_t> q_list, uint32_t n_min, uint32_t n_max, bool all_profiles, uint64_t max_enum) {
            mvsp::SweepOptions so;
            so.q_list = std::move(q_list);
            so.n_min = n_min;
            so.n_max = n_max;
            so.all_profiles = all_profiles;
            so.cert = make_options(max_enum, 3);
            return mvsp::sweep_csv(so);
        },
        py::arg("q_list"), py::arg("n_min"), py::arg("n_max"), py::arg("all_profiles") = false,
        py::arg("max_enum") = 0, "Certification table as CSV text");

    m.def("h_family_r", &mvsp::h_family_r, py::arg("n"), "The least r >= n/2 with gcd(r, n) = 1");

    m.def("weierstrass_generators", &mvsp::weierstrass_generators, py::arg("q"), py::arg("n"), py::arg("r"),
          "Pole-order generators at the point at infinity, in ladder order");

    m.def(
        "semigroup",
        [](std::vector<uint64_t> gens) {
            mvsp::NumericalSemigroup S(gens);
            mvsp::Json rec;
            rec["gens"] = gens;
            rec["m_2"] = S.multiplicity();
            rec["frobenius"] = S.frobenius_number();
            rec["genus"] = S.genus();
            rec["symmetric"] = mvsp::is_symmetric(S);
            rec["telescopic"] = mvsp::is_telescopic(gens);
            rec["redundant_gens"] = mvsp::redundancy_probe(gens);
            return json_to_py(rec);
        },
        py::arg("gens"), "Numerical-semigroup record for a generator sequence");

    m.def(
        "telescopic_genus",
        [](std::vector<uint64_t> gens) { return mvsp::json_int(mvsp::telescopic_genus(gens)).get<int64_t>(); },
        py::arg("gens"));

    m.def(
        "pole_orders",
        [](uint64_t q, uint32_t n, uint32_t r, uint32_t max_iters) {
            auto rep = mvsp::verify_pole_orders(q, n, r, max_iters);
            mvsp::Json out = mvsp::Json::array();
            for (const auto& e : rep.entries)
                out.push_back(mvsp::Json{{"function", e.name},
                                         {"pole_order", mvsp::json_int(e.pole_order)},
                                         {"expected", mvsp::json_int(e.expected)},
                                         {"iterations", e.iterations},
                                         {"ok", e.ok}});
            return json_to_py(out);
        },
        py::arg("q"), py::arg("n"), py::arg("r"), py::arg("max_iters") = 3,
        "Pole orders of the five witness functions at the point at infinity");

    m.def("snm_identity", &mvsp::check_snm_identity, py::arg("m"), py::arg("n"), py::arg("q"),
          "Exact bivariate trace identity used by the irreducibility argument");
}
