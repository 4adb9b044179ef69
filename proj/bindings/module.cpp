#include "wco/calculus.hpp"
#include "wco/gallery.hpp"
#include "wco/json_io.hpp"
#include "wco/oracle.hpp"
#include "wco/properties.hpp"
#include "wco/random_space.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wco;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

py::dict verdict_to_py(const Verdict& v) { return json_to_py(verdict_to_json(v)); }

std::vector<std::vector<Complex>> matrix_to_py(const DenseMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.dim(), std::vector<Complex>(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "weighted composition operators on discrete measure spaces: densities, "
        "conditional expectations, Aluthge transforms, operator-property checks "
        "and a dense-matrix oracle";

    py::class_<PointSpace>(m, "PointSpace")
        .def("__len__", &PointSpace::size)
        .def("labels",
             [](const PointSpace& s) {
                 std::vector<std::string> out;
                 for (int i = 0; i < s.size(); ++i) out.push_back(s.label(i));
                 return out;
             })
        .def("index_of", &PointSpace::index_of)
        .def("phi", [](const PointSpace& s, int i) { return s.phi(i); })
        .def("mass", [](const PointSpace& s, int i) { return s.mass(i); })
        .def("weight", [](const PointSpace& s, int i) { return s.weight(i); })
        .def("reweighted", &PointSpace::reweighted)
        .def("to_json", [](const PointSpace& s) { return space_to_json(s).dump(); });

    m.def("build_space", &build_space, py::arg("points"), py::arg("masses"), py::arg("phi"),
          py::arg("weights"),
          "validated discrete space from labels, masses, phi targets and complex weights");
    m.def("space_from_json",
          [](const std::string& text) { return space_from_json(json::parse(text)); });
    m.def("load_space", &load_space);

    m.def("radon_nikodym", &radon_nikodym);
    m.def("cond_exp", &cond_exp);
    m.def("cond_exp_pullback", &cond_exp_pullback);
    m.def("aluthge_weight", &aluthge_weight, py::arg("space"), py::arg("alpha"));
    m.def("aluthge_rn", &aluthge_rn, py::arg("space"), py::arg("alpha"));
    m.def("partial_isometry_weight", &partial_isometry_weight);
    m.def("apply_operator", &apply_operator);
    m.def("apply_adjoint", &apply_adjoint);
    m.def("apply_modulus_power", &apply_modulus_power);
    m.def("apply_adjoint_modulus_power", &apply_adjoint_modulus_power);
    m.def("projection", &projection);

    m.def("is_densely_defined",
          [](const PointSpace& s) { return verdict_to_py(is_densely_defined(s)); });
    m.def(
        "is_bounded",
        [](const PointSpace& s, std::optional<double> bound) {
            return verdict_to_py(is_bounded(s, bound));
        },
        py::arg("space"), py::arg("bound") = std::nullopt);
    m.def("aluthge_domain_perp", [](const PointSpace& s, double alpha) {
        return aluthge_domain_perp(s, alpha);
    });
    m.def("aluthge_closed_criterion", [](const PointSpace& s, double alpha) {
        return verdict_to_py(aluthge_closed_criterion(s, alpha));
    });
    m.def("serwis_conditions", [](const PointSpace& s, double alpha) {
        SerwisReport r = serwis_conditions(s, alpha);
        py::dict out;
        out["i"] = verdict_to_py(r.i);
        out["ii"] = verdict_to_py(r.ii);
        out["iii"] = verdict_to_py(r.iii);
        out["iv"] = verdict_to_py(r.iv);
        out["chain_consistent"] = r.chain_consistent;
        return out;
    });
    m.def("is_p_hyponormal", [](const PointSpace& s, double p) {
        return verdict_to_py(is_p_hyponormal(s, p));
    });
    m.def("in_class_Q",
          [](const PointSpace& s, double p) { return verdict_to_py(in_class_Q(s, p)); });
    m.def("is_quasinormal",
          [](const PointSpace& s) { return verdict_to_py(is_quasinormal(s)); });
    m.def("aluthge_fixed_point", [](const PointSpace& s, double alpha) {
        return verdict_to_py(aluthge_fixed_point(s, alpha));
    });
    m.def("improvement_report", [](const PointSpace& s, double p, double alpha) {
        return verdict_to_py(improvement_report(s, p, alpha));
    });
    m.def("ups_inequality", [](const PointSpace& s, double p, double alpha) {
        return verdict_to_py(ups_inequality(s, p, alpha));
    });
    m.def("pq_monotonicity", [](const PointSpace& s, double p, double q) {
        return verdict_to_py(pq_monotonicity(s, p, q));
    });
    m.def("stages_feasible", [](double alpha, double theta) {
        return stages_feasible(alpha, theta);
    });

    m.def("matrix_of", [](const PointSpace& s) { return matrix_to_py(matrix_of(s)); });
    m.def("aluthge_matrix", [](const PointSpace& s, double alpha) {
        return matrix_to_py(aluthge_matrix(matrix_of(s), alpha));
    });
    m.def("polar", [](const PointSpace& s) {
        PolarDecomposition pd = polar(matrix_of(s));
        return py::make_tuple(matrix_to_py(pd.u), matrix_to_py(pd.m));
    });

    m.def(
        "gallery_window",
        [](const std::string& name, const std::map<std::string, std::string>& params,
           int window) {
            auto fam = gallery::make_family(name, params);
            gallery::WindowedSpace ws = fam->window(window);
            std::vector<std::string> core;
            for (int i : ws.core) core.push_back(ws.space.label(i));
            return py::make_tuple(ws.space, core);
        },
        py::arg("name"), py::arg("params") = std::map<std::string, std::string>{},
        py::arg("window") = 16);
    m.def("gallery_list", []() { return json_to_py(gallery::list_families()); });

    m.def(
        "random_space",
        [](std::uint64_t seed, int max_dim) {
            std::mt19937_64 rng(seed);
            return random_space(rng, max_dim);
        },
        py::arg("seed"), py::arg("max_dim") = 12);
}
