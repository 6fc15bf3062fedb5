#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <mutex>

#include "csf/chartable_cache.hpp"
#include "csf/chromatic.hpp"
#include "csf/positivity.hpp"
#include "csf/report.hpp"

namespace py = pybind11;

namespace {

using csf::Integer;
using csf::Partition;
using csf::SymPoly;

py::int_ to_py(const Integer& x) {
    if (x.fits_int64()) {
        return py::int_(x.to_int64());
    }
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(x.to_string().c_str(), nullptr, 10)));
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::tuple from_partition(const Partition& p) {
    py::tuple t(p.length());
    for (std::size_t i = 0; i < p.length(); ++i) {
        t[i] = p[i];
    }
    return t;
}

py::dict from_poly(const SymPoly& f) {
    py::dict d;
    for (const auto& [lam, c] : f.terms()) {
        d[from_partition(lam)] = to_py(c);
    }
    return d;
}

SymPoly to_poly(csf::Basis basis, int degree, const py::dict& terms) {
    SymPoly f(basis, degree);
    for (const auto& [key, value] : terms) {
        f.add(to_partition(key.cast<std::vector<int>>()), Integer::parse(py::str(value).cast<std::string>()));
    }
    return f;
}

py::dict from_report(const csf::PositivityReport& r) {
    py::dict d;
    d["nu"] = from_partition(r.nu);
    d["vertices"] = r.graph.vertex_count();
    d["schur"] = from_poly(r.schur);
    py::list negative;
    for (const auto& [lam, c] : r.negative) {
        negative.append(py::make_tuple(from_partition(lam), to_py(c)));
    }
    d["negative"] = negative;
    d["schur_positive"] = r.schur_positive;
    return d;
}

const csf::CharacterTable& table_for(int degree) {
    static std::mutex lock;
    static std::map<int, csf::CharacterTable> tables;
    std::lock_guard guard(lock);
    auto it = tables.find(degree);
    if (it == tables.end()) {
        csf::CharacterTable t(degree);
        t.build();
        it = tables.emplace(degree, std::move(t)).first;
    }
    return it->second;
}

}  // namespace

PYBIND11_MODULE(_csf, m) {
    m.doc() = "Chromatic symmetric functions, Schur expansions and spider positivity checks";

    py::register_exception<csf::OverflowError>(m, "OverflowError", PyExc_OverflowError);
    py::register_exception<csf::UnsupportedSizeError>(m, "UnsupportedSizeError", PyExc_ValueError);
    py::register_exception<csf::IoError>(m, "IoError", PyExc_OSError);

    py::class_<csf::Graph>(m, "Graph")
        .def(py::init<int, std::vector<csf::Edge>>(), py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("vertex_count", &csf::Graph::vertex_count)
        .def_property_readonly("edges", &csf::Graph::edges)
        .def("degree", &csf::Graph::degree)
        .def("is_tree", &csf::Graph::is_tree)
        .def("is_connected", &csf::Graph::is_connected)
        .def("__eq__", [](const csf::Graph& a, const csf::Graph& b) { return a == b; })
        .def("__repr__", [](const csf::Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edge_count()) + " edges)";
        });

    m.def("path_graph", &csf::path_graph);
    m.def("cycle_graph", &csf::cycle_graph);
    m.def("star_graph", &csf::star_graph);
    m.def("complete_graph", &csf::complete_graph);
    m.def("spider", [](const std::vector<int>& nu) { return csf::spider(to_partition(nu)); }, py::arg("nu"));

    m.def("partitions_of", [](int n) {
        py::list out;
        for (const auto& p : csf::partitions_of(n)) {
            out.append(from_partition(p));
        }
        return out;
    });
    m.def("dominates", [](const std::vector<int>& a, const std::vector<int>& b) {
        return csf::dominates(to_partition(a), to_partition(b));
    });
    m.def("conjugate", [](const std::vector<int>& a) { return from_partition(csf::conjugate(to_partition(a))); });

    m.def("character", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return to_py(csf::mn_character(to_partition(lam), to_partition(mu)));
    }, py::arg("lam"), py::arg("mu"));
    m.def("kostka", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return to_py(csf::kostka(to_partition(lam), to_partition(mu)));
    }, py::arg("lam"), py::arg("mu"));
    m.def("p_to_s", [](int degree, const py::dict& terms) {
        return from_poly(csf::p_to_s(to_poly(csf::Basis::power, degree, terms), table_for(degree)));
    }, py::arg("degree"), py::arg("terms"));
    m.def("s_to_m", [](int degree, const py::dict& terms) {
        return from_poly(csf::s_to_m(to_poly(csf::Basis::schur, degree, terms)));
    }, py::arg("degree"), py::arg("terms"));

    m.def("csf_power", [](const csf::Graph& g) { return from_poly(csf::csf_power_basis(g)); });
    m.def("csf_schur", [](const csf::Graph& g) { return from_poly(csf::csf_schur(g, table_for(g.vertex_count()))); });
    m.def("coloring_monomials", [](const csf::Graph& g, int k) {
        return from_poly(csf::coloring_monomial_expansion(g, k));
    });
    m.def("chromatic_polynomial", [](const csf::Graph& g, int k) { return to_py(csf::chromatic_polynomial_at(g, k)); });
    m.def("stable_partition_types", [](const csf::Graph& g) {
        py::list out;
        for (const auto& p : csf::stable_partition_types(g)) {
            out.append(from_partition(p));
        }
        return out;
    });
    m.def("dominance_screen", [](const csf::Graph& g) -> py::object {
        const auto cert = csf::dominance_screen(g);
        if (!cert) {
            return py::none();
        }
        return py::make_tuple(from_partition(cert->achieved), from_partition(cert->missing));
    });
    m.def("hub_leaf_reduction_check", &csf::hub_leaf_reduction_check, py::arg("graph"), py::arg("hub"));

    m.def("expand_spider", [](const std::vector<int>& nu) {
        const Partition p = to_partition(nu);
        const csf::Graph g = csf::spider(p);
        return from_report(csf::positivity_report(p, g, table_for(g.vertex_count())));
    }, py::arg("nu"));

    m.def("verify", [](int n, std::optional<std::string> cache) {
        if (n < 1) {
            throw std::invalid_argument("n must be positive");
        }
        std::optional<std::filesystem::path> path;
        if (cache) {
            path = *cache;
        }
        const auto loaded = csf::load_or_build_table(2 * n, path);
        const auto run = csf::verify_theorem(n, loaded.table);
        py::dict d;
        d["n"] = run.n;
        py::list reports;
        for (const auto& r : run.reports) {
            reports.append(from_report(r));
        }
        d["reports"] = reports;
        d["verdict"] = std::string(csf::verdict_name(run.verdict));
        return d;
    }, py::arg("n"), py::arg("cache") = py::none());

    m.def("verify_json", [](int n) {
        return csf::dump_json(csf::theorem_to_json(csf::verify_theorem(n, table_for(2 * n))));
    }, py::arg("n"));
}
