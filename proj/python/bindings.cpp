#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polysat/construct.hpp"
#include "polysat/graphdual.hpp"
#include "polysat/io.hpp"

namespace py = pybind11;
using namespace polysat;

namespace {

Poset make_poset(int n, const std::vector<Edge>& covers, std::vector<std::string> names) {
  return from_covers(n, covers, std::move(names)).poset;
}

py::dict report_dict(const PolyunsatReport& r) {
  py::list pairs;
  for (const auto& v : r.pairs) {
    py::dict e;
    e["k"] = v.k;
    e["l"] = v.l;
    e["d_k_plus_d_l"] = v.dk + v.dl;
    if (const auto* none = std::get_if<NoJointPartition>(&v.verdict)) {
      e["verdict"] = "NoJointPartition";
      e["min_joint_norm"] = none->min_joint_norm;
    } else {
      py::list chains;
      for (const auto& c : std::get<Witness>(v.verdict).partition.chains) chains.append(c.elems);
      e["verdict"] = "Witness";
      e["chains"] = chains;
    }
    pairs.append(e);
  }
  py::dict out;
  out["height"] = r.height;
  out["d"] = r.d;
  out["pairs"] = pairs;
  out["polyunsaturated"] = r.polyunsaturated;
  return out;
}

}  // namespace

PYBIND11_MODULE(_polysat, m) {
  m.doc() = "Exact k-families, saturated chain partitions and polyunsaturated posets.";

  py::register_exception<Error>(m, "PolysatError", PyExc_ValueError);

  py::class_<Poset>(m, "Poset")
      .def(py::init(&make_poset), py::arg("n"), py::arg("covers"),
           py::arg("names") = std::vector<std::string>{},
           "Poset on 0..n-1 from an acyclic relation; closed and reindexed topologically.")
      .def_static("chain", &Poset::chain)
      .def_static("antichain", &Poset::antichain)
      .def("__len__", &Poset::size)
      .def("less", &Poset::less)
      .def("name", &Poset::name)
      .def_property_readonly("names", &Poset::names)
      .def("relations", &Poset::relations)
      .def("covers", [](const Poset& p) { return cover_relations(p); })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("to_json", [](const Poset& p) { return write_poset_json(p); })
      .def("to_dot", [](const Poset& p) { return export_dot(p); })
      .def_static("from_json", [](const std::string& s) { return read_poset_json(s).poset; })
      .def("__repr__", [](const Poset& p) {
        return "<Poset n=" + std::to_string(p.size()) + ">";
      });

  m.def("height", &height);
  m.def("width", &width);
  m.def("dk", &dk, py::arg("p"), py::arg("k"));
  m.def("d_sequence", [](const Poset& p) { return d_sequence(p).values; });
  m.def("delta_sequence", [](const Poset& p) { return delta_sequence(p).values; });
  m.def("is_strong_sperner", &is_strong_sperner);
  m.def("disjoint_union", &disjoint_union);
  m.def("isomorphic", &isomorphic, py::arg("p"), py::arg("q"), py::arg("max_n") = 10);
  m.def("count_posets", [](int n) { return enumerate_posets(n).size(); });

  m.def(
      "min_total_norm",
      [](const Poset& p, const std::vector<int>& ks, int max_n) {
        NormResult r = min_total_norm(p, ks, SearchLimits{max_n, 600});
        std::vector<std::vector<int>> chains;
        for (const auto& c : r.partition.chains) chains.push_back(c.elems);
        return py::make_tuple(r.value, chains);
      },
      py::arg("p"), py::arg("ks"), py::arg("max_n") = 16);
  m.def(
      "is_polyunsaturated",
      [](const Poset& p, int max_n, double budget, unsigned threads) {
        PolyunsatReport r;
        {
          py::gil_scoped_release release;
          r = is_polyunsaturated(p, SearchLimits{max_n, budget}, threads);
        }
        return report_dict(r);
      },
      py::arg("p"), py::arg("max_n") = 16, py::arg("budget_seconds") = 600.0,
      py::arg("threads") = 0u);

  m.def("build_pj", [](int j) { return build_pj(j).poset; }, py::arg("j"));
  m.def("pj_realizer", [](int j) {
    Realizer r = pj_realizer(j);
    return py::make_tuple(r.ext1, r.ext2);
  });
  m.def(
      "from_delta",
      [](const std::vector<int>& b) {
        BuiltPoset built = from_delta(DeltaSequence{b});
        return py::make_tuple(built.poset, py::make_tuple(built.realizer.ext1, built.realizer.ext2));
      },
      py::arg("b"), "Polyunsaturated poset with the given difference sequence, plus a 2-realizer.");
  m.def("lower_bounds", [](int c) { return lower_bounds(c).values; });
  m.def("upper_bounds", [](int c, int a) { return upper_bounds(c, a).values; });
  m.def(
      "feasible_nca",
      [](int n, int c, int a) {
        FeasibilityVerdict v = feasible_nca(n, c, a);
        return py::make_tuple(v.feasible, v.failed_conditions);
      },
      py::arg("n"), py::arg("c"), py::arg("a"));
  m.def("sequence_for", [](int n, int c, int a) { return sequence_for(n, c, a).values; },
        py::arg("n"), py::arg("c"), py::arg("a"));
  m.def("feasible_ca", &feasible_ca);
  m.def("feasible_nc", &feasible_nc);

  m.def("verify_realizer", [](const Poset& p, const std::vector<int>& e1, const std::vector<int>& e2) {
    return verify_realizer(p, Realizer{e1, e2});
  });
  m.def("conjugate", [](const Poset& p, const std::vector<int>& e1, const std::vector<int>& e2) {
    return conjugate(p, Realizer{e1, e2}).poset;
  });
}
