#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lextor/generators.hpp"
#include "lextor/graph.hpp"
#include "lextor/graph_io.hpp"
#include "lextor/lbfs.hpp"
#include "lextor/oracle.hpp"
#include "lextor/orientation.hpp"
#include "lextor/slices.hpp"

namespace py = pybind11;
using namespace lextor;

namespace {

py::dict lbfs_dict(const LbfsResult& r) {
  py::dict d;
  d["order"] = r.sigma;
  d["position"] = r.position;
  d["labels"] = r.labels;
  return d;
}

py::dict counters_dict(const PhaseCounters& c) {
  py::dict d;
  d["source"] = c.source;
  d["lbfs"] = c.lbfs;
  d["slice_tree"] = c.slice_tree;
  d["slices"] = c.slices;
  d["refinement"] = c.refinement;
  d["total"] = c.total();
  return d;
}

py::dict analyze_dict(const Graph& g, VertexId start) {
  LbfsResult r = lbfs_from(g, start);
  SliceTree t = build_slice_tree(r);
  SliceAnnotations a = compute_active_edges(g, t);
  order_connected_vertices(a, r);
  compute_cocomponents(g, t, a);
  py::list slices, actives, cocomps;
  for (int i = 0; i < t.slice_count(); ++i) {
    auto mem = t.members(i);
    py::dict s;
    s["initial"] = t.sigma[static_cast<size_t>(i)];
    s["members"] = std::vector<VertexId>(mem.begin(), mem.end());
    slices.append(s);
    actives.append(a.active_edges[static_cast<size_t>(i)]);
    cocomps.append(cocomponent_sets(t, a, i));
  }
  py::dict d;
  d["order"] = r.sigma;
  d["slices"] = slices;
  d["active_edges"] = actives;
  d["cocomponents"] = cocomps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lextor, m) {
  m.doc() = "linear-time transitive orientation of prime comparability graphs";

  py::register_exception<NotPrimeError>(m, "NotPrimeError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def_static("from_edge_list", &Graph::from_edge_list, py::arg("n"),
                  py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, VertexId v) {
             auto nb = g.neighbors(v);
             return std::vector<VertexId>(nb.begin(), nb.end());
           })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("fixture_g10", &fixture_g10);
  m.def("g10_vertex_names", [] { return g10_vertex_names(); });
  m.def("induced_subgraph", [](const Graph& g, const std::vector<VertexId>& s) {
    auto sub = induced_subgraph(g, s);
    return py::make_tuple(sub.graph, sub.to_original);
  });
  m.def("induced_orientation", [](const Graph& g, const std::vector<VertexId>& order) {
    return induced_orientation(g, order);
  });
  m.def("is_connected", &is_connected);

  m.def("parse_edge_list",
        [](const std::string& text) { return parse_edge_list(text); });
  m.def("serialize_edge_list", &serialize_edge_list);
  m.def("read_graph_file", &read_graph_file);
  m.def("write_graph_file", &write_graph_file);

  m.def("lbfs", [](const Graph& g) { return lbfs_dict(lbfs(g)); });
  m.def("lbfs_from",
        [](const Graph& g, VertexId s) { return lbfs_dict(lbfs_from(g, s)); });
  m.def("naive_lbfs_from", [](const Graph& g, VertexId s) {
    return lbfs_dict(naive_lbfs_from(g, s));
  });

  m.def("analyze", &analyze_dict, py::arg("graph"), py::arg("start"),
        "slices, active edges and co-components of the search from `start`");

  m.def("source_vertex", [](const Graph& g) { return source_vertex(g); });
  m.def(
      "transitive_orientation",
      [](const Graph& g, bool check_invariants) {
        ExtensionOptions opts;
        opts.check_invariants = check_invariants;
        auto res = transitive_orientation(g, opts);
        py::dict d;
        d["order"] = res.order;
        d["edges"] = res.orientation;
        d["counters"] = counters_dict(res.counters);
        return d;
      },
      py::arg("graph"), py::arg("check_invariants") = false);

  m.def("verify_transitive", &oracle::verify_transitive);
  m.def("enumerate_transitive_orientations", [](const Graph& g) {
    return oracle::enumerate_transitive_orientations(g).orientations;
  });
  m.def("is_prime_bruteforce", &oracle::is_prime_bruteforce);
  m.def("is_comparability_bruteforce", &oracle::is_comparability_bruteforce);
  m.def("is_valid_lbfs_order", [](const Graph& g, const std::vector<VertexId>& order) {
    return oracle::is_valid_lbfs_order(g, order);
  });

  m.def("random_poset_graph", [](int n, double density, std::uint64_t seed) {
    return random_poset_graph({n, density, seed});
  });
  m.def("random_prime_comparability", [](int n, double density, std::uint64_t seed) {
    return random_prime_comparability({n, density, seed});
  });
  m.def("path_graph", &path_graph);
  m.def("even_cycle", &even_cycle);
  m.def("random_bipartite", [](int n, double density, std::uint64_t seed) {
    return random_bipartite({n, density, seed});
  });

  m.attr("__version__") = "0.1.0";
}
