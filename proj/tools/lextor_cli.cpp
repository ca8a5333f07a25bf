#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lextor/generators.hpp"
#include "lextor/graph.hpp"
#include "lextor/graph_io.hpp"
#include "lextor/lbfs.hpp"
#include "lextor/oracle.hpp"
#include "lextor/orientation.hpp"
#include "lextor/slices.hpp"

using json = nlohmann::json;
using namespace lextor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   t0)
      .count();
}

json counters_json(const PhaseCounters& c) {
  return json{{"source", c.source},     {"lbfs", c.lbfs},
              {"slice_tree", c.slice_tree}, {"slices", c.slices},
              {"refinement", c.refinement}, {"total", c.total()}};
}

json edges_json(const Orientation& o) {
  json out = json::array();
  for (auto [u, v] : o) out.push_back(json::array({u, v}));
  return out;
}

std::string order_line(const std::vector<VertexId>& order) {
  std::ostringstream os;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i) os << ' ';
    os << order[i];
  }
  return os.str();
}

std::vector<VertexId> parse_order(const std::string& text) {
  std::istringstream is(text);
  std::vector<VertexId> order;
  long long v;
  while (is >> v) order.push_back(static_cast<VertexId>(v));
  return order;
}

void print_snapshots(std::ostream& os,
                     const std::vector<std::vector<std::vector<VertexId>>>& snaps) {
  for (size_t i = 0; i < snaps.size(); ++i) {
    os << (i == 0 ? "initial " : "after slice " + std::to_string(i) + " ");
    for (const auto& cls : snaps[i]) {
      os << '[';
      for (size_t k = 0; k < cls.size(); ++k) {
        if (k) os << ' ';
        os << cls[k];
      }
      os << ']';
    }
    os << '\n';
  }
}

int cmd_orient(const std::string& path, bool verify, bool as_json, bool with_trace) {
  Graph g = read_graph_file(path);
  if (!is_connected(g)) {
    std::cerr << "error: the input graph is disconnected; orientation requires a "
                 "connected graph\n";
    return kExitInputError;
  }
  PipelineTrace trace;
  ExtensionOptions opts;
  if (with_trace) opts.trace = &trace;
  auto t0 = std::chrono::steady_clock::now();
  LinearExtensionResult res;
  try {
    res = transitive_orientation(g, opts);
  } catch (const NotPrimeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  double wall = ms_since(t0);
  bool ok = true;
  if (verify) ok = oracle::verify_transitive(g, res.orientation);

  if (as_json) {
    json out{{"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"order", res.order},
             {"edges", edges_json(res.orientation)},
             {"counters", counters_json(res.counters)},
             {"wall_ms", wall}};
    if (verify) out["verified"] = ok;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << order_line(res.order) << '\n';
    if (with_trace) print_snapshots(std::cout, trace.snapshots);
    if (verify) std::cout << "transitive: " << (ok ? "true" : "false") << '\n';
  }
  if (verify && !ok) {
    std::cerr << "error: orientation not transitive\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_trace(const std::string& path, bool pretty, bool lbfs_lines) {
  Graph g = read_graph_file(path);
  if (!is_connected(g)) {
    std::cerr << "error: the input graph is disconnected\n";
    return kExitInputError;
  }
  VertexId source = source_vertex(g);
  LbfsResult r = lbfs_from(g, source);
  if (lbfs_lines) {
    for (size_t pos = 0; pos < r.sigma.size(); ++pos) {
      VertexId v = r.sigma[pos];
      std::cout << pos << ' ' << v;
      const auto& lab = r.labels[static_cast<size_t>(v)];
      if (!lab.empty()) {
        std::cout << ' ';
        for (size_t k = 0; k < lab.size(); ++k) {
          if (k) std::cout << ',';
          std::cout << lab[k];
        }
      }
      std::cout << '\n';
    }
    return kExitOk;
  }
  SliceTree t = build_slice_tree(r);
  SliceAnnotations a = compute_active_edges(g, t);
  order_connected_vertices(a, r);
  compute_cocomponents(g, t, a);
  PipelineTrace trace;
  ExtensionOptions opts;
  opts.trace = &trace;
  LinearExtensionResult res = linear_extension(g, t, a, opts);

  json slices = json::array();
  json actives = json::array();
  json cocomps = json::array();
  for (int i = 0; i < t.slice_count(); ++i) {
    auto mem = t.members(i);
    slices.push_back(json{{"index", i + 1},
                          {"initial", t.sigma[static_cast<size_t>(i)]},
                          {"members", std::vector<VertexId>(mem.begin(), mem.end())}});
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : a.active_edges[static_cast<size_t>(i)])
      edges.push_back(std::minmax(u, v));
    std::sort(edges.begin(), edges.end());
    json je = json::array();
    for (auto [u, v] : edges) je.push_back(json::array({u, v}));
    actives.push_back(json{{"index", i + 1}, {"edges", je}});
    json jp = json::array();
    for (const auto& part : cocomponent_sets(t, a, i)) jp.push_back(part);
    cocomps.push_back(json{{"index", i + 1}, {"parts", jp}});
  }
  json snaps = json::array();
  for (const auto& snap : trace.snapshots) {
    json js = json::array();
    for (const auto& cls : snap) js.push_back(cls);
    snaps.push_back(js);
  }
  json out{{"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"source", source},
           {"search_order", r.sigma},
           {"slices", slices},
           {"active_edges", actives},
           {"cocomponents", cocomps},
           {"snapshots", snaps},
           {"order", res.order}};
  std::cout << (pretty ? out.dump(2) : out.dump()) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& path, std::string order_text,
               const std::string& order_file) {
  Graph g = read_graph_file(path);
  if (!order_file.empty()) {
    std::ifstream in(order_file);
    if (!in) throw std::invalid_argument("cannot open " + order_file);
    std::stringstream ss;
    ss << in.rdbuf();
    order_text = ss.str();
  }
  auto order = parse_order(order_text);
  Orientation o = induced_orientation(g, order);
  bool ok = oracle::verify_transitive(g, o);
  std::cout << "transitive: " << (ok ? "true" : "false") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

Graph make_family(const std::string& family, int n, double density,
                  std::uint64_t seed) {
  if (family == "poset") return random_poset_graph({n, density, seed});
  if (family == "prime") return random_prime_comparability({n, density, seed});
  if (family == "path") return path_graph(n);
  if (family == "cycle") return even_cycle(n);
  if (family == "bipartite") return random_bipartite({n, density, seed});
  throw std::invalid_argument("unknown family: " + family);
}

int cmd_generate(const std::string& family, int n, double density,
                 std::uint64_t seed, const std::string& out_path) {
  Graph g = make_family(family, n, density, seed);
  if (out_path.empty())
    std::cout << serialize_edge_list(g);
  else
    write_graph_file(g, out_path);
  return kExitOk;
}

int cmd_bench(const std::string& family, const std::vector<long long>& sizes,
              int repeat) {
  std::cout << "family,n,m,n_plus_m,ops_total,ops_per_nm,wall_ms\n";
  for (long long target : sizes) {
    for (int rep = 0; rep < repeat; ++rep) {
      Graph g;
      std::uint64_t seed = 1234 + static_cast<std::uint64_t>(rep);
      if (family == "path") {
        int n = static_cast<int>(std::max<long long>(4, (target + 1) / 2));
        g = path_graph(n);
      } else if (family == "bipartite") {
        int n = static_cast<int>(std::max<long long>(8, target / 6));
        double left = (n + 1) / 2, right = n - (n + 1) / 2;
        long long want_m = std::max<long long>(n, target - n);
        double density =
            std::min(1.0, std::max(0.0, (static_cast<double>(want_m) - (n - 1)) /
                                            (left * right)));
        for (int attempt = 0;; ++attempt) {
          g = random_bipartite({n, density, seed + static_cast<std::uint64_t>(attempt)});
          try {
            (void)transitive_orientation(g);
            break;
          } catch (const NotPrimeError&) {
            if (attempt >= 50) throw;
          }
        }
      } else {
        throw std::invalid_argument("bench families: path, bipartite");
      }
      auto t0 = std::chrono::steady_clock::now();
      auto res = transitive_orientation(g);
      double wall = ms_since(t0);
      auto nm = static_cast<double>(g.vertex_count()) + g.edge_count();
      std::cout << family << ',' << g.vertex_count() << ',' << g.edge_count() << ','
                << (g.vertex_count() + g.edge_count()) << ',' << res.counters.total()
                << ',' << static_cast<double>(res.counters.total()) / nm << ',' << wall
                << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear-time transitive orientation of prime comparability graphs"};
  app.require_subcommand(1);

  std::string path, order_text, order_file, out_path;
  bool verify = false, as_json = false, with_trace = false, pretty = false;
  bool lbfs_lines = false;
  std::string family = "path";
  int n = 16;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::vector<long long> sizes = {1000, 10000, 100000, 1000000};
  int repeat = 1;

  auto* orient = app.add_subcommand("orient", "compute a linear extension");
  orient->add_option("file", path, "edge-list file")->required();
  orient->add_flag("--verify", verify, "check the result and exit 1 on failure");
  orient->add_flag("--json", as_json, "JSON output");
  orient->add_flag("--trace", with_trace, "print partition snapshots");

  auto* trace = app.add_subcommand("trace", "slice/active-edge diagnostics as JSON");
  trace->add_option("file", path, "edge-list file")->required();
  trace->add_flag("--pretty", pretty, "indent the JSON");
  trace->add_flag("--lbfs", lbfs_lines, "print `position vertex label` lines instead");

  auto* ver = app.add_subcommand("verify", "verify an orientation given as an order");
  ver->add_option("file", path, "edge-list file")->required();
  ver->add_option("--order", order_text, "vertex order, space separated");
  ver->add_option("--order-file", order_file, "file holding the vertex order");

  auto* gen = app.add_subcommand("generate", "write a generated edge list");
  gen->add_option("--family", family, "poset|prime|path|cycle|bipartite")->required();
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--density", density, "edge probability");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "pipeline cost table as CSV");
  bench->add_option("--family", family, "path|bipartite");
  bench->add_option("--sizes", sizes, "target n+m values")->delimiter(',');
  bench->add_option("--repeat", repeat, "runs per size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (orient->parsed()) return cmd_orient(path, verify, as_json, with_trace);
    if (trace->parsed()) return cmd_trace(path, pretty, lbfs_lines);
    if (ver->parsed()) return cmd_verify(path, order_text, order_file);
    if (gen->parsed()) return cmd_generate(family, n, density, seed, out_path);
    if (bench->parsed()) return cmd_bench(family, sizes, repeat);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
