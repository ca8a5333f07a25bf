#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "lextor/graph.hpp"
#include "lextor/graph_io.hpp"
#include "lextor/oracle.hpp"

using json = nlohmann::json;
using namespace lextor;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

std::string cli() {
  const char* p = std::getenv("LEXTOR_CLI");
  REQUIRE(p != nullptr);
  return p;
}

CliResult run(const std::string& args) {
  std::string cmd = cli() + " " + args + " 2>&1";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "lextor-cli-tests";
  fs::create_directories(dir);
  return dir;
}

std::string graph_file(const Graph& g, const std::string& name) {
  auto p = scratch() / name;
  write_graph_file(g, p.string());
  return p.string();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("orient golden fixture with verification") {
  auto res = run("orient " + graph_file(fixture_g10(), "g10.txt") + " --verify");
  CHECK(res.exit_code == 0);
  CHECK(first_line(res.output) == "0 4 5 6 7 8 2 3 9 1");
  CHECK(res.output.find("transitive: true") != std::string::npos);
}

TEST_CASE("orient single vertex") {
  auto res = run("orient " + graph_file(Graph::from_edge_list(1, {}), "k1.txt"));
  CHECK(res.exit_code == 0);
  CHECK(first_line(res.output) == "0");
}

TEST_CASE("orient exit codes") {
  Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(run("orient " + graph_file(c5, "c5.txt") + " --verify").exit_code == 1);

  CHECK(run("orient /nonexistent/graph.txt").exit_code == 2);

  auto bad = scratch() / "bad.txt";
  std::ofstream(bad) << "2 1\n0 zero\n";
  CHECK(run("orient " + bad.string()).exit_code == 2);

  Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  CHECK(run("orient " + graph_file(split, "split.txt")).exit_code == 2);
}

TEST_CASE("orient json output round-trips through the verifier") {
  std::string file = graph_file(fixture_g10(), "g10.txt");
  auto res = run("orient " + file + " --json --verify");
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc["n"] == 10);
  CHECK(doc["m"] == 19);
  CHECK(doc["verified"] == true);
  CHECK(doc["edges"].size() == 19);
  CHECK(doc["counters"]["total"].get<std::uint64_t>() > 0);
  std::string order;
  for (const auto& v : doc["order"]) order += std::to_string(v.get<int>()) + " ";
  auto verdict = run("verify " + file + " --order \"" + order + "\"");
  CHECK(verdict.exit_code == 0);
  CHECK(verdict.output.find("transitive: true") != std::string::npos);
}

TEST_CASE("verify rejects a bad order") {
  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  auto res = run("verify " + graph_file(p4, "p4.txt") + " --order \"0 1 2 3\"");
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("transitive: false") != std::string::npos);
}

TEST_CASE("trace on small graphs") {
  auto res = run("trace " + graph_file(Graph::from_edge_list(2, {{0, 1}}), "k2.txt"));
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.output);
  CHECK(doc["slices"].size() == 2);
  size_t actives = 0;
  for (const auto& e : doc["active_edges"]) actives += e["edges"].size();
  CHECK(actives == 1);

  Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  auto rp = run("trace " + graph_file(p4, "p4.txt"));
  REQUIRE(rp.exit_code == 0);
  json dp = json::parse(rp.output);
  CHECK(dp["active_edges"][0]["edges"].size() == 3);
}

TEST_CASE("trace lbfs lines") {
  auto res = run("trace " + graph_file(fixture_g10(), "g10.txt") + " --lbfs");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "0 0");  // the start vertex keeps its empty label
  std::getline(lines, line);
  CHECK(line == "1 1 10");  // second visit, labelled by the source
  int count = 2;
  while (std::getline(lines, line))
    if (!line.empty()) ++count;
  CHECK(count == 10);
}

TEST_CASE("generate families") {
  auto out = scratch() / "gen.txt";
  auto res = run("generate --family path --n 10 -o " + out.string());
  CHECK(res.exit_code == 0);
  Graph g = read_graph_file(out.string());
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 9);

  auto a = run("generate --family poset --n 8 --density 0.5 --seed 7");
  auto b = run("generate --family poset --n 8 --density 0.5 --seed 7");
  CHECK(a.output == b.output);
  CHECK(a.exit_code == 0);
  Graph gp = parse_edge_list(a.output);
  CHECK(oracle::is_comparability_bruteforce(gp));

  auto prime = run("generate --family prime --n 6 --seed 3");
  CHECK(prime.exit_code == 0);
  CHECK(oracle::is_prime_bruteforce(parse_edge_list(prime.output)));

  CHECK(run("generate --family nosuch --n 5").exit_code == 2);
}

TEST_CASE("bench emits csv rows") {
  auto res = run("bench --family path --sizes 200 --repeat 3");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "family,n,m,n_plus_m,ops_total,ops_per_nm,wall_ms");
  int rows = 0;
  while (std::getline(lines, line))
    if (line.rfind("path,", 0) == 0) ++rows;
  CHECK(rows == 3);
}
