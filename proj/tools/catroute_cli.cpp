#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "catroute/bench.hpp"
#include "catroute/checks.hpp"
#include "catroute/construction.hpp"
#include "catroute/errors.hpp"
#include "catroute/fixtures.hpp"
#include "catroute/routing.hpp"

using namespace catroute;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

CategorySystem load_categories(const std::string& path, const Graph& g) {
  return parse_categories(read_file(path), g.size());
}

struct Options {
  std::string graph, cats, out, method = "auto", props = "shattered,internal,all-pairs", spec;
  Vertex from = 0, to = 0;
  bool trace = false, no_timing = false;
  unsigned threads = 0;
  std::size_t max_n = 500;
};

int cmd_construct(const Options& o) {
  auto method = parse_method(o.method);
  if (!method) throw ArgumentError("unknown method '" + o.method + "'");
  auto g = load_graph(o.graph);
  auto s = construct_categories(g, *method);
  write_file(o.out, to_json(s));
  std::cerr << "method=" << method_name(resolve_method(g, *method)) << " categories=" << s.size()
            << " memdim=" << s.membership_dimension() << '\n';
  return kOk;
}

int cmd_route(const Options& o) {
  auto g = load_graph(o.graph);
  auto s = load_categories(o.cats, g);
  g.check_vertex(o.from);
  g.check_vertex(o.to);
  auto tr = greedy_route(g, s, o.from, o.to);
  if (o.trace) {
    std::cout << render_trace(tr);
  } else {
    for (std::size_t i = 0; i < tr.path.size(); ++i) std::cout << (i ? " " : "") << tr.path[i];
    std::cout << '\n' << (tr.delivered() ? "DELIVERED" : "STUCK") << '\n';
  }
  return tr.delivered() ? kOk : kFailed;
}

int cmd_check(const Options& o) {
  std::vector<Property> wanted;
  std::stringstream list(o.props);
  for (std::string item; std::getline(list, item, ',');) {
    if (item == "shattered") wanted.push_back(Property::Shattered);
    else if (item == "internal") wanted.push_back(Property::InternallyConnected);
    else if (item == "all-pairs") wanted.push_back(Property::AllPairsRouting);
    else throw ArgumentError("unknown property '" + item + "'");
  }
  auto g = load_graph(o.graph);
  auto s = load_categories(o.cats, g);
  bool ok = true;
  for (auto p : wanted) {
    PropertyReport r;
    switch (p) {
      case Property::Shattered: r = is_shattered(g, s); break;
      case Property::InternallyConnected: r = is_internally_connected(g, s); break;
      case Property::AllPairsRouting: r = verify_all_pairs_routing(g, s); break;
    }
    std::cout << r.to_string() << '\n';
    ok = ok && r.holds;
  }
  return ok ? kOk : kFailed;
}

int cmd_stats(const Options& o) {
  auto g = load_graph(o.graph);
  std::cout << "n=" << g.size() << "\nm=" << g.edge_count() << "\ndiam=";
  if (g.size() == 0) std::cout << "0";
  else if (!is_connected(g)) std::cout << "inf";
  else std::cout << diameter(g);
  std::cout << '\n';
  if (!o.cats.empty()) {
    auto s = load_categories(o.cats, g);
    std::cout << "categories=" << s.size() << "\nmemdim=" << s.membership_dimension() << '\n';
  }
  return kOk;
}

int cmd_bench(const Options& o) {
  auto specs = parse_bench_specs(read_file(o.spec));
  BenchOptions opts{.max_n = o.max_n, .record_timing = !o.no_timing, .threads = o.threads};
  auto rows = run_benchmark(specs, opts);
  std::ostringstream csv;
  write_csv(csv, rows);
  write_file(o.out, csv.str());
  double worst = 0;
  for (const auto& r : rows) worst = std::max(worst, r.ratio);
  std::cerr << rows.size() << " rows, max ratio " << format_decimal(worst) << '\n';
  return kOk;
}

int cmd_fixtures() {
  bool ok = true;
  for (const auto& r : run_fixtures()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Category systems and greedy routing on graphs"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a category system for a graph");
  construct->add_option("--graph", o.graph, "Edge-list file")->required();
  construct->add_option("--method", o.method, "auto|path|binary-tree|tree|graph")
      ->check(CLI::IsMember({"auto", "path", "binary-tree", "tree", "graph"}));
  construct->add_option("--out", o.out, "Output JSON file, - for stdout")->required();

  auto* route = app.add_subcommand("route", "Greedy-route one message");
  route->add_option("--graph", o.graph)->required();
  route->add_option("--cats", o.cats)->required();
  route->add_option("--from", o.from)->required();
  route->add_option("--to", o.to)->required();
  route->add_flag("--trace", o.trace, "Print every hop with its distance");

  auto* check = app.add_subcommand("check", "Check structural properties");
  check->add_option("--graph", o.graph)->required();
  check->add_option("--cats", o.cats)->required();
  check->add_option("--props", o.props, "Comma list of shattered,internal,all-pairs");

  auto* stats = app.add_subcommand("stats", "Print graph and category statistics");
  stats->add_option("--graph", o.graph)->required();
  stats->add_option("--cats", o.cats);

  auto* bench = app.add_subcommand("bench", "Run a benchmark spec and write CSV");
  bench->add_option("--spec", o.spec, "JSON spec file")->required();
  bench->add_option("--out", o.out, "CSV output file, - for stdout")->required();
  bench->add_option("--threads", o.threads, "Worker threads, 0 for all cores");
  bench->add_option("--max-n", o.max_n, "Largest accepted graph");
  bench->add_flag("--no-timing", o.no_timing, "Write construct_millis as 0 for byte-stable output");

  auto* fixtures = app.add_subcommand("fixtures", "Run the built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o);
    if (route->parsed()) return cmd_route(o);
    if (check->parsed()) return cmd_check(o);
    if (stats->parsed()) return cmd_stats(o);
    if (bench->parsed()) return cmd_bench(o);
    if (fixtures->parsed()) return cmd_fixtures();
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
