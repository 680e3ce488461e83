#include "catroute/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "catroute/checks.hpp"
#include "catroute/construction.hpp"
#include "catroute/errors.hpp"

namespace catroute {

std::vector<GeneratorSpec> parse_bench_specs(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed bench spec: ") + e.what());
  }
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("specs")) throw ParseError("bench spec object needs a \"specs\" array");
    list = &doc["specs"];
  }
  if (!list->is_array()) throw ParseError("bench specs must be an array");
  std::vector<GeneratorSpec> specs;
  for (const auto& j : *list) specs.push_back(spec_from_json(j));
  return specs;
}

BenchRecord bench_one(const GeneratorSpec& spec, const BenchOptions& options) {
  if (spec.n > options.max_n) {
    throw ArgumentError("spec n=" + std::to_string(spec.n) + " exceeds the verification cap " +
                        std::to_string(options.max_n));
  }
  Graph g = generate(spec);

  auto start = std::chrono::steady_clock::now();
  CategorySystem s = construct_categories(g, spec.method);
  auto stop = std::chrono::steady_clock::now();

  BenchRecord r;
  r.seed = spec.seed;
  r.family = std::string(family_name(spec.family));
  r.n = g.size();
  r.m = g.edge_count();
  r.diam = diameter(g);
  r.memdim = s.membership_dimension();
  if (options.record_timing) {
    r.construct_millis = std::chrono::duration<double, std::milli>(stop - start).count();
  }

  std::size_t total_hops = 0, routes = 0;
  auto report = verify_all_pairs_routing(g, s, [&](const RouteTrace& trace) {
    r.max_route_len = std::max(r.max_route_len, trace.hops());
    total_hops += trace.hops();
    ++routes;
  });
  r.all_pairs_ok = report.holds;
  if (!report.holds) {
    throw InternalError("constructed categories failed on " + r.family + " n=" +
                        std::to_string(r.n) + " seed=" + std::to_string(r.seed) + ": " +
                        report.to_string());
  }
  r.mean_route_len = routes ? static_cast<double>(total_hops) / static_cast<double>(routes) : 0.0;
  double scale = static_cast<double>(r.diam) + std::log2(static_cast<double>(r.n));
  r.ratio = scale > 0 ? static_cast<double>(r.memdim) / (scale * scale) : 0.0;
  return r;
}

std::vector<BenchRecord> run_benchmark(std::span<const GeneratorSpec> specs,
                                       const BenchOptions& options) {
  std::vector<BenchRecord> records(specs.size());
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(specs.size())));

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  std::size_t failure_index = specs.size();

  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      try {
        records[i] = bench_one(specs[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::string format_decimal(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "seed,family,n,m,diam,memdim,all_pairs_ok,max_route_len,mean_route_len,"
         "construct_millis,ratio\n";
  for (const auto& r : records) {
    out << r.seed << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.diam << ','
        << r.memdim << ',' << (r.all_pairs_ok ? "true" : "false") << ',' << r.max_route_len
        << ',' << format_decimal(r.mean_route_len) << ',' << format_decimal(r.construct_millis)
        << ',' << format_decimal(r.ratio) << '\n';
  }
}

}  // namespace catroute
