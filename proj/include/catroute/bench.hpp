#ifndef CATROUTE_BENCH_HPP
#define CATROUTE_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catroute/generators.hpp"

namespace catroute {

/// One CSV row of the benchmark.
struct BenchRecord {
  std::uint64_t seed = 0;
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t diam = 0;
  std::size_t memdim = 0;
  bool all_pairs_ok = false;
  std::size_t max_route_len = 0;
  double mean_route_len = 0.0;
  double construct_millis = 0.0;
  /// memdim / (diam + log2 n)^2; 0 when the denominator is 0.
  double ratio = 0.0;
};

struct BenchOptions {
  /// Specs above this size are rejected; all-pairs verification is quadratic.
  std::size_t max_n = 500;
  /// When false construct_millis is written as 0 so output is byte-stable.
  bool record_timing = true;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

/// Reads {"specs": [...]} or a bare array of spec objects.
std::vector<GeneratorSpec> parse_bench_specs(std::string_view text);

/**
 * Generates, constructs and verifies every spec, in parallel. Records come
 * back in spec order. A routing failure throws InternalError naming the
 * witness pair.
 */
std::vector<BenchRecord> run_benchmark(std::span<const GeneratorSpec> specs,
                                       const BenchOptions& options = {});

BenchRecord bench_one(const GeneratorSpec& spec, const BenchOptions& options = {});

void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Fixed-point with six decimals, independent of the global locale.
std::string format_decimal(double value);

}  // namespace catroute

#endif  // CATROUTE_BENCH_HPP
