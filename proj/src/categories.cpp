#include "catroute/categories.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "catroute/errors.hpp"

namespace catroute {

bool lexicographically_less(const VertexSet& a, const VertexSet& b) {
  VertexSet diff = a ^ b;
  auto x = diff.find_first();
  if (x == VertexSet::npos) return false;
  // The member lists agree up to x. Whichever set holds x has x where the
  // other has either a larger member or nothing left.
  if (b.test(x)) return a.find_next(x) == VertexSet::npos;
  return b.find_next(x) != VertexSet::npos;
}

CategorySystem::CategorySystem(std::size_t n) : n_(n), membership_(n) {}

CategorySystem::CategorySystem(std::size_t n, std::vector<std::vector<Vertex>> sets) : n_(n) {
  categories_.reserve(sets.size());
  for (const auto& list : sets) {
    if (list.empty()) throw ValidationError("empty category");
    VertexSet bits(n);
    for (Vertex v : list) {
      if (v >= n) {
        throw ValidationError("category member " + std::to_string(v) + " outside [0, " +
                              std::to_string(n) + ")");
      }
      bits.set(v);
    }
    categories_.push_back(std::move(bits));
  }
  canonicalize();
}

CategorySystem::CategorySystem(std::size_t n, std::vector<VertexSet> sets)
    : n_(n), categories_(std::move(sets)) {
  for (const auto& bits : categories_) {
    if (bits.size() != n) {
      throw ValidationError("category bitset has width " + std::to_string(bits.size()) +
                            ", expected " + std::to_string(n));
    }
    if (bits.none()) throw ValidationError("empty category");
  }
  canonicalize();
}

void CategorySystem::canonicalize() {
  std::sort(categories_.begin(), categories_.end(), lexicographically_less);
  categories_.erase(std::unique(categories_.begin(), categories_.end()), categories_.end());
  membership_.assign(n_, {});
  for (CategoryIndex i = 0; i < categories_.size(); ++i) {
    const auto& bits = categories_[i];
    for (auto v = bits.find_first(); v != VertexSet::npos; v = bits.find_next(v)) {
      membership_[v].push_back(i);
    }
  }
  memdim_ = 0;
  for (const auto& m : membership_) memdim_ = std::max(memdim_, m.size());
}

std::vector<Vertex> CategorySystem::members(CategoryIndex i) const {
  const auto& bits = categories_.at(i);
  std::vector<Vertex> out;
  out.reserve(bits.count());
  for (auto v = bits.find_first(); v != VertexSet::npos; v = bits.find_next(v)) out.push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> CategorySystem::to_lists() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(size());
  for (CategoryIndex i = 0; i < size(); ++i) out.push_back(members(i));
  return out;
}

std::span<const CategoryIndex> CategorySystem::cat(Vertex u) const {
  check_vertex(u);
  return membership_[u];
}

std::size_t CategorySystem::distance(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  std::size_t d = 0;
  for (CategoryIndex i : membership_[b]) {
    if (!categories_[i].test(a)) ++d;
  }
  return d;
}

void CategorySystem::check_vertex(Vertex u) const {
  if (u >= n_) {
    throw ArgumentError("vertex " + std::to_string(u) + " out of range [0, " +
                        std::to_string(n_) + ")");
  }
}

CategorySystem parse_categories(std::string_view text, std::optional<std::size_t> expected_n) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed category JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("categories")) {
    throw ParseError("category file must be an object with keys \"n\" and \"categories\"");
  }
  const auto& jn = doc["n"];
  if (!jn.is_number_unsigned()) throw ParseError("\"n\" must be a non-negative integer");
  auto n = jn.get<std::size_t>();
  if (expected_n && *expected_n != n) {
    throw ValidationError("category file is over " + std::to_string(n) +
                          " vertices but the graph has " + std::to_string(*expected_n));
  }
  const auto& jcats = doc["categories"];
  if (!jcats.is_array()) throw ParseError("\"categories\" must be an array");
  std::vector<std::vector<Vertex>> sets;
  sets.reserve(jcats.size());
  for (const auto& jset : jcats) {
    if (!jset.is_array()) throw ParseError("each category must be an array of vertex ids");
    auto& list = sets.emplace_back();
    for (const auto& jv : jset) {
      if (!jv.is_number_unsigned()) {
        throw ParseError("category members must be non-negative integers");
      }
      list.push_back(jv.get<Vertex>());
    }
  }
  return CategorySystem(n, std::move(sets));
}

std::string to_json(const CategorySystem& s) {
  std::string out = "{\"n\":" + std::to_string(s.universe_size()) + ",\"categories\":[";
  for (CategoryIndex i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += '[';
    bool first = true;
    for (Vertex v : s.members(i)) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(v);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

}  // namespace catroute
