#ifndef CATROUTE_CATEGORIES_HPP
#define CATROUTE_CATEGORIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "catroute/graph.hpp"

namespace catroute {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using CategoryIndex = std::size_t;

/**
 * A set of distinct, non-empty vertex subsets ("categories") over [0, n).
 *
 * Categories are held as bitsets in canonical order (each set read as its
 * ascending member list, sets sorted lexicographically), so category indices
 * are stable for a given family regardless of input order. A per-vertex
 * membership index gives cat(u) without scanning.
 */
class CategorySystem {
 public:
  CategorySystem() = default;

  /// Empty family over n vertices.
  explicit CategorySystem(std::size_t n);

  /// Duplicates collapse. Throws ValidationError on an empty set or a member >= n.
  CategorySystem(std::size_t n, std::vector<std::vector<Vertex>> sets);
  CategorySystem(std::size_t n, std::vector<VertexSet> sets);

  std::size_t universe_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return categories_.size(); }
  bool empty() const noexcept { return categories_.empty(); }

  const VertexSet& category(CategoryIndex i) const { return categories_.at(i); }
  std::vector<Vertex> members(CategoryIndex i) const;
  std::vector<std::vector<Vertex>> to_lists() const;

  /// Indices of the categories containing u, ascending.
  std::span<const CategoryIndex> cat(Vertex u) const;
  bool contains(CategoryIndex i, Vertex u) const { return categories_.at(i).test(u); }

  std::size_t membership_dimension() const noexcept { return memdim_; }

  /// |cat(b) \ cat(a)|: categories of b that a is not in.
  std::size_t distance(Vertex a, Vertex b) const;

  void check_vertex(Vertex u) const;

  friend bool operator==(const CategorySystem& a, const CategorySystem& b) {
    return a.n_ == b.n_ && a.categories_ == b.categories_;
  }

 private:
  void canonicalize();

  std::size_t n_ = 0;
  std::vector<VertexSet> categories_;
  std::vector<std::vector<CategoryIndex>> membership_;
  std::size_t memdim_ = 0;
};

/// Lexicographic order of the ascending member lists of two equal-width sets.
bool lexicographically_less(const VertexSet& a, const VertexSet& b);

inline std::span<const CategoryIndex> cat(const CategorySystem& s, Vertex u) { return s.cat(u); }
inline std::size_t membership_dimension(const CategorySystem& s) {
  return s.membership_dimension();
}
inline std::size_t category_distance(const CategorySystem& s, Vertex a, Vertex b) {
  return s.distance(a, b);
}

/// {"n": <int>, "categories": [[...], ...]}. When expected_n is given the file's n must match.
CategorySystem parse_categories(std::string_view text,
                                std::optional<std::size_t> expected_n = std::nullopt);

/// Canonical JSON, newline-terminated.
std::string to_json(const CategorySystem& s);

}  // namespace catroute

#endif  // CATROUTE_CATEGORIES_HPP
