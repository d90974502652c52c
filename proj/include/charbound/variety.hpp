#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charbound/integer.hpp"

namespace charbound {

/// Smooth complete intersection of k hypersurfaces of degrees d_1..d_k in
/// P^m. The multidegree is kept sorted ascending; two values describing the
/// same family compare equal. An empty multidegree is P^m itself.
class CompleteIntersection {
 public:
  CompleteIntersection(int ambient_dim, std::vector<int> multidegree);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<int>& multidegree() const { return multidegree_; }
  int codim() const { return static_cast<int>(multidegree_.size()); }
  int dimension() const { return ambient_dim_ - codim(); }
  Integer degree() const;
  bool is_hypersurface() const { return codim() == 1; }

  /// X cut by a general hyperplane, viewed in P^{m-1}. Requires dim >= 2.
  CompleteIntersection hyperplane_section() const;

  /// Compact label such as "X(4;2,2)".
  std::string label() const;
  /// "2;2" style, used in CSV columns.
  std::string multidegree_string() const;

  /// Canonical ordering: ambient dim, then codim, then multidegree.
  friend std::strong_ordering operator<=>(const CompleteIntersection& a,
                                          const CompleteIntersection& b);
  friend bool operator==(const CompleteIntersection&, const CompleteIntersection&) = default;

 private:
  int ambient_dim_;
  std::vector<int> multidegree_;
};

inline int dimension(const CompleteIntersection& ci) { return ci.dimension(); }
inline Integer degree(const CompleteIntersection& ci) { return ci.degree(); }
inline CompleteIntersection hyperplane_section(const CompleteIntersection& ci) {
  return ci.hyperplane_section();
}

/// Parses { "ambient_dim": int, "multidegree": [int, ...] }.
CompleteIntersection variety_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CompleteIntersection& ci);

/// Chern / Pontryagin multi-index (i_1, ..., i_r), entries >= 1. The
/// entries are kept in the order given; products are commutative so order
/// never changes a pairing.
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);

  int weight() const;
  std::size_t length() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// All multi-indices with weight <= max_weight, as weakly decreasing
/// sequences (one representative per multiset), including the empty one.
std::vector<MultiIndex> multi_indices_up_to(int max_weight);

/// Weakly decreasing sequence of nonnegative parts; trailing zeros are
/// dropped so equal partitions have equal representations.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  /// Part i (0-based), zero beyond the length.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  bool fits_in_box(int rows, int cols) const;
  /// Complement inside the rows x cols box, rotated by 180 degrees.
  Partition complement(int rows, int cols) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partitions with exactly `size` cells fitting the rows x cols box.
std::vector<Partition> partitions_in_box(int size, int rows, int cols);
/// Every partition fitting the box, ordered by size then lexicographically.
std::vector<Partition> all_partitions_in_box(int rows, int cols);

/// Parses "2,1" or "(2,1)"; empty text gives the empty sequence.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace charbound
