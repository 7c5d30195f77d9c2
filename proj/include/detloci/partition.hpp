#pragma once

#include "detloci/number.hpp"

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace detloci {

/// Weakly decreasing sequence of positive integers, identified with its
/// Young diagram. Trailing zeros are stripped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// (k, 1, ..., 1) with `ones` trailing ones.
  static Partition hook(int arm, int ones);
  /// `rows` rows of length `cols`.
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Row length with zero padding past the last row.
  int operator[](int row) const {
    return row < length() ? parts_[static_cast<size_t>(row)] : 0;
  }

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Hook length of every box, row-major.
std::vector<int> hook_lengths(const Partition& lambda);

/// Product of the hook lengths; 1 for the empty partition.
Integer hook_product(const Partition& lambda);

/// Number of standard Young tableaux via the hook length formula.
Integer syt_count(const Partition& lambda);

/// Number of standard Young tableaux via removal of the largest entry,
/// f^mu = sum of f^lambda over lambda obtained by deleting one corner.
Integer syt_count_inductive(const Partition& lambda);

/// True iff the diagram of `inner` fits inside the diagram of `outer`.
bool contains(const Partition& outer, const Partition& inner);

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> enumerate_partitions(int n);

/// All partitions of `size` whose diagram contains `inner`, in the order of
/// enumerate_partitions. Empty when size < |inner|.
std::vector<Partition> enumerate_supersets(const Partition& inner, int size);

/// Partitions obtained by adding a single box to `lambda`, in reverse
/// lexicographic order.
std::vector<Partition> add_one_box(const Partition& lambda);

/// Partitions obtained by removing a single corner box.
std::vector<Partition> remove_one_box(const Partition& lambda);

}  // namespace detloci
