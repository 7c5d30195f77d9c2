#pragma once

#include "detloci/chow_ring.hpp"
#include "detloci/partition.hpp"

#include <vector>

namespace detloci {

/// Sequence x_0 = 1, x_1, ..., x_D of homogeneous classes with x_k of degree
/// k, where D = dim of the ambient. Indices outside [0, D] read as zero.
class ClassSequence {
 public:
  /// Degree components of a class with constant term 1.
  static ClassSequence from_total(const ChowClass& total);

  explicit ClassSequence(std::vector<ChowClass> values);

  const Ambient& ambient() const { return values_.front().ambient(); }
  int bound() const { return static_cast<int>(values_.size()) - 1; }
  ChowClass operator[](int k) const;
  const std::vector<ChowClass>& values() const { return values_; }

  /// x_0 + x_1 + ... + x_D.
  ChowClass total() const;

  friend bool operator==(const ClassSequence&, const ClassSequence&) = default;

 private:
  std::vector<ChowClass> values_;
};

/// The sequence s with (sum c_i t^i)(sum (-1)^i s_i t^i) = 1. Applying it
/// twice returns the input.
ClassSequence s_from_c(const ClassSequence& c);

/// Jacobi-Trudi determinant det(s_{lambda_i - i + j}).
ChowClass schur(const Partition& lambda, const ClassSequence& s);

/// Shapes in Pieri's rule for s_1 * s_lambda.
std::vector<Partition> pieri_expand(const Partition& lambda);

}  // namespace detloci
