#include "detloci/schur.hpp"

#include <unordered_map>

namespace detloci {

ClassSequence ClassSequence::from_total(const ChowClass& total) {
  if (total.constant_term() != 1) {
    throw InputError("class sequence needs constant term 1");
  }
  std::vector<ChowClass> values;
  const int dim = total.space().dimension();
  values.reserve(static_cast<size_t>(dim) + 1);
  for (int k = 0; k <= dim; ++k) values.push_back(total.part(k));
  return ClassSequence(std::move(values));
}

ClassSequence::ClassSequence(std::vector<ChowClass> values)
    : values_(std::move(values)) {
  if (values_.empty() || values_.front() != values_.front().space().one()) {
    throw InputError("class sequence must start with the unit");
  }
  for (size_t k = 0; k < values_.size(); ++k) {
    if (!values_[k].is_homogeneous(static_cast<int>(k))) {
      throw InputError("entry " + std::to_string(k) +
                       " of a class sequence is not homogeneous of degree " +
                       std::to_string(k));
    }
  }
}

ChowClass ClassSequence::operator[](int k) const {
  if (k < 0 || k > bound()) return ambient()->zero();
  return values_[static_cast<size_t>(k)];
}

ChowClass ClassSequence::total() const {
  ChowClass sum = ambient()->zero();
  for (const ChowClass& x : values_) sum += x;
  return sum;
}

ClassSequence s_from_c(const ClassSequence& c) {
  if (c[0] != c.ambient()->one()) throw InputError("c_0 must be 1");
  std::vector<ChowClass> s{c.ambient()->one()};
  for (int k = 1; k <= c.bound(); ++k) {
    // s_k = sum_{i=1}^k (-1)^{i+1} c_i s_{k-i}
    ChowClass sk = c.ambient()->zero();
    for (int i = 1; i <= k; ++i) {
      const ChowClass term = c[i] * s[static_cast<size_t>(k - i)];
      if (i % 2 == 1) {
        sk += term;
      } else {
        sk -= term;
      }
    }
    s.push_back(std::move(sk));
  }
  return ClassSequence(std::move(s));
}

namespace {

// Laplace expansion along rows, memoized on the set of columns already used.
class JacobiTrudi {
 public:
  JacobiTrudi(const Partition& lambda, const ClassSequence& s)
      : lambda_(lambda), s_(s), size_(lambda.length()) {}

  ChowClass determinant() { return expand(0, 0); }

 private:
  ChowClass entry(int row, int col) const {
    return s_[lambda_[row] - row + col];
  }

  ChowClass expand(int row, unsigned used) {
    if (row == size_) return s_.ambient()->one();
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    ChowClass sum = s_.ambient()->zero();
    int sign = 1;
    for (int col = 0; col < size_; ++col) {
      if (used & (1u << col)) continue;
      const ChowClass a = entry(row, col);
      if (!a.is_zero()) {
        ChowClass term = a * expand(row + 1, used | (1u << col));
        if (sign > 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      sign = -sign;  // columns of the minor, not of the full matrix
    }
    memo_.emplace(used, sum);
    return sum;
  }

  const Partition& lambda_;
  const ClassSequence& s_;
  int size_;
  std::unordered_map<unsigned, ChowClass> memo_;
};

}  // namespace

ChowClass schur(const Partition& lambda, const ClassSequence& s) {
  if (lambda.length() > 30) throw InputError("partition too long");
  if (lambda.size() > s.ambient()->dimension()) return s.ambient()->zero();
  return JacobiTrudi(lambda, s).determinant();
}

std::vector<Partition> pieri_expand(const Partition& lambda) {
  return add_one_box(lambda);
}

}  // namespace detloci
