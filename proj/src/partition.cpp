#include "detloci/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace detloci {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Integer factorial(long n) {
  Integer result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw InputError("partition parts must be positive: " + str());
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InputError("partition parts must be weakly decreasing: " + str());
    }
    size_ += parts_[i];
  }
}

Partition Partition::hook(int arm, int ones) {
  std::vector<int> parts{arm};
  parts.insert(parts.end(), static_cast<size_t>(ones), 1);
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols) {
  return Partition(std::vector<int>(static_cast<size_t>(rows), cols));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

namespace {

// Length of column `col` (0-based) of the diagram.
int column_length(const Partition& lambda, int col) {
  int len = 0;
  while (len < lambda.length() && lambda[len] > col) ++len;
  return len;
}

}  // namespace

std::vector<int> hook_lengths(const Partition& lambda) {
  std::vector<int> hooks;
  hooks.reserve(static_cast<size_t>(lambda.size()));
  for (int row = 0; row < lambda.length(); ++row) {
    for (int col = 0; col < lambda[row]; ++col) {
      const int arm = lambda[row] - col - 1;
      const int leg = column_length(lambda, col) - row - 1;
      hooks.push_back(arm + leg + 1);
    }
  }
  return hooks;
}

Integer hook_product(const Partition& lambda) {
  Integer product = 1;
  for (int h : hook_lengths(lambda)) product *= h;
  return product;
}

Integer syt_count(const Partition& lambda) {
  // Interleave the factors of n! with the hook lengths so the running value
  // stays close to an integer of moderate size.
  std::vector<int> hooks = hook_lengths(lambda);
  std::sort(hooks.begin(), hooks.end());
  Rational running = 1;
  for (size_t k = 0; k < hooks.size(); ++k) {
    running *= static_cast<long>(k + 1);
    running /= hooks[k];
  }
  return to_integer(running, "hook length formula for " + lambda.str());
}

namespace {

Integer syt_inductive(const Partition& mu, std::map<Partition, Integer>& memo) {
  if (mu.empty()) return 1;
  if (auto it = memo.find(mu); it != memo.end()) return it->second;
  Integer total = 0;
  for (const Partition& lambda : remove_one_box(mu)) {
    total += syt_inductive(lambda, memo);
  }
  memo.emplace(mu, total);
  return total;
}

void partitions_bounded(int remaining, int max_part, std::vector<int>& prefix,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_bounded(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Integer syt_count_inductive(const Partition& lambda) {
  std::map<Partition, Integer> memo;
  return syt_inductive(lambda, memo);
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_bounded(n, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate_supersets(const Partition& inner, int size) {
  std::vector<Partition> out;
  if (size < inner.size()) return out;
  for (Partition& lambda : enumerate_partitions(size)) {
    if (contains(lambda, inner)) out.push_back(std::move(lambda));
  }
  return out;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> parts = lambda.parts();
  for (int row = 0; row <= lambda.length(); ++row) {
    if (row > 0 && lambda[row - 1] == lambda[row]) continue;
    std::vector<int> grown = parts;
    if (row == lambda.length()) {
      grown.push_back(1);
    } else {
      ++grown[static_cast<size_t>(row)];
    }
    out.emplace_back(std::move(grown));
  }
  return out;
}

std::vector<Partition> remove_one_box(const Partition& lambda) {
  std::vector<Partition> out;
  for (int row = 0; row < lambda.length(); ++row) {
    if (lambda[row] == lambda[row + 1]) continue;
    std::vector<int> shrunk = lambda.parts();
    --shrunk[static_cast<size_t>(row)];
    out.emplace_back(std::move(shrunk));
  }
  return out;
}

}  // namespace detloci
