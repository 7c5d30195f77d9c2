#include "detloci/partition.hpp"
#include "series_oracle.hpp"

#include "doctest.h"

#include <algorithm>

using namespace detloci;

TEST_CASE("partition normalization") {
  CHECK(Partition({3, 2, 0, 0}).parts() == std::vector<int>{3, 2});
  CHECK(Partition({3, 2, 0}) == Partition({3, 2}));
  CHECK(Partition{}.empty());
  CHECK(Partition({4, 1, 1}).size() == 6);
  CHECK(Partition({2, 1})[5] == 0);
  CHECK_THROWS_AS(Partition({1, 2}), InputError);
  CHECK_THROWS_AS(Partition({2, -1}), InputError);
  CHECK(Partition::hook(3, 2) == Partition({3, 1, 1}));
  CHECK(Partition::rectangle(2, 3) == Partition({3, 3}));
  CHECK(Partition({3, 2}).str() == "(3,2)");
}

TEST_CASE("tableau counts") {
  CHECK(syt_count({3, 2}) == 5);
  CHECK(syt_count({2, 2}) == 2);
  CHECK(syt_count({1}) == 1);
  CHECK(syt_count_inductive({3, 2}) == 5);
  CHECK(syt_count_inductive({3, 1}) + syt_count_inductive({2, 2}) == 5);
  CHECK(syt_count_inductive(Partition{}) == 1);
  CHECK(syt_count(Partition{}) == 1);
  CHECK(syt_count_inductive({2, 1}) == 2);
  CHECK(hook_product({3, 2}) == 24);
  CHECK(hook_product({1}) == 1);
  CHECK(hook_product({2, 2}) == 12);
  CHECK(hook_lengths({3, 2}) == std::vector<int>{4, 3, 1, 2, 1});
  CHECK(hook_lengths({2, 2}) == std::vector<int>{3, 2, 2, 1});
}

TEST_CASE("tableau counts match brute-force fillings") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& shape : oracle::partitions(n)) {
      const Partition lambda(shape);
      CAPTURE(lambda.str());
      CHECK(syt_count(lambda) == oracle::standard_fillings(shape));
    }
  }
}

TEST_CASE("hook-length and inductive counts agree up to 12 boxes") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      CHECK(syt_count(lambda) == syt_count_inductive(lambda));
}

TEST_CASE("hook closed form") {
  for (int k = 1; k <= 12; ++k)
    for (int j = 0; k + j <= 12; ++j)
      CHECK(syt_count(Partition::hook(k, j)) == binomial(k + j - 1, k - 1));
}

TEST_CASE("sum of squared counts is n factorial") {
  for (int n = 0; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& lambda : enumerate_partitions(n)) total += syt_count(lambda) * syt_count(lambda);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("large shapes stay exact") {
  // 30 boxes: 30! does not fit in 64 bits.
  const Partition lambda({10, 10, 10});
  CHECK(syt_count(lambda) == syt_count_inductive(lambda));
  CHECK(syt_count(lambda) * hook_product(lambda) == factorial(30));
}

TEST_CASE("containment") {
  CHECK(contains({3, 2}, {2, 2}));
  CHECK_FALSE(contains({4}, {2, 2}));
  for (const auto& lambda : enumerate_partitions(5)) CHECK(contains(lambda, Partition{}));
  CHECK(contains({2, 2}, {2, 2}));
  CHECK_FALSE(contains({2, 1, 1}, {2, 2}));
}

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0).size() == 1);
  const auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four.front() == Partition({4}));
  CHECK(four.back() == Partition({1, 1, 1, 1}));
  CHECK(std::is_sorted(four.begin(), four.end(),
                       [](const Partition& a, const Partition& b) { return a > b; }));
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n)
    CHECK(enumerate_partitions(n).size() == static_cast<size_t>(counts[n]));
}

TEST_CASE("supersets of the square") {
  const Partition square{2, 2};
  CHECK(enumerate_supersets(square, 4) == std::vector<Partition>{square});
  CHECK(enumerate_supersets(square, 5) == std::vector<Partition>{{3, 2}, {2, 2, 1}});
  CHECK(enumerate_supersets(square, 3).empty());
  for (int size = 4; size <= 10; ++size) {
    const auto all = enumerate_partitions(size);
    size_t expected = 0;
    for (const auto& lambda : all) expected += contains(lambda, square) ? 1 : 0;
    const auto sup = enumerate_supersets(square, size);
    CHECK(sup.size() == expected);
    for (const auto& lambda : sup) {
      CHECK(contains(lambda, square));
      CHECK(std::find(all.begin(), all.end(), lambda) != all.end());
    }
  }
}

TEST_CASE("adding and removing boxes") {
  CHECK(add_one_box(Partition{}) == std::vector<Partition>{{1}});
  CHECK(add_one_box({1}) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(add_one_box({2, 2}) == std::vector<Partition>{{3, 2}, {2, 2, 1}});
  auto corners = remove_one_box({3, 2});
  std::sort(corners.begin(), corners.end());
  CHECK(corners == std::vector<Partition>{{2, 2}, {3, 1}});
  CHECK(remove_one_box(Partition{}).empty());
  for (const auto& lambda : enumerate_partitions(7))
    for (const auto& mu : add_one_box(lambda)) {
      const auto back = remove_one_box(mu);
      CHECK(std::find(back.begin(), back.end(), lambda) != back.end());
    }
}
