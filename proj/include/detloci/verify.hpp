#pragma once

#include "detloci/config.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace detloci {

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failures

  bool passed() const { return failures == 0 && cases > 0; }
  void check(bool ok, const std::string& what);
};

using Rng = std::mt19937_64;

/// Random rank-r split bundle with multidegrees drawn from [lo, hi].
BundleSpec random_split_bundle(const Ambient& space, int rank, Rng& rng,
                               int lo = -2, int hi = 2);

/// Random config on one of several 4- or 5-dimensional products of
/// projective spaces. With calabi_yau set, F is adjusted so that
/// c1(F) - c1(E) = c1(T_M).
InstanceConfig random_config(Rng& rng, int dimension, int max_rank,
                             bool calabi_yau, bool polarized);

SuiteResult verify_tableau_counts(int max_boxes);
SuiteResult verify_syt_square_sum(int max_n);
SuiteResult verify_hook_closed_form(int max_boxes);
SuiteResult verify_pieri(int max_size, Rng& rng);
SuiteResult verify_power_identity(int max_power, Rng& rng);
SuiteResult verify_involution(int cases, Rng& rng);
SuiteResult verify_projective_bundles(int cases, Rng& rng);
SuiteResult verify_twist_formulas(int max_rank, int max_k, int cases, Rng& rng);
SuiteResult verify_square_symmetry(int max_rank, int cases, Rng& rng);
SuiteResult verify_theorem_vs_corollary(int instances, int max_rank, Rng& rng);
SuiteResult verify_euler_characteristics(int instances, int max_rank, Rng& rng);
SuiteResult verify_dual_routes(
    int instances, int max_rank, Rng& rng,
    Projectivization convention = Projectivization::Quotients);

struct VerifyOptions {
  int depth = 4;
  std::uint64_t seed = 20161004;
  int corollary_instances = 50;
  int dual_route_instances = 20;
  Projectivization convention = Projectivization::Quotients;
};

/// All suites at the given depth: partitions up to 2*depth boxes, square
/// sums up to depth+2, Schur identities up to size depth, bundle ranks up
/// to min(4, depth) and twist degrees up to min(5, depth).
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace detloci
