#include "detloci/verify.hpp"

#include <algorithm>
#include <sstream>

namespace detloci {

void SuiteResult::check(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (messages.size() < 5) messages.push_back(what);
}

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<int> pick_dims(Rng& rng, int dimension) {
  static const std::vector<std::vector<int>> four = {
      {4}, {1, 3}, {2, 2}, {1, 1, 2}};
  static const std::vector<std::vector<int>> five = {{5}, {1, 4}, {2, 3}};
  static const std::vector<std::vector<int>> six = {{6}, {2, 4}, {3, 3}};
  const auto& pool = dimension == 4 ? four : dimension == 5 ? five : six;
  if (dimension < 4 || dimension > 6) {
    throw InputError("random configs cover dimensions 4 to 6");
  }
  return pool[static_cast<size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
}

// Random class with integer coefficients in degrees [1, max_degree].
ChowClass random_class(const Ambient& space, Rng& rng, int terms,
                       int max_degree, bool unit_constant) {
  ChowClass x = unit_constant ? space->one() : space->zero();
  const int gens = space->generator_count();
  for (int t = 0; t < terms; ++t) {
    const int degree = uniform(rng, unit_constant ? 1 : 0, max_degree);
    Exponents m(static_cast<size_t>(gens), 0);
    for (int b = 0; b < degree; ++b) ++m[static_cast<size_t>(uniform(rng, 0, gens - 1))];
    x.add_monomial(std::move(m), uniform(rng, -3, 3));
  }
  return x;
}

std::string describe(const InstanceConfig& config) {
  return to_json(config).dump();
}

}  // namespace

BundleSpec random_split_bundle(const Ambient& space, int rank, Rng& rng, int lo,
                               int hi) {
  std::vector<std::vector<int>> degrees;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> d;
    for (size_t f = 0; f < space->factor_dims().size(); ++f) {
      d.push_back(uniform(rng, lo, hi));
    }
    degrees.push_back(std::move(d));
  }
  return BundleSpec::from_multidegrees(space, degrees);
}

InstanceConfig random_config(Rng& rng, int dimension, int max_rank,
                             bool calabi_yau, bool polarized) {
  InstanceConfig c;
  c.dims = pick_dims(rng, dimension);
  c.ambient_kind = c.dims.size() == 1 ? "projective_space" : "product";
  const int rank = uniform(rng, 2, std::max(2, max_rank));
  const size_t factors = c.dims.size();
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e, f;
    for (size_t j = 0; j < factors; ++j) {
      e.push_back(uniform(rng, -2, 1));
      f.push_back(uniform(rng, -1, 2));
    }
    c.e.push_back(std::move(e));
    c.f.push_back(std::move(f));
  }
  if (calabi_yau) {
    for (size_t j = 0; j < factors; ++j) {
      int diff = 0;
      for (int i = 0; i < rank; ++i) {
        diff += c.f[static_cast<size_t>(i)][j] - c.e[static_cast<size_t>(i)][j];
      }
      c.f[0][j] += c.dims[j] + 1 - diff;
    }
  }
  if (polarized) {
    std::vector<int> h;
    for (size_t j = 0; j < factors; ++j) h.push_back(uniform(rng, 0, 2));
    c.polarization = std::move(h);
  }
  return c;
}

SuiteResult verify_tableau_counts(int max_boxes) {
  SuiteResult r{"hook length = inductive tableau count"};
  for (int n = 0; n <= max_boxes; ++n) {
    for (const Partition& lambda : enumerate_partitions(n)) {
      r.check(syt_count(lambda) == syt_count_inductive(lambda), lambda.str());
    }
  }
  return r;
}

SuiteResult verify_syt_square_sum(int max_n) {
  SuiteResult r{"sum of (f^lambda)^2 = n!"};
  for (int n = 0; n <= max_n; ++n) {
    Integer sum = 0;
    for (const Partition& lambda : enumerate_partitions(n)) {
      const Integer f = syt_count(lambda);
      sum += f * f;
    }
    r.check(sum == factorial(n), "n = " + std::to_string(n));
  }
  return r;
}

SuiteResult verify_hook_closed_form(int max_boxes) {
  SuiteResult r{"hook shapes f = C(n-1, k-1)"};
  for (int n = 1; n <= max_boxes; ++n) {
    for (int k = 1; k <= n; ++k) {
      const Partition hook = Partition::hook(k, n - k);
      r.check(syt_count(hook) == binomial(n - 1, k - 1), hook.str());
    }
  }
  return r;
}

SuiteResult verify_pieri(int max_size, Rng& rng) {
  SuiteResult r{"Pieri rule s_1 s_lambda = sum s_mu"};
  const Ambient p8 = make_projective_space(8);
  for (int trial = 0; trial < 3; ++trial) {
    VirtualPair pair(random_split_bundle(p8, 4, rng, -3, 3),
                     random_split_bundle(p8, 4, rng, -3, 3));
    const ClassSequence& s = pair.segre();
    for (int size = 0; size <= max_size; ++size) {
      for (const Partition& lambda : enumerate_partitions(size)) {
        ChowClass rhs = p8->zero();
        for (const Partition& mu : pieri_expand(lambda)) rhs += schur(mu, s);
        r.check(s[1] * schur(lambda, s) == rhs, lambda.str());
      }
    }
  }
  return r;
}

SuiteResult verify_power_identity(int max_power, Rng& rng) {
  SuiteResult r{"s_1^l = sum f^lambda s_lambda"};
  const Ambient p8 = make_projective_space(8);
  const Ambient grid = make_product({2, 2, 2});
  for (const Ambient& space : {p8, grid}) {
    VirtualPair pair(random_split_bundle(space, 3, rng),
                     random_split_bundle(space, 3, rng));
    const ClassSequence& s = pair.segre();
    for (int l = 0; l <= max_power; ++l) {
      ChowClass rhs = space->zero();
      for (const Partition& lambda : enumerate_partitions(l)) {
        rhs += schur(lambda, s) * Rational(syt_count(lambda));
      }
      r.check(s[1].pow(l) == rhs, "l = " + std::to_string(l));
    }
  }
  return r;
}

SuiteResult verify_involution(int cases, Rng& rng) {
  SuiteResult r{"c <-> s transform is an involution"};
  const Ambient spaces[] = {make_projective_space(6), make_product({2, 3})};
  for (int t = 0; t < cases; ++t) {
    const Ambient& space = spaces[t % 2];
    const ClassSequence c = ClassSequence::from_total(
        random_class(space, rng, 8, space->dimension(), true));
    const ClassSequence s = s_from_c(c);
    r.check(s_from_c(s) == c, "involution, case " + std::to_string(t));
    // (sum c_i)(sum (-1)^i s_i) = 1
    r.check(c.total() * dual_chern(s.total()) == space->one(),
            "generating identity, case " + std::to_string(t));
  }
  return r;
}

SuiteResult verify_projective_bundles(int cases, Rng& rng) {
  SuiteResult r{"projective bundle pushforward"};
  for (int t = 0; t < cases; ++t) {
    const Ambient base = t % 2 ? make_projective_space(4) : make_product({2, 2});
    const int rank = uniform(rng, 1, 3);
    const BundleSpec f = random_split_bundle(base, rank, rng);
    const Ambient bundle = make_proj_bundle(f);
    const std::string tag = " (case " + std::to_string(t) + ")";
    if (rank == 1) r.check(bundle->xi() == pullback(f.chern(1), bundle),
                           "rank one: xi = c1(F)" + tag);
    const ChowClass alpha = random_class(base, rng, 3, base->dimension(), false);
    for (int e = 0; e <= bundle->dimension(); ++e) {
      r.check(pushforward(bundle->xi().pow(e) * pullback(alpha, bundle)) ==
                  segre_pushforward(bundle, e, alpha),
              "p_* xi^" + std::to_string(e) + tag);
    }
    const ChowClass x = random_class(bundle, rng, 6, bundle->dimension(), false);
    const ChowClass y = random_class(base, rng, 4, base->dimension(), false);
    r.check(pushforward(x * pullback(y, bundle)) == pushforward(x) * y,
            "projection formula" + tag);
    const ChowClass top = x.part(bundle->dimension());
    r.check(integrate(pushforward(top)) == integrate(top),
            "integral through p_*" + tag);
  }
  return r;
}

SuiteResult verify_twist_formulas(int max_rank, int max_k, int cases, Rng& rng) {
  SuiteResult r{"twist formulas: closed form = direct expansion"};
  const Ambient spaces[] = {make_projective_space(5), make_product({2, 3})};
  for (int t = 0; t < cases; ++t) {
    const Ambient& space = spaces[t % 2];
    const int rank = 1 + t % std::max(1, max_rank);
    const BundleSpec e = random_split_bundle(space, rank, rng);
    const BundleSpec f = random_split_bundle(space, rank, rng);
    std::vector<int> l_degree;
    for (size_t j = 0; j < space->factor_dims().size(); ++j) {
      l_degree.push_back(uniform(rng, -2, 2));
    }
    const ChowClass l = space->divisor(l_degree);
    const VirtualPair pair(e, f);
    const VirtualPair twisted(twist(e, l), twist(f, l));
    const std::string tag = " (rank " + std::to_string(rank) + ", case " +
                            std::to_string(t) + ")";
    for (int k = 1; k <= max_k; ++k) {
      r.check(pair.virtual_twist_c(l, k) == twisted.virtual_c(k),
              "c_" + std::to_string(k) + " of twisted difference" + tag);
    }
    // c_r(E (x) L) = sum_i c_i(E) l^{r-i}
    ChowClass top = space->zero();
    for (int i = 0; i <= rank; ++i) top += e.chern(i) * l.pow(rank - i);
    r.check(twist(e, l).chern(rank) == top, "top Chern class of E(x)L" + tag);
    const BundleSpec formal(FormalBundle{rank, e.total_chern()});
    r.check(twist(formal, l).total_chern() == twist(e, l).total_chern(),
            "formal twist = split twist" + tag);
    r.check(pair.chern().total() *
                    (e.total_chern() * f.total_chern().inverse()) ==
                space->one(),
            "c(F-E) c(E-F) = 1" + tag);
    const ClassSequence direct = s_from_c(pair.chern());
    r.check(direct == pair.segre(), "s_i = c_i(E^v - F^v)" + tag);
  }
  return r;
}

SuiteResult verify_square_symmetry(int max_rank, int cases, Rng& rng) {
  SuiteResult r{"s_(2,2)(E^v - F^v) = s_(2,2)(F - E)"};
  const Partition square{2, 2};
  for (int t = 0; t < cases; ++t) {
    const Ambient space = t % 2 ? make_projective_space(6) : make_product({2, 1, 3});
    const int rank = 1 + t % std::max(1, max_rank);
    const VirtualPair pair(random_split_bundle(space, rank, rng),
                           random_split_bundle(space, rank, rng));
    r.check(schur(square, pair.chern()) == schur(square, pair.segre()),
            "case " + std::to_string(t));
  }
  return r;
}

SuiteResult verify_theorem_vs_corollary(int instances, int max_rank, Rng& rng) {
  SuiteResult r{"mu_IH: lambda-sum = corollary"};
  for (int t = 0; t < instances; ++t) {
    const bool five = t % 2 == 1;
    const InstanceConfig config =
        random_config(rng, five ? 5 : 4, max_rank, five, false);
    const Instance inst = build_instance(config);
    const Integer theorem = mu_ih_theorem(inst);
    r.check(theorem == mu_ih_corollary(inst), describe(config));
    if (!five) r.check(theorem == 2 * gtp_degree(inst), "2 deg: " + describe(config));
  }
  return r;
}

SuiteResult verify_euler_characteristics(int instances, int max_rank, Rng& rng) {
  SuiteResult r{"chi(Z) = chi(M|L) + (-1)^d mu_IH"};
  for (int t = 0; t < instances; ++t) {
    const int d = 4 + t % 3;
    const InstanceConfig config = random_config(rng, d, max_rank, false, false);
    const Instance inst = build_instance(config);
    const Integer sign = d % 2 == 0 ? 1 : -1;
    const Integer via_mu =
        chi_smooth_hypersurface(inst.ambient(), inst.pair().determinant_class()) +
        sign * mu_ih_theorem(inst);
    r.check(chi_z_pushforward(inst) == via_mu, describe(config));
  }
  return r;
}

SuiteResult verify_dual_routes(int instances, int max_rank, Rng& rng,
                               Projectivization convention) {
  SuiteResult r{"closed form = direct P(F) route"};
  for (int t = 0; t < instances; ++t) {
    const bool cy = t % 2 == 0;
    const int d = cy ? 4 : 4 + (t / 2) % 2;
    const InstanceConfig config = random_config(rng, d, max_rank, cy, true);
    const Instance inst = build_instance(config);
    const std::string tag = describe(config);
    r.check(intersection_numbers_closed(inst) ==
                intersection_numbers_direct(inst, convention),
            "intersection numbers " + tag);
    if (d != 4) continue;
    const C2Numbers direct = c2_numbers_direct(inst, convention);
    r.check(c2_numbers_closed(inst, C2Formula::General) == direct,
            "c2 general formula " + tag);
    if (cy) {
      r.check(c2_numbers_closed(inst, C2Formula::CalabiYau) == direct,
              "c2 Calabi-Yau formula " + tag);
      const C2Decomposition a = c2_tz_decomposition(inst, C2Formula::CalabiYau);
      const C2Decomposition b = c2_tz_decomposition(inst, C2Formula::General);
      r.check(a.base_part == b.base_part && a.l_coefficient == b.l_coefficient,
              "c2(T_Z) class identity " + tag);
    }
  }
  return r;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  const int depth = std::max(1, options.depth);
  const int max_rank = std::min(4, std::max(2, depth));
  const int max_k = std::min(5, depth);
  Rng rng(options.seed);
  std::vector<SuiteResult> results;
  results.push_back(verify_tableau_counts(2 * depth));
  results.push_back(verify_syt_square_sum(depth + 2));
  results.push_back(verify_hook_closed_form(2 * depth));
  results.push_back(verify_pieri(depth, rng));
  results.push_back(verify_power_identity(depth, rng));
  results.push_back(verify_involution(10, rng));
  results.push_back(verify_projective_bundles(12, rng));
  results.push_back(verify_twist_formulas(max_rank, max_k, 16, rng));
  results.push_back(verify_square_symmetry(max_rank, 12, rng));
  results.push_back(
      verify_theorem_vs_corollary(options.corollary_instances, max_rank, rng));
  results.push_back(verify_euler_characteristics(12, max_rank, rng));
  results.push_back(verify_dual_routes(options.dual_route_instances, max_rank,
                                       rng, options.convention));
  return results;
}

}  // namespace detloci
