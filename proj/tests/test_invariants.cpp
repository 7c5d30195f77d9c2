#include "detloci/invariants.hpp"
#include "detloci/verify.hpp"
#include "series_oracle.hpp"

#include "doctest.h"

using namespace detloci;

namespace {

Instance on_projective_space(int d, const std::vector<int>& e, const std::vector<int>& f,
                             bool polarized = false) {
  const auto m = make_projective_space(d);
  std::vector<std::vector<int>> ed, fd;
  for (int x : e) ed.push_back({x});
  for (int x : f) fd.push_back({x});
  std::optional<ChowClass> h;
  if (polarized) h = m->hyperplane();
  return Instance(VirtualPair(BundleSpec::from_multidegrees(m, ed),
                              BundleSpec::from_multidegrees(m, fd)),
                  h);
}

Instance quintic() { return on_projective_space(4, {-1, -1, -1, -2}, {0, 0, 0, 0}, true); }
Instance quartic() { return on_projective_space(4, {0, 0}, {2, 2}); }

}  // namespace

TEST_CASE("Euler characteristic of smooth hypersurfaces") {
  const auto p4 = make_projective_space(4);
  CHECK(chi_smooth_hypersurface(p4, 4 * p4->hyperplane()) == -56);
  CHECK(chi_smooth_hypersurface(p4, 5 * p4->hyperplane()) == -200);
  CHECK(oracle::chi_smooth(4, 5) == -200);
  const auto p1 = make_projective_space(1);
  CHECK(chi_smooth_hypersurface(p1, p1->hyperplane()) == 1);
  for (int d = 1; d <= 7; ++d) {
    const auto m = make_projective_space(d);
    for (int a = 1; a <= 6; ++a)
      CHECK(chi_smooth_hypersurface(m, a * m->hyperplane()) == oracle::chi_smooth(d, a));
  }
  CHECK_THROWS_AS(chi_smooth_hypersurface(p4, p4->hyperplane().pow(2)), InputError);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(on_projective_space(3, {0, 0}, {1, 1}), InputError);
  CHECK_THROWS_AS(on_projective_space(4, {0}, {1}), InputError);
  const auto p4 = make_projective_space(4);
  const VirtualPair pair(BundleSpec::trivial(p4, 2), BundleSpec::from_multidegrees(p4, {{1}, {1}}));
  CHECK_THROWS_AS(Instance(pair, p4->hyperplane().pow(2)), InputError);
  CHECK(Instance(pair).n() == 1);
}

TEST_CASE("degeneracy classes") {
  CHECK(gtp_degree(quintic()) == 46);
  CHECK(gtp_degree(quartic()) == 16);
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> rows{
      {{0, 0}, {1, 3}}, {{-1, 0}, {1, 2}}, {{0, 0, 0}, {1, 1, 2}},
      {{0, 0}, {2, 2}}, {{0, 0, 0, 0}, {1, 1, 1, 1}}};
  const int expected[] = {9, 12, 17, 16, 20};
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto inst = on_projective_space(4, rows[i].first, rows[i].second);
    CHECK(gtp_degree(inst) == expected[i]);
    CHECK(gtp_degree(inst) == oracle::square_degree(rows[i].first, rows[i].second));
    CHECK_FALSE(cy_condition(inst));
  }
  CHECK(gtp_degree(on_projective_space(4, {1, 2}, {1, 2})) == 0);
  CHECK_THROWS_AS(gtp_degree(on_projective_space(5, {0, 0}, {2, 2})), GuardError);

  const auto inst = quintic();
  // n = 3: D_2 has the 2x2 square class, D_3 the 1x1 class c1(F - E).
  const auto d2 = gtp_class(inst, 2);
  CHECK_FALSE(d2.extension);
  CHECK(integrate(d2.value) == 46);
  const auto d3 = gtp_class(inst, 3);
  CHECK(d3.extension);
  CHECK(d3.value == inst.pair().determinant_class());
  CHECK(gtp_class(inst, 1).value.is_zero());
  CHECK_THROWS_AS(gtp_class(inst, 4), InputError);
  CHECK_THROWS_AS(gtp_class(inst, -1), InputError);
}

TEST_CASE("Milnor numbers") {
  CHECK(mu_ih_theorem(quartic()) == 32);
  CHECK(mu_ih_corollary(quartic()) == 32);
  CHECK(mu_ih_theorem(quintic()) == 92);
  CHECK(mu_ih_corollary(quintic()) == 92);
  CHECK(mu_ih_theorem(on_projective_space(4, {3, 1}, {3, 1})) == 0);
  CHECK_THROWS_AS(mu_ih_corollary(on_projective_space(5, {0, 0}, {2, 2})), GuardError);
  const auto cy5 = on_projective_space(5, {0, 0}, {3, 3});
  REQUIRE(cy_condition(cy5));
  CHECK(mu_ih_corollary(cy5) == mu_ih_theorem(cy5));
  CHECK_THROWS_AS(mu_ih_corollary(on_projective_space(6, {0, 0}, {3, 4})), GuardError);

  for (const auto& [e, f] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{0, 0}, {2, 2}}, {{-1, 0, 1}, {2, 1, 1}}, {{0, 0}, {3, 3}}, {{1, -1}, {2, 3}}}) {
    for (int d = 4; d <= 6; ++d) {
      const auto inst = on_projective_space(d, e, f);
      CHECK(mu_ih_theorem(inst) == oracle::mu_ih(d, e, f));
    }
  }
}

TEST_CASE("Calabi-Yau condition") {
  CHECK(cy_condition(quintic()));
  CHECK_FALSE(cy_condition(quartic()));
  CHECK_FALSE(cy_condition(on_projective_space(4, {1, 2}, {1, 2})));
}

TEST_CASE("Euler characteristic of the small resolution") {
  CHECK(chi_z_pushforward(quartic()) == -24);
  CHECK(chi_z_pushforward(quintic()) == -108);
  CHECK(oracle::chi_z(4, {0, 0}, {2, 2}) == -24);
  CHECK(oracle::chi_z(4, {-1, -1, -1, -2}, {0, 0, 0, 0}) == -108);
  for (int d = 4; d <= 6; ++d) {
    const std::vector<int> e{0, -1, 1}, f{1, 2, 2};
    CHECK(chi_z_pushforward(on_projective_space(d, e, f)) == oracle::chi_z(d, e, f));
  }
  const auto trivial = on_projective_space(4, {1, 2}, {1, 2});
  const auto p4 = trivial.ambient();
  CHECK(chi_z_pushforward(trivial) == chi_smooth_hypersurface(p4, p4->zero()));
}

TEST_CASE("intersection numbers on Z") {
  const auto inst = quintic();
  // k = 0..3 is H^k L^{3-k}: L^3, L^2 H, L H^2, H^3.
  const std::vector<Integer> expected{2, 7, 9, 5};
  CHECK(intersection_numbers_closed(inst) == expected);
  CHECK(intersection_numbers_direct(inst) == expected);
  CHECK(intersection_numbers(inst) == expected);
  CHECK_THROWS_AS(intersection_numbers(quartic()), InputError);
  const auto degenerate = on_projective_space(4, {1, 2}, {1, 2}, true);
  const auto numbers = intersection_numbers(degenerate);
  for (size_t k = 0; k + 1 < numbers.size(); ++k) CHECK(numbers[k] == 0);
}

TEST_CASE("c2 numbers") {
  const auto inst = quintic();
  CHECK(c2_numbers(inst) == C2Numbers{50, 44});
  CHECK(c2_numbers_closed(inst, C2Formula::CalabiYau) == C2Numbers{50, 44});
  CHECK(c2_numbers_closed(inst, C2Formula::General) == C2Numbers{50, 44});
  CHECK(c2_numbers_direct(inst) == C2Numbers{50, 44});
  const auto cy = c2_tz_decomposition(inst, C2Formula::CalabiYau);
  const auto general = c2_tz_decomposition(inst, C2Formula::General);
  CHECK(cy.base_part == general.base_part);
  CHECK(cy.l_coefficient == general.l_coefficient);

  const auto non_cy = on_projective_space(4, {0, 0}, {2, 2}, true);
  CHECK_THROWS_AS(c2_numbers(non_cy), GuardError);
  CHECK_THROWS_AS(c2_numbers_closed(non_cy, C2Formula::CalabiYau), GuardError);
  CHECK(c2_numbers(non_cy, true) == c2_numbers_direct(non_cy));
  CHECK_THROWS_AS(c2_numbers(on_projective_space(4, {1, 2}, {1, 2}, true)), GuardError);
  CHECK_THROWS_AS(c2_numbers(quartic(), true), InputError);
}

TEST_CASE("flipped projectivization is caught by the direct routes") {
  const auto inst = on_projective_space(4, {0, 0}, {2, 2}, true);
  CHECK(intersection_numbers_direct(inst, Projectivization::Lines) !=
        intersection_numbers_closed(inst));
  Rng rng(17);
  CHECK(verify_dual_routes(10, 3, rng, Projectivization::Lines).failures > 0);
  Rng again(17);
  CHECK(verify_dual_routes(10, 3, again).passed());
}

TEST_CASE("node counts") {
  const auto report = odp_report(quintic());
  CHECK(report.count == 46);
  CHECK_FALSE(report.warnings.empty());
  CHECK(odp_report(quartic()).count == 16);
  CHECK(odp_report(on_projective_space(4, {0, 0, 0, 0}, {1, 1, 1, 1})).count == 20);
  CHECK_THROWS_AS(odp_report(on_projective_space(5, {0, 0}, {3, 3})), GuardError);
}

TEST_CASE("full reports are self-consistent") {
  const auto report = compute_report(quintic());
  CHECK(report.dimension == 4);
  CHECK(report.n == 3);
  CHECK(report.deg_sing == 46);
  CHECK(report.mu_ih == 92);
  CHECK(report.chi_smooth == -200);
  CHECK(report.chi_ih == -108);
  CHECK(report.chi_z == -108);
  CHECK(report.odp_count == Integer(46));
  CHECK(report.cy_condition);
  REQUIRE(report.c2_numbers);
  CHECK(*report.c2_numbers == C2Numbers{50, 44});

  const auto q = compute_report(quartic());
  CHECK(q.deg_sing == 16);
  CHECK(q.mu_ih == 32);
  CHECK(q.chi_smooth == -56);
  CHECK(q.chi_z == -24);
  CHECK_FALSE(q.c2_numbers);

  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    for (int d : {4, 5}) {
      const auto inst = on_projective_space(d, {0, 0, 0}, {static_cast<int>(rng() % 3),
                                                          static_cast<int>(rng() % 3) + 1, 2});
      const auto r = compute_report(inst);
      CHECK(r.chi_ih == r.chi_smooth + (d % 2 ? -r.mu_ih : r.mu_ih));
      CHECK(r.chi_ih == r.chi_z);
    }
  }
}
