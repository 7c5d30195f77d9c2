// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include "detloci/tables.hpp"
#include "detloci/verify.hpp"
#include "series_oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace detloci;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
  void expect_equal(const Integer& got, const Integer& want, const std::string& what) {
    expect(got == want, what + ": got " + got.str() + ", want " + want.str());
  }
};

Instance p4_instance(const std::vector<int>& e, const std::vector<int>& f, bool polarized) {
  const auto p4 = make_projective_space(4);
  std::vector<std::vector<int>> ed, fd;
  for (int x : e) ed.push_back({x});
  for (int x : f) fd.push_back({x});
  std::optional<ChowClass> h;
  if (polarized) h = p4->hyperplane();
  return Instance(VirtualPair(BundleSpec::from_multidegrees(p4, ed),
                              BundleSpec::from_multidegrees(p4, fd)),
                  h);
}

template <class F>
bool raises_guard(F&& f) {
  try {
    f();
  } catch (const GuardError&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

void table1(Outcome& out) {
  const auto table = evaluate_table("table1");
  out.expect(table.mismatches() == 0, "golden cells");
  const auto inst = p4_instance({-1, -1, -1, -2}, {0, 0, 0, 0}, true);
  const auto numbers = intersection_numbers(inst);
  const std::vector<Integer> want{2, 7, 9, 5};
  out.expect(numbers == want, "L^3, L^2H, LH^2, H^3");
  const auto c2 = c2_numbers(inst);
  out.expect_equal(c2.with_l, 44, "L.c2(T_Z)");
  out.expect_equal(c2.with_h, 50, "H.c2(T_Z)");
  out.expect_equal(odp_report(inst).count, 46, "nodes");
}

void table2(Outcome& out) {
  const auto table = evaluate_table("table2");
  out.expect(table.mismatches() == 0, "golden cells");
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> rows{
      {{0, 0}, {1, 3}}, {{-1, 0}, {1, 2}}, {{0, 0, 0}, {1, 1, 2}},
      {{0, 0}, {2, 2}}, {{0, 0, 0, 0}, {1, 1, 1, 1}}};
  const int want[] = {9, 12, 17, 16, 20};
  for (size_t i = 0; i < rows.size(); ++i)
    out.expect_equal(odp_report(p4_instance(rows[i].first, rows[i].second, false)).count,
                     want[i], "row " + std::to_string(i + 1));
}

void chain(Outcome& out, const std::vector<int>& e, const std::vector<int>& f, int degree,
           const Integer& nodes, const Integer& smooth, const Integer& chi_z) {
  const auto inst = p4_instance(e, f, false);
  const auto p4 = inst.ambient();
  out.expect_equal(gtp_degree(inst), nodes, "deg D_{n-1}");
  out.expect_equal(mu_ih_theorem(inst), 2 * nodes, "mu_IH");
  const Integer chi_smooth = chi_smooth_hypersurface(p4, degree * p4->hyperplane());
  out.expect_equal(chi_smooth, smooth, "chi(M|L)");
  out.expect_equal(oracle::chi_smooth(4, degree), smooth, "chi(M|L) series oracle");
  out.expect_equal(chi_z_pushforward(inst), chi_z, "chi(Z) pushforward");
  out.expect_equal(chi_smooth + mu_ih_theorem(inst), chi_z, "chi(M|L) + mu_IH");
  out.expect_equal(oracle::chi_z(4, e, f), chi_z, "chi(Z) series oracle");
  const auto report = compute_report(inst);
  out.expect(report.chi_ih == chi_z && report.chi_z == chi_z, "report");
}

void combinatorics(Outcome& out) {
  out.expect_equal(syt_count({3, 2}), 5, "f(3,2)");
  out.expect_equal(syt_count_inductive({3, 2}), 5, "inductive f(3,2)");
  out.expect_equal(hook_product({3, 2}), 24, "h(3,2)");
  out.expect_equal(syt_count({2, 2}), 2, "f(2,2)");
  for (const auto& suite : {verify_hook_closed_form(12), verify_tableau_counts(12),
                            verify_syt_square_sum(8)}) {
    out.expect(suite.passed(), suite.name);
  }
}

void identities(Outcome& out) {
  Rng rng(20161004);
  const std::vector<SuiteResult> suites{
      verify_pieri(6, rng),
      verify_power_identity(6, rng),
      verify_involution(20, rng),
      verify_twist_formulas(4, 5, 24, rng),
      verify_square_symmetry(4, 20, rng),
      verify_theorem_vs_corollary(50, 4, rng),
      verify_dual_routes(20, 4, rng),
  };
  for (const auto& suite : suites) {
    out.expect(suite.passed(), suite.name + ": " + std::to_string(suite.failures) +
                                   " of " + std::to_string(suite.cases) + " failed");
  }
  out.expect(suites[5].cases >= 50, "50 corollary instances");
}

void guards(Outcome& out) {
  const auto p5 = make_projective_space(5);
  const Instance five(VirtualPair(BundleSpec::trivial(p5, 2),
                                  BundleSpec::from_multidegrees(p5, {{2}, {2}})));
  out.expect(!cy_condition(five), "d=5 instance is not Calabi-Yau");
  out.expect(raises_guard([&] { mu_ih_corollary(five); }), "corollary at d=5 without CY");
  const auto quartic = p4_instance({0, 0}, {2, 2}, true);
  out.expect(raises_guard([&] { c2_numbers(quartic); }), "c2 numbers without CY");
  out.expect(!raises_guard([&] { c2_numbers(quartic, true); }), "c2 numbers with opt-in");
  out.expect(raises_guard([&] { gtp_degree(five); }), "gtp_degree at d=5");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"table 1: intersection numbers, c2 numbers and nodes of the quintic", table1},
      {"table 2: node counts 9, 12, 17, 16, 20", table2},
      {"quartic chain: 16 nodes, mu 32, chi(M|L) -56, chi(Z) -24",
       [](Outcome& o) { chain(o, {0, 0}, {2, 2}, 4, 16, -56, -24); }},
      {"quintic chain: chi(M|L) -200, chi(Z) -108",
       [](Outcome& o) { chain(o, {-1, -1, -1, -2}, {0, 0, 0, 0}, 5, 46, -200, -108); }},
      {"combinatorics: hook lengths, tableau counts, square sums", combinatorics},
      {"identity suites with zero failures", identities},
      {"guard errors", guards},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << " [exception: " << e.what() << "]";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (out.ok ? "PASS " : "FAIL ") << name << " (" << ms << " ms)"
              << out.detail.str() << '\n';
    failed += out.ok ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed;
}
