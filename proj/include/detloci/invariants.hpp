#pragma once

#include "detloci/bundle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace detloci {

/// A morphism E -> F of rank-(n+1) bundles on M, described by its bundle
/// data only. The morphism itself is assumed n-general; nothing here can
/// check that.
class Instance {
 public:
  Instance(VirtualPair pair, std::optional<ChowClass> polarization = {});

  const Ambient& ambient() const { return pair_.ambient(); }
  int dimension() const { return ambient()->dimension(); }
  /// Rank minus one; D_n is the determinantal hypersurface.
  int n() const { return pair_.rank() - 1; }
  const VirtualPair& pair() const { return pair_; }
  const std::optional<ChowClass>& polarization() const { return polarization_; }
  ChowClass tangent_chern() const { return ambient()->tangent_chern(); }

 private:
  VirtualPair pair_;
  std::optional<ChowClass> polarization_;
};

/// Euler characteristic of a smooth hypersurface with first Chern class l:
/// the integral of l (1 + l)^{-1} c(T_M).
Integer chi_smooth_hypersurface(const Ambient& space, const ChowClass& l);

struct DegeneracyClass {
  ChowClass value;
  /// True for rank bounds other than n-1, where only the general
  /// rectangular Porteous shape backs the result.
  bool extension;
};

/// [D_i] as the Schur class of the rectangle (n+1-i)^{n+1-i}.
DegeneracyClass gtp_class(const Instance& inst, int rank_bound);

/// deg [D_{n-1}]. Only defined when dim M = 4.
Integer gtp_degree(const Instance& inst);

/// Integral of c_{d-4}(T_M) [D_{n-1}].
Integer singular_locus_pairing(const Instance& inst);

/// Intersection-homology Milnor number via the sum over lambda >= (2,2).
Integer mu_ih_theorem(const Instance& inst);

/// (d-2) * integral of c(T_M) [D_{n-1}], valid for d = 4, and d = 5 under
/// the Calabi-Yau condition. Other cases raise GuardError.
Integer mu_ih_corollary(const Instance& inst);

/// c_1(T_M) == c_1(F) - c_1(E).
bool cy_condition(const Instance& inst);

/// p_* j_* c(Z) as a total class on M.
ChowClass pushforward_chern_z(const Instance& inst);

/// chi(Z) = chi_IH(D), the degree of the pushed-forward Chern class.
Integer chi_z_pushforward(const Instance& inst);

/// {integral over Z of H^k L^{d-1-k}} for k = 0..d-1 through the closed
/// form on M. Requires a polarization.
std::vector<Integer> intersection_numbers_closed(const Instance& inst);

/// The same numbers computed on P(F) from the fundamental class of Z.
std::vector<Integer> intersection_numbers_direct(
    const Instance& inst,
    Projectivization convention = Projectivization::Quotients);

/// Closed form, cross-checked against the direct route.
std::vector<Integer> intersection_numbers(const Instance& inst);

struct C2Numbers {
  Integer with_h;  // c2(T_Z).H_Z
  Integer with_l;  // c2(T_Z).L
  friend bool operator==(const C2Numbers&, const C2Numbers&) = default;
};

enum class C2Formula {
  /// The Calabi-Yau specialization, stated for d = 4 only.
  CalabiYau,
  /// The general formula that drops the Calabi-Yau hypothesis.
  General,
};

/// Base class A and divisor B with c2(T_Z) = j*p*A - j*p*B . L.
struct C2Decomposition {
  ChowClass base_part;
  ChowClass l_coefficient;
};
C2Decomposition c2_tz_decomposition(const Instance& inst, C2Formula formula);

C2Numbers c2_numbers_closed(const Instance& inst, C2Formula formula);
C2Numbers c2_numbers_direct(
    const Instance& inst,
    Projectivization convention = Projectivization::Quotients);

/// c2 numbers for d = 4. Without the Calabi-Yau condition this raises
/// GuardError unless allow_non_cy is set. Cross-checked against the direct
/// route.
C2Numbers c2_numbers(const Instance& inst, bool allow_non_cy = false);

struct OdpReport {
  Integer count;
  std::vector<std::string> warnings;
};

/// Number of nodes of D_n for d = 4, with the hypotheses the count rests on.
OdpReport odp_report(const Instance& inst);

struct ReportOptions {
  bool allow_non_cy_c2 = false;
};

struct InvariantReport {
  int dimension = 0;
  int n = 0;
  Integer deg_sing;
  Integer mu_ih;
  std::optional<Integer> mu_ih_corollary;
  Integer chi_smooth;
  Integer chi_ih;
  Integer chi_z;
  std::optional<Integer> odp_count;
  std::optional<std::vector<Integer>> intersection_numbers;
  std::optional<C2Numbers> c2_numbers;
  bool c2_extension = false;
  bool cy_condition = false;
  std::vector<std::string> warnings;
};

/// Every invariant for one instance. chi_IH is derived from mu_IH and
/// compared against the independently computed chi(Z).
InvariantReport compute_report(const Instance& inst,
                               const ReportOptions& options = {});

}  // namespace detloci
