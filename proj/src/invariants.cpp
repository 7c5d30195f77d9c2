#include "detloci/invariants.hpp"

namespace detloci {

namespace {

const Partition kSquare{2, 2};

Integer integral(const ChowClass& x, const std::string& what) {
  return to_integer(integrate_top(x, what), what);
}

// Top-degree part of an inhomogeneous class, integrated.
Integer degree_part(const ChowClass& x, const std::string& what) {
  return integral(x.part(x.space().dimension()), what);
}

const ChowClass& require_polarization(const Instance& inst) {
  if (!inst.polarization()) {
    throw InputError("intersection numbers need a polarization H_M");
  }
  return *inst.polarization();
}

void require_dimension_four(const Instance& inst, const std::string& what) {
  if (inst.dimension() != 4) {
    throw GuardError(what + " is only defined for dim M = 4 (got " +
                     std::to_string(inst.dimension()) + ")");
  }
}

// Data of P(F) shared by the direct routes: the ambient, the pulled-back
// polarization and j_*[Z] = c_{n+1}(p*E^v (x) O(1)).
struct ResolutionModel {
  Ambient bundle;
  ChowClass xi;
  ChowClass zero_locus;
  BundleSpec normal;
};

ResolutionModel resolution_model(const Instance& inst,
                                 Projectivization convention) {
  Ambient bundle = make_proj_bundle(inst.pair().f(), convention);
  ChowClass xi = bundle->xi();
  BundleSpec normal = twist(pullback(dual(inst.pair().e()), bundle), xi);
  ChowClass zero_locus = normal.chern(normal.rank());
  return {std::move(bundle), std::move(xi), std::move(zero_locus),
          std::move(normal)};
}

}  // namespace

Instance::Instance(VirtualPair pair, std::optional<ChowClass> polarization)
    : pair_(std::move(pair)), polarization_(std::move(polarization)) {
  if (dimension() < 4) {
    throw InputError("dim M must be at least 4 (got " +
                     std::to_string(dimension()) + ")");
  }
  if (n() < 1) {
    throw InputError("E and F must have rank at least 2");
  }
  if (polarization_) {
    if (polarization_->ambient() != ambient() ||
        !polarization_->is_homogeneous(1)) {
      throw InputError("polarization must be a divisor class on M");
    }
  }
}

Integer chi_smooth_hypersurface(const Ambient& space, const ChowClass& l) {
  if (l.ambient() != space || !l.is_homogeneous(1)) {
    throw InputError("hypersurface class must be a divisor on the ambient");
  }
  const ChowClass fulton = l * (space->one() + l).inverse() *
                           space->tangent_chern();
  return degree_part(fulton, "chi(M|L)");
}

DegeneracyClass gtp_class(const Instance& inst, int rank_bound) {
  const int side = inst.n() + 1 - rank_bound;
  if (rank_bound < 0 || side < 1) {
    throw InputError("rank bound must lie in [0, n]");
  }
  return {schur(Partition::rectangle(side, side), inst.pair().segre()),
          rank_bound != inst.n() - 1};
}

Integer gtp_degree(const Instance& inst) {
  require_dimension_four(inst, "deg [D_{n-1}] as a point count");
  return integral(gtp_class(inst, inst.n() - 1).value, "deg [D_{n-1}]");
}

Integer singular_locus_pairing(const Instance& inst) {
  const ChowClass square = schur(kSquare, inst.pair().segre());
  return integral(square * inst.tangent_chern().part(inst.dimension() - 4),
                  "c_{d-4}(T_M) [D_{n-1}]");
}

Integer mu_ih_theorem(const Instance& inst) {
  const int d = inst.dimension();
  const ChowClass tangent = inst.tangent_chern();
  const ClassSequence& s = inst.pair().segre();
  Integer total = 0;
  // Shapes with more than d boxes pair with c_{<0}(T_M) = 0.
  for (int size = kSquare.size(); size <= d; ++size) {
    for (const Partition& lambda : enumerate_supersets(kSquare, size)) {
      const Integer value =
          syt_count(lambda) *
          integral(schur(lambda, s) * tangent.part(d - size),
                   "mu_IH term " + lambda.str());
      if ((d + size) % 2 == 0) {
        total += value;
      } else {
        total -= value;
      }
    }
  }
  return total;
}

bool cy_condition(const Instance& inst) {
  return inst.tangent_chern().part(1) == inst.pair().determinant_class();
}

Integer mu_ih_corollary(const Instance& inst) {
  const int d = inst.dimension();
  if (d == 5 && !cy_condition(inst)) {
    throw GuardError("the corollary formula for dim M = 5 needs the "
                     "Calabi-Yau condition c1(T_M) = c1(F) - c1(E)");
  }
  if (d != 4 && d != 5) {
    throw GuardError("the corollary formula is only asserted for dim M = 4, "
                     "or 5 under the Calabi-Yau condition (got " +
                     std::to_string(d) + ")");
  }
  const ChowClass square = schur(kSquare, inst.pair().segre());
  return Integer(d - 2) *
         degree_part(inst.tangent_chern() * square, "c(T_M) [D_{n-1}]");
}

ChowClass pushforward_chern_z(const Instance& inst) {
  const int d = inst.dimension();
  const ClassSequence& s = inst.pair().segre();
  const Ambient& space = inst.ambient();
  ChowClass hooks = space->zero();
  for (int i = 0; i <= d - 1; ++i) {
    for (int j = 0; i + j <= d - 1; ++j) {
      ChowClass term = schur(Partition::hook(1 + i, j), s) *
                       Rational(binomial(i + j, i));
      if ((i + j) % 2 == 0) {
        hooks += term;
      } else {
        hooks -= term;
      }
    }
  }
  return hooks * inst.tangent_chern();
}

Integer chi_z_pushforward(const Instance& inst) {
  return degree_part(pushforward_chern_z(inst), "chi(Z)");
}

std::vector<Integer> intersection_numbers_closed(const Instance& inst) {
  const ChowClass& h = require_polarization(inst);
  const int d = inst.dimension();
  const ClassSequence& s = inst.pair().segre();
  std::vector<Integer> out;
  for (int k = 0; k <= d - 1; ++k) {
    out.push_back(integral(h.pow(k) * s[d - k], "H^k c_{d-k}(E^v - F^v)"));
  }
  return out;
}

std::vector<Integer> intersection_numbers_direct(const Instance& inst,
                                                 Projectivization convention) {
  const ChowClass& h = require_polarization(inst);
  const int d = inst.dimension();
  const ResolutionModel model = resolution_model(inst, convention);
  const ChowClass hz = pullback(h, model.bundle);
  std::vector<Integer> out;
  for (int k = 0; k <= d - 1; ++k) {
    out.push_back(integral(model.xi.pow(d - 1 - k) * hz.pow(k) *
                               model.zero_locus,
                           "H_Z^k L^{d-1-k} [Z] on P(F)"));
  }
  return out;
}

std::vector<Integer> intersection_numbers(const Instance& inst) {
  std::vector<Integer> closed = intersection_numbers_closed(inst);
  if (closed != intersection_numbers_direct(inst)) {
    throw InternalError("intersection numbers on Z disagree between the "
                        "closed form and the P(F) computation");
  }
  return closed;
}

C2Decomposition c2_tz_decomposition(const Instance& inst, C2Formula formula) {
  const ChowClass tangent = inst.tangent_chern();
  const ChowClass dual_virtual = inst.pair().dual_chern_total();  // F^v - E^v
  const ClassSequence& s = inst.pair().segre();                   // E^v - F^v
  ChowClass b = dual_virtual.part(1);
  if (formula == C2Formula::CalabiYau) {
    return {tangent.part(2) - s[2], std::move(b)};
  }
  return {tangent.part(2) + b * tangent.part(1) + dual_virtual.part(2),
          std::move(b)};
}

C2Numbers c2_numbers_closed(const Instance& inst, C2Formula formula) {
  require_dimension_four(inst, "c2(T_Z) intersection numbers");
  const ChowClass& h = require_polarization(inst);
  const ClassSequence& s = inst.pair().segre();
  const ChowClass c2_tangent = inst.tangent_chern().part(2);
  if (formula == C2Formula::CalabiYau) {
    if (!cy_condition(inst)) {
      throw GuardError("the closed c2(T_Z) formulas need the Calabi-Yau "
                       "condition c1(T_M) = c1(F) - c1(E)");
    }
    return {integral(c2_tangent * s[1] * h, "c2(T_Z).H"),
            integral(c2_tangent * s[2], "c2(T_M) c2(E^v - F^v)") -
                gtp_degree(inst)};
  }
  // Push forward j*p*A - j*p*B.L against H_Z or L, using
  // p_* j_*(L^m [Z]) = c_{m+1}(E^v - F^v).
  const C2Decomposition c2 = c2_tz_decomposition(inst, formula);
  return {integral(c2.base_part * h * s[1] - c2.l_coefficient * h * s[2],
                   "c2(T_Z).H"),
          integral(c2.base_part * s[2] - c2.l_coefficient * s[3],
                   "c2(T_Z).L")};
}

C2Numbers c2_numbers_direct(const Instance& inst, Projectivization convention) {
  require_dimension_four(inst, "c2(T_Z) intersection numbers");
  const ChowClass& h = require_polarization(inst);
  const ResolutionModel model = resolution_model(inst, convention);
  // Normal sequence 0 -> T_Z -> T_P(F)|Z -> N -> 0.
  const ChowClass chern_tz = model.bundle->tangent_chern() *
                             model.normal.total_chern().inverse();
  const ChowClass c2 = chern_tz.part(2);
  const ChowClass on_z = c2 * model.zero_locus;
  return {integral(on_z * pullback(h, model.bundle), "c2(T_Z).H on P(F)"),
          integral(on_z * model.xi, "c2(T_Z).L on P(F)")};
}

C2Numbers c2_numbers(const Instance& inst, bool allow_non_cy) {
  require_dimension_four(inst, "c2(T_Z) intersection numbers");
  const bool cy = cy_condition(inst);
  if (!cy && !allow_non_cy) {
    throw GuardError("c2(T_Z) numbers need the Calabi-Yau condition "
                     "c1(T_M) = c1(F) - c1(E); set allow_non_cy_c2 to use "
                     "the general formula");
  }
  const C2Numbers closed = c2_numbers_closed(
      inst, cy ? C2Formula::CalabiYau : C2Formula::General);
  if (closed != c2_numbers_direct(inst)) {
    throw InternalError("c2(T_Z) numbers disagree between the closed form "
                        "and the P(F) computation");
  }
  return closed;
}

OdpReport odp_report(const Instance& inst) {
  require_dimension_four(inst, "the node count");
  OdpReport report{gtp_degree(inst), {}};
  report.warnings.push_back(
      "assumes sigma is n-general; generality is not verified");
  report.warnings.push_back(
      "nodality assumes Z_n(sigma) is connected (D_n(sigma) irreducible)");
  if (inst.n() >= 2) {
    report.warnings.push_back(
        "D_{n-2}(sigma) is empty: expected codimension 9 exceeds dim M = 4");
  }
  return report;
}

InvariantReport compute_report(const Instance& inst,
                               const ReportOptions& options) {
  InvariantReport r;
  const int d = inst.dimension();
  r.dimension = d;
  r.n = inst.n();
  r.cy_condition = cy_condition(inst);
  r.deg_sing = singular_locus_pairing(inst);
  r.mu_ih = mu_ih_theorem(inst);
  r.chi_smooth =
      chi_smooth_hypersurface(inst.ambient(), inst.pair().determinant_class());
  const Integer sign = d % 2 == 0 ? 1 : -1;
  r.chi_ih = r.chi_smooth + sign * r.mu_ih;
  r.chi_z = chi_z_pushforward(inst);
  if (r.chi_ih != r.chi_z) {
    throw InternalError("chi_IH = " + r.chi_ih.str() + " from mu_IH but chi(Z) = " +
                        r.chi_z.str() + " from the pushforward formula");
  }
  if (d == 4 || (d == 5 && r.cy_condition)) {
    r.mu_ih_corollary = mu_ih_corollary(inst);
    if (*r.mu_ih_corollary != r.mu_ih) {
      throw InternalError("mu_IH disagrees between the lambda-sum and the "
                          "Porteous form");
    }
  }
  if (d == 4) {
    OdpReport odp = odp_report(inst);
    r.odp_count = odp.count;
    r.warnings = std::move(odp.warnings);
  } else {
    r.warnings.push_back(
        "assumes sigma is n-general; generality is not verified");
  }
  if (inst.polarization()) {
    r.intersection_numbers = intersection_numbers(inst);
    if (d == 4) {
      r.c2_numbers = c2_numbers(inst, options.allow_non_cy_c2);
      r.c2_extension = !r.cy_condition;
      if (r.c2_extension) {
        r.warnings.push_back(
            "c2(T_Z) numbers use the general formula without the "
            "Calabi-Yau condition");
      }
    }
  }
  return r;
}

}  // namespace detloci
