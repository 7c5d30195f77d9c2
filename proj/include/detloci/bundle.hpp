#pragma once

#include "detloci/chow_ring.hpp"
#include "detloci/schur.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace detloci {

/// Direct sum of line bundles, one first Chern class per summand.
struct SplitBundle {
  std::vector<ChowClass> roots;
};

/// Bundle known only through its rank and total Chern class.
struct FormalBundle {
  int rank;
  ChowClass total_chern;
};

class BundleSpec {
 public:
  explicit BundleSpec(SplitBundle split);
  explicit BundleSpec(FormalBundle formal);

  /// O(d_1) + ... + O(d_r) from multidegree vectors on a product of
  /// projective spaces.
  static BundleSpec from_multidegrees(const Ambient& space,
                                      const std::vector<std::vector<int>>& degs);
  /// Trivial bundle of the given rank.
  static BundleSpec trivial(const Ambient& space, int rank);

  const Ambient& ambient() const { return ambient_; }
  int rank() const;
  bool is_split() const {
    return std::holds_alternative<SplitBundle>(presentation_);
  }
  const std::variant<SplitBundle, FormalBundle>& presentation() const {
    return presentation_;
  }

  ChowClass total_chern() const;
  ChowClass chern(int k) const { return total_chern().part(k); }

 private:
  Ambient ambient_;
  std::variant<SplitBundle, FormalBundle> presentation_;
};

ChowClass total_chern(const BundleSpec& bundle);
BundleSpec dual(const BundleSpec& bundle);
/// bundle (x) L for a line bundle with first Chern class l.
BundleSpec twist(const BundleSpec& bundle, const ChowClass& l);
/// p*bundle on a projective bundle over its ambient.
BundleSpec pullback(const BundleSpec& bundle, const Ambient& target);
/// det of the bundle, as a first Chern class.
ChowClass first_chern(const BundleSpec& bundle);

/// P(F) of rank-1 quotients of F.
Ambient make_proj_bundle(
    const BundleSpec& fiber,
    Projectivization convention = Projectivization::Quotients);

/// The virtual class F - E for bundles of equal rank, with the Chern and
/// Schur input sequences computed once at construction.
class VirtualPair {
 public:
  VirtualPair(BundleSpec e, BundleSpec f);

  const BundleSpec& e() const { return e_; }
  const BundleSpec& f() const { return f_; }
  const Ambient& ambient() const { return e_.ambient(); }
  int rank() const { return e_.rank(); }

  /// c(F - E) = c(F) / c(E).
  const ClassSequence& chern() const { return chern_; }
  /// s_i = c_i(E^v - F^v) = c(E^v) / c(F^v), the Schur input sequence.
  const ClassSequence& segre() const { return segre_; }
  /// c(F^v - E^v).
  ChowClass dual_chern_total() const;
  /// c(E^v - F^v) as a total class.
  ChowClass segre_total() const { return segre_.total(); }

  /// c_k(F - E).
  ChowClass virtual_c(int k) const { return chern_[k]; }

  /// c_k(F(x)L - E(x)L) by the closed twist formula
  /// sum_{i=1}^k (-1)^{k-i} C(k-1, i-1) c_i(F - E) l^{k-i}.
  ChowClass virtual_twist_c(const ChowClass& l, int k) const;

  /// c_1(F) - c_1(E) = c_1(det E^v (x) det F).
  ChowClass determinant_class() const { return chern_[1]; }

 private:
  BundleSpec e_;
  BundleSpec f_;
  ClassSequence chern_;
  ClassSequence segre_;
};

}  // namespace detloci
