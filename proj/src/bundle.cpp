#include "detloci/bundle.hpp"

namespace detloci {

namespace {

void check_root(const ChowClass& root, const Ambient& ambient) {
  if (root.ambient() != ambient) {
    throw InputError("line bundle summands live on different ambients");
  }
  if (!root.is_homogeneous(1)) {
    throw InputError("line bundle first Chern class must have degree 1: " +
                     root.str());
  }
}

}  // namespace

BundleSpec::BundleSpec(SplitBundle split) : presentation_(std::move(split)) {
  const auto& roots = std::get<SplitBundle>(presentation_).roots;
  if (roots.empty()) throw InputError("split bundle needs at least one summand");
  ambient_ = roots.front().ambient();
  for (const ChowClass& r : roots) check_root(r, ambient_);
}

BundleSpec::BundleSpec(FormalBundle formal) : presentation_(std::move(formal)) {
  const auto& f = std::get<FormalBundle>(presentation_);
  if (f.rank < 1) throw InputError("bundle rank must be positive");
  if (f.total_chern.constant_term() != 1) {
    throw InputError("total Chern class must have constant term 1");
  }
  for (int k = f.rank + 1; k <= f.total_chern.top_degree(); ++k) {
    if (!f.total_chern.part(k).is_zero()) {
      throw InputError("Chern class above the rank is nonzero");
    }
  }
  ambient_ = f.total_chern.ambient();
}

BundleSpec BundleSpec::from_multidegrees(
    const Ambient& space, const std::vector<std::vector<int>>& degs) {
  SplitBundle split;
  for (const auto& d : degs) split.roots.push_back(space->divisor(d));
  return BundleSpec(std::move(split));
}

BundleSpec BundleSpec::trivial(const Ambient& space, int rank) {
  return BundleSpec(SplitBundle{
      std::vector<ChowClass>(static_cast<size_t>(rank), space->zero())});
}

int BundleSpec::rank() const {
  if (const auto* s = std::get_if<SplitBundle>(&presentation_)) {
    return static_cast<int>(s->roots.size());
  }
  return std::get<FormalBundle>(presentation_).rank;
}

ChowClass BundleSpec::total_chern() const {
  if (const auto* s = std::get_if<SplitBundle>(&presentation_)) {
    ChowClass c = ambient_->one();
    for (const ChowClass& r : s->roots) c *= ambient_->one() + r;
    return c;
  }
  return std::get<FormalBundle>(presentation_).total_chern;
}

ChowClass total_chern(const BundleSpec& bundle) { return bundle.total_chern(); }

BundleSpec dual(const BundleSpec& bundle) {
  if (const auto* s = std::get_if<SplitBundle>(&bundle.presentation())) {
    SplitBundle out;
    for (const ChowClass& r : s->roots) out.roots.push_back(-r);
    return BundleSpec(std::move(out));
  }
  const auto& f = std::get<FormalBundle>(bundle.presentation());
  return BundleSpec(FormalBundle{f.rank, dual_chern(f.total_chern)});
}

BundleSpec twist(const BundleSpec& bundle, const ChowClass& l) {
  check_root(l, bundle.ambient());
  if (const auto* s = std::get_if<SplitBundle>(&bundle.presentation())) {
    SplitBundle out;
    for (const ChowClass& r : s->roots) out.roots.push_back(r + l);
    return BundleSpec(std::move(out));
  }
  const auto& f = std::get<FormalBundle>(bundle.presentation());
  return BundleSpec(FormalBundle{f.rank, twist_chern(f.total_chern, f.rank, l)});
}

BundleSpec pullback(const BundleSpec& bundle, const Ambient& target) {
  if (const auto* s = std::get_if<SplitBundle>(&bundle.presentation())) {
    SplitBundle out;
    for (const ChowClass& r : s->roots) out.roots.push_back(pullback(r, target));
    return BundleSpec(std::move(out));
  }
  const auto& f = std::get<FormalBundle>(bundle.presentation());
  return BundleSpec(FormalBundle{f.rank, pullback(f.total_chern, target)});
}

ChowClass first_chern(const BundleSpec& bundle) { return bundle.chern(1); }

Ambient make_proj_bundle(const BundleSpec& fiber, Projectivization convention) {
  return make_projective_bundle(fiber.ambient(), fiber.total_chern(),
                                fiber.rank(), convention);
}

VirtualPair::VirtualPair(BundleSpec e, BundleSpec f)
    : e_(std::move(e)),
      f_(std::move(f)),
      chern_(ClassSequence::from_total(f_.total_chern() *
                                       e_.total_chern().inverse())),
      segre_(ClassSequence::from_total(dual(e_).total_chern() *
                                       dual(f_).total_chern().inverse())) {
  if (e_.ambient() != f_.ambient()) {
    throw InputError("E and F live on different ambient spaces");
  }
  if (e_.rank() != f_.rank()) {
    throw InputError("E and F must have the same rank (got " +
                     std::to_string(e_.rank()) + " and " +
                     std::to_string(f_.rank()) + ")");
  }
}

ChowClass VirtualPair::dual_chern_total() const {
  return dual(f_).total_chern() * dual(e_).total_chern().inverse();
}

ChowClass VirtualPair::virtual_twist_c(const ChowClass& l, int k) const {
  if (k < 1) throw InputError("twist formula needs k >= 1");
  check_root(l, ambient());
  ChowClass sum = ambient()->zero();
  for (int i = 1; i <= k; ++i) {
    const Integer coef = binomial(k - 1, i - 1);
    ChowClass term = chern_[i] * l.pow(k - i) * Rational(coef);
    if ((k - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace detloci
