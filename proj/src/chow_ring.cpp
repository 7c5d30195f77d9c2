#include "detloci/chow_ring.hpp"

#include <numeric>
#include <sstream>

namespace detloci {

namespace {

int degree_of(const Exponents& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

void add_term(Terms& out, const Exponents& m, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = out.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) out.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------- ChowClass

ChowClass::ChowClass(Ambient ambient) : ambient_(std::move(ambient)) {
  if (!ambient_) throw InputError("ChowClass needs an ambient space");
}

ChowClass::ChowClass(Ambient ambient, const Rational& constant)
    : ChowClass(std::move(ambient)) {
  add_monomial(Exponents(static_cast<size_t>(ambient_->generator_count()), 0),
               constant);
}

Rational ChowClass::coefficient(const Exponents& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ChowClass::constant_term() const {
  return coefficient(
      Exponents(static_cast<size_t>(ambient_->generator_count()), 0));
}

ChowClass ChowClass::part(int k) const {
  ChowClass out(ambient_);
  for (const auto& [m, c] : terms_) {
    if (degree_of(m) == k) out.terms_.emplace(m, c);
  }
  return out;
}

int ChowClass::top_degree() const {
  int top = -1;
  for (const auto& [m, c] : terms_) top = std::max(top, degree_of(m));
  return top;
}

bool ChowClass::is_homogeneous(int k) const {
  for (const auto& [m, c] : terms_) {
    if (degree_of(m) != k) return false;
  }
  return true;
}

void ChowClass::check_same_ambient(const ChowClass& other) const {
  if (ambient_ != other.ambient_) {
    throw InputError("classes live on different ambient spaces");
  }
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  check_same_ambient(other);
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  check_same_ambient(other);
  for (const auto& [m, c] : other.terms_) add_term(terms_, m, -c);
  return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& other) {
  check_same_ambient(other);
  Terms product;
  const int dim = ambient_->dimension();
  for (const auto& [ma, ca] : terms_) {
    const int da = degree_of(ma);
    for (const auto& [mb, cb] : other.terms_) {
      if (da + degree_of(mb) > dim) continue;
      Exponents m = ma;
      for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      ambient_->accumulate(std::move(m), ca * cb, product);
    }
  }
  terms_ = std::move(product);
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
  return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
}

ChowClass ChowClass::pow(int exponent) const {
  if (exponent < 0) throw InputError("negative power of a Chow class");
  ChowClass result = ambient_->one();
  ChowClass base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

ChowClass ChowClass::inverse() const {
  if (constant_term() != 1) {
    throw InputError("only classes with constant term 1 are inverted here");
  }
  // 1/(1 + n) = sum (-n)^k, and n is nilpotent past dim.
  const ChowClass nilpotent = *this - ambient_->one();
  ChowClass result = ambient_->one();
  ChowClass power = ambient_->one();
  for (int k = 1; k <= ambient_->dimension(); ++k) {
    power *= -nilpotent;
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

void ChowClass::add_monomial(Exponents monomial, const Rational& coef) {
  if (static_cast<int>(monomial.size()) != ambient_->generator_count()) {
    throw InputError("monomial has the wrong number of exponents");
  }
  ambient_->accumulate(std::move(monomial), coef, terms_);
}

std::string ChowClass::str() const {
  if (terms_.empty()) return "0";
  const int gens = ambient_->generator_count();
  const bool bundle = ambient_->is_bundle();
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally for characteristic classes.
  for (int k = top_degree(); k >= 0; --k) {
    for (const auto& [m, c] : terms_) {
      if (degree_of(m) != k) continue;
      Rational coef = c;
      if (!first) {
        os << (coef < 0 ? " - " : " + ");
        if (coef < 0) coef = -coef;
      } else if (coef < 0) {
        os << '-';
        coef = -coef;
      }
      first = false;
      const bool unit = coef == 1 && k > 0;
      if (!unit) os << coef.str();
      bool wrote = !unit;
      for (int g = 0; g < gens; ++g) {
        const int e = m[static_cast<size_t>(g)];
        if (e == 0) continue;
        if (wrote) os << '*';
        wrote = true;
        if (bundle && g == gens - 1) {
          os << "xi";
        } else if (gens - (bundle ? 1 : 0) == 1) {
          os << 'h';
        } else {
          os << 'h' << (g + 1);
        }
        if (e > 1) os << '^' << e;
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ChowClass& x) {
  return os << x.str();
}

// ------------------------------------------------------------- AmbientSpace

void AmbientSpace::accumulate(Exponents m, const Rational& coef,
                              Terms& out) const {
  if (coef == 0) return;
  if (degree_of(m) > dimension_) return;
  const size_t base_gens = factor_dims_.size();
  for (size_t i = 0; i < base_gens; ++i) {
    if (m[i] < 0) throw InputError("negative exponent");
    if (m[i] > bounds_[i]) return;
  }
  if (!is_bundle()) {
    add_term(out, m, coef);
    return;
  }
  const int e = m[base_gens];
  if (e < 0) throw InputError("negative exponent");
  if (e < fiber_rank_) {
    add_term(out, m, coef);
    return;
  }
  // xi^e * alpha with alpha a base monomial: xi^e is tabulated in normal
  // form, and multiplying by alpha keeps xi-exponents below the rank.
  for (const auto& [xm, xc] : xi_power_[static_cast<size_t>(e)]) {
    Exponents term = xm;
    bool vanishes = false;
    for (size_t i = 0; i < base_gens; ++i) {
      term[i] += m[i];
      if (term[i] > bounds_[i]) vanishes = true;
    }
    if (vanishes || degree_of(term) > dimension_) continue;
    add_term(out, term, coef * xc);
  }
}

void AmbientSpace::build_xi_reductions(const Terms& relation_tail) {
  // relation_tail holds xi^r in normal form (xi-exponents < r).
  const size_t base_gens = factor_dims_.size();
  xi_power_.assign(static_cast<size_t>(dimension_) + 1, Terms{});
  if (fiber_rank_ > dimension_) return;
  xi_power_[static_cast<size_t>(fiber_rank_)] = relation_tail;
  for (int e = fiber_rank_ + 1; e <= dimension_; ++e) {
    Terms next;
    for (const auto& [m, c] : xi_power_[static_cast<size_t>(e - 1)]) {
      Exponents shifted = m;
      ++shifted[base_gens];
      if (degree_of(shifted) > dimension_) continue;
      if (shifted[base_gens] < fiber_rank_) {
        add_term(next, shifted, c);
        continue;
      }
      // xi^r * alpha: substitute the relation once more.
      for (const auto& [rm, rc] : relation_tail) {
        Exponents term = rm;
        bool vanishes = false;
        for (size_t i = 0; i < base_gens; ++i) {
          term[i] += m[i];
          if (term[i] > bounds_[i]) vanishes = true;
        }
        if (vanishes || degree_of(term) > dimension_) continue;
        add_term(next, term, c * rc);
      }
    }
    xi_power_[static_cast<size_t>(e)] = std::move(next);
  }
}

ChowClass AmbientSpace::zero() const { return ChowClass(shared_from_this()); }

ChowClass AmbientSpace::one() const {
  return ChowClass(shared_from_this(), Rational(1));
}

ChowClass AmbientSpace::constant(const Rational& value) const {
  return ChowClass(shared_from_this(), value);
}

ChowClass AmbientSpace::generator(int i) const {
  if (i < 0 || i >= generator_count()) {
    throw InputError("generator index out of range");
  }
  ChowClass g = zero();
  Exponents m(static_cast<size_t>(generator_count()), 0);
  m[static_cast<size_t>(i)] = 1;
  g.add_monomial(std::move(m), 1);
  return g;
}

ChowClass AmbientSpace::hyperplane(int factor) const {
  if (factor < 0 || factor >= static_cast<int>(factor_dims_.size())) {
    throw InputError("no projective factor with index " +
                     std::to_string(factor));
  }
  return generator(factor);
}

ChowClass AmbientSpace::divisor(const std::vector<int>& degrees) const {
  if (degrees.size() != factor_dims_.size()) {
    throw InputError("multidegree has " + std::to_string(degrees.size()) +
                     " entries, expected " +
                     std::to_string(factor_dims_.size()));
  }
  ChowClass d = zero();
  for (size_t i = 0; i < degrees.size(); ++i) {
    d += hyperplane(static_cast<int>(i)) * Rational(degrees[i]);
  }
  return d;
}

ChowClass AmbientSpace::tangent_chern() const {
  ChowClass c = zero();
  for (const auto& [m, coef] : tangent_) c.add_monomial(m, coef);
  return c;
}

Exponents AmbientSpace::fundamental_monomial() const {
  Exponents m = factor_dims_;
  if (is_bundle()) m.push_back(fiber_rank_ - 1);
  return m;
}

const Ambient& AmbientSpace::base() const {
  if (!is_bundle()) throw InputError("ambient is not a projective bundle");
  return base_;
}

ChowClass AmbientSpace::xi() const {
  if (!is_bundle()) throw InputError("ambient is not a projective bundle");
  return generator(generator_count() - 1);
}

ChowClass AmbientSpace::fiber_chern() const {
  ChowClass c = base().get()->zero();
  for (const auto& [m, coef] : fiber_chern_) c.add_monomial(m, coef);
  return c;
}

namespace {

Terms binomial_power_terms(const Ambient& space, int factor, int power) {
  return (space->one() + space->hyperplane(factor)).pow(power).terms();
}

}  // namespace

Ambient make_projective_space(int d) {
  if (d < 0) throw InputError("projective space dimension must be >= 0");
  std::shared_ptr<AmbientSpace> space(new AmbientSpace());
  space->kind_ = AmbientKind::ProjectiveSpace;
  space->dimension_ = d;
  space->factor_dims_ = {d};
  space->bounds_ = {d};
  space->tangent_ = binomial_power_terms(space, 0, d + 1);
  return space;
}

Ambient make_product(const std::vector<int>& dims) {
  if (dims.empty()) throw InputError("a product needs at least one factor");
  std::shared_ptr<AmbientSpace> space(new AmbientSpace());
  space->kind_ = AmbientKind::Product;
  space->dimension_ = 0;
  for (int d : dims) {
    if (d < 0) throw InputError("projective space dimension must be >= 0");
    space->dimension_ += d;
  }
  space->factor_dims_ = dims;
  space->bounds_ = dims;
  ChowClass tangent = space->one();
  for (size_t i = 0; i < dims.size(); ++i) {
    tangent *= (space->one() + space->hyperplane(static_cast<int>(i)))
                   .pow(dims[i] + 1);
  }
  space->tangent_ = tangent.terms();
  return space;
}

ChowClass pullback(const ChowClass& base_class, const Ambient& bundle) {
  if (!bundle->is_bundle() || bundle->base() != base_class.ambient()) {
    throw InputError("pullback target is not a projective bundle over the "
                     "class's ambient");
  }
  ChowClass out(bundle);
  for (const auto& [m, c] : base_class.terms()) {
    Exponents lifted = m;
    lifted.push_back(0);
    out.add_monomial(std::move(lifted), c);
  }
  return out;
}

Ambient make_projective_bundle(const Ambient& base,
                               const ChowClass& fiber_chern, int rank,
                               Projectivization convention) {
  if (rank < 1) throw InputError("projective bundle needs rank >= 1");
  if (base->is_bundle()) {
    throw InputError("iterated projective bundles are not supported");
  }
  if (fiber_chern.ambient() != base || fiber_chern.constant_term() != 1) {
    throw InputError("fiber Chern class must live on the base with "
                     "constant term 1");
  }
  std::shared_ptr<AmbientSpace> space(new AmbientSpace());
  space->kind_ = AmbientKind::ProjectiveBundle;
  space->dimension_ = base->dimension() + rank - 1;
  space->factor_dims_ = base->factor_dims();
  space->bounds_ = base->factor_dims();
  space->bounds_.push_back(rank - 1);
  space->base_ = base;
  space->fiber_rank_ = rank;
  space->convention_ = convention;
  space->fiber_chern_ = fiber_chern.terms();

  // Relation sum_i c_i(V) xi^{r-i} = 0 with V = F^v for quotients and
  // V = F for lines; solved for xi^r.
  const ChowClass relation_bundle =
      convention == Projectivization::Quotients ? dual_chern(fiber_chern)
                                                : fiber_chern;
  space->xi_power_.assign(static_cast<size_t>(space->dimension_) + 1, Terms{});
  Terms tail;
  for (int i = 1; i <= rank; ++i) {
    const ChowClass ci = relation_bundle.part(i);
    for (const auto& [m, c] : ci.terms()) {
      Exponents lifted = m;
      lifted.push_back(rank - i);
      if (degree_of(lifted) > space->dimension_) continue;
      add_term(tail, lifted, -c);
    }
  }
  space->build_xi_reductions(tail);

  const Ambient frozen = space;
  const ChowClass xi = frozen->xi();
  const ChowClass relative =
      twist_chern(pullback(relation_bundle, frozen), rank, xi);
  space->tangent_ =
      (pullback(base->tangent_chern(), frozen) * relative).terms();
  return frozen;
}

Rational integrate(const ChowClass& x) {
  return x.coefficient(x.space().fundamental_monomial());
}

Rational integrate_top(const ChowClass& x, const std::string& what) {
  if (!x.is_homogeneous(x.space().dimension())) {
    throw InternalError("integrand for " + what +
                        " is not homogeneous of top degree: " + x.str());
  }
  return integrate(x);
}

ChowClass pushforward(const ChowClass& x) {
  const AmbientSpace& space = x.space();
  if (!space.is_bundle()) {
    throw InputError("pushforward requires a projective-bundle ambient");
  }
  const int top_xi = space.fiber_rank() - 1;
  ChowClass out(space.base());
  for (const auto& [m, c] : x.terms()) {
    if (m.back() != top_xi) continue;
    Exponents down(m.begin(), m.end() - 1);
    out.add_monomial(std::move(down), c);
  }
  return out;
}

ChowClass segre_pushforward(const Ambient& bundle, int xi_exponent,
                            const ChowClass& base_class) {
  if (!bundle->is_bundle()) {
    throw InputError("segre_pushforward requires a projective-bundle ambient");
  }
  const int m = xi_exponent - (bundle->fiber_rank() - 1);
  if (m < 0) return ChowClass(bundle->base());
  const ChowClass chern = bundle->fiber_chern();
  const ChowClass segre_of =
      (bundle->convention() == Projectivization::Quotients ? dual_chern(chern)
                                                           : chern)
          .inverse();
  return segre_of.part(m) * base_class;
}

ChowClass twist_chern(const ChowClass& chern, int rank, const ChowClass& l) {
  const Ambient& space = chern.ambient();
  const ChowClass one_plus_l = space->one() + l;
  ChowClass out(space);
  const int top = std::min(rank, space->dimension());
  for (int i = 0; i <= top; ++i) {
    const ChowClass ci = chern.part(i);
    if (ci.is_zero()) continue;
    out += ci * one_plus_l.pow(rank - i);
  }
  return out;
}

ChowClass dual_chern(const ChowClass& chern) {
  ChowClass out(chern.ambient());
  for (const auto& [m, c] : chern.terms()) {
    out.add_monomial(m, degree_of(m) % 2 == 0 ? c : -c);
  }
  return out;
}

}  // namespace detloci
