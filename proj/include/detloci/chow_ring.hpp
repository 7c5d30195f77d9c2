#pragma once

#include "detloci/number.hpp"

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace detloci {

class AmbientSpace;
using Ambient = std::shared_ptr<const AmbientSpace>;

/// Exponent vector, one entry per ring generator.
using Exponents = std::vector<int>;
/// Sparse coefficient map over normal-form monomials.
using Terms = std::map<Exponents, Rational>;

/// Element of the Chow ring A(M) with exact rational coefficients.
///
/// Every stored monomial is in normal form: hyperplane exponents are at most
/// the dimension of their factor, the tautological exponent of a projective
/// bundle is below the fiber rank, and the total degree never exceeds
/// dim(M). Zero coefficients are never stored, so equality is map equality.
class ChowClass {
 public:
  explicit ChowClass(Ambient ambient);
  ChowClass(Ambient ambient, const Rational& constant);

  const Ambient& ambient() const { return ambient_; }
  const AmbientSpace& space() const { return *ambient_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& monomial) const;
  Rational constant_term() const;

  /// Homogeneous component of degree k.
  ChowClass part(int k) const;
  /// Largest degree carrying a nonzero coefficient; -1 for zero.
  int top_degree() const;
  /// True iff every nonzero term has degree exactly k (zero counts).
  bool is_homogeneous(int k) const;

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const ChowClass& other);
  ChowClass& operator*=(const Rational& scalar);

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const ChowClass& b) { return a *= b; }
  friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
  friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }
  friend ChowClass operator-(ChowClass a) { return a *= Rational(-1); }

  friend bool operator==(const ChowClass& a, const ChowClass& b);

  ChowClass pow(int exponent) const;
  /// Multiplicative inverse of a class with constant term 1.
  ChowClass inverse() const;

  std::string str() const;

  /// Adds coef * monomial, reducing the monomial to normal form.
  void add_monomial(Exponents monomial, const Rational& coef);

 private:
  void check_same_ambient(const ChowClass& other) const;

  Ambient ambient_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ChowClass& x);

enum class AmbientKind { ProjectiveSpace, Product, ProjectiveBundle };

/// Which projectivization a bundle ambient models. The calculator always
/// uses quotients; Lines exists so tests can show that a flipped sign
/// convention is detected by the dual-route checks.
enum class Projectivization { Quotients, Lines };

/// Chow-ring model of a smooth proper ambient variety.
///
/// Generators are the hyperplane classes h_1..h_k of the projective factors,
/// followed (for a projective bundle P(F) -> base) by xi = c1(O(1)).
class AmbientSpace : public std::enable_shared_from_this<AmbientSpace> {
 public:
  AmbientKind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  int generator_count() const { return static_cast<int>(bounds_.size()); }
  /// Dimensions of the projective factors (of the base, for a bundle).
  const std::vector<int>& factor_dims() const { return factor_dims_; }

  ChowClass zero() const;
  ChowClass one() const;
  ChowClass constant(const Rational& value) const;
  /// i-th generator (0-based); for a bundle the last index is xi.
  ChowClass generator(int i) const;
  /// Hyperplane class of the i-th projective factor.
  ChowClass hyperplane(int factor = 0) const;
  /// sum_i degrees[i] * h_i.
  ChowClass divisor(const std::vector<int>& degrees) const;

  ChowClass tangent_chern() const;
  Exponents fundamental_monomial() const;

  // Projective bundle data.
  bool is_bundle() const { return kind_ == AmbientKind::ProjectiveBundle; }
  const Ambient& base() const;
  int fiber_rank() const { return fiber_rank_; }
  Projectivization convention() const { return convention_; }
  ChowClass xi() const;
  /// Total Chern class of F, on the base.
  ChowClass fiber_chern() const;

  /// Normal form of generator monomial `m` times coef, accumulated into out.
  void accumulate(Exponents m, const Rational& coef, Terms& out) const;

  friend Ambient make_projective_space(int d);
  friend Ambient make_product(const std::vector<int>& dims);
  friend Ambient make_projective_bundle(const Ambient& base,
                                        const ChowClass& fiber_chern,
                                        int rank, Projectivization convention);

 private:
  AmbientSpace() = default;
  void build_xi_reductions(const Terms& relation_tail);

  AmbientKind kind_ = AmbientKind::ProjectiveSpace;
  int dimension_ = 0;
  std::vector<int> factor_dims_;
  // Largest permitted exponent per generator in normal form.
  std::vector<int> bounds_;
  Terms tangent_;

  Ambient base_;
  int fiber_rank_ = 0;
  Projectivization convention_ = Projectivization::Quotients;
  Terms fiber_chern_;  // on the base's generators
  // xi_power_[e] is the normal form of xi^e for e >= fiber_rank_.
  std::vector<Terms> xi_power_;
};

/// P^d: Q[h]/(h^{d+1}), c(T) = (1+h)^{d+1}.
Ambient make_projective_space(int d);

/// P^{d_1} x ... x P^{d_k}.
Ambient make_product(const std::vector<int>& dims);

/// P(F) -> base for a rank-r bundle F given by its total Chern class on the
/// base. Quotient convention: sum_i c_i(F^v) xi^{r-i} = 0 and
/// c(T) = p*c(T_base) * c(p*F^v (x) O(1)).
Ambient make_projective_bundle(
    const Ambient& base, const ChowClass& fiber_chern, int rank,
    Projectivization convention = Projectivization::Quotients);

/// Coefficient of the fundamental class. Lower-degree parts are ignored.
Rational integrate(const ChowClass& x);

/// Integral of a class that must be homogeneous of top degree; anything else
/// is a bookkeeping bug and throws InternalError.
Rational integrate_top(const ChowClass& x, const std::string& what);

/// p* from the base of a projective bundle.
ChowClass pullback(const ChowClass& base_class, const Ambient& bundle);

/// p_* to the base. Throws InputError unless x lives on a projective bundle.
ChowClass pushforward(const ChowClass& x);

/// p_*(xi^e * p*alpha) from the Segre classes of the fiber bundle, without
/// using the bundle relation: s_{e-r+1}(F^v) * alpha, zero for e < r-1.
ChowClass segre_pushforward(const Ambient& bundle, int xi_exponent,
                            const ChowClass& base_class);

/// sum_i c_i(V) (1 + l)^{rank - i}: total Chern class of V (x) L.
ChowClass twist_chern(const ChowClass& chern, int rank, const ChowClass& l);

/// c_i -> (-1)^i c_i.
ChowClass dual_chern(const ChowClass& chern);

}  // namespace detloci
