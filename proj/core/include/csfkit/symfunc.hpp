#pragma once

#include "csfkit/partition.hpp"

#include <map>
#include <string>

namespace csfkit {

enum class Basis { m, e, p };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

/// A homogeneous symmetric function of fixed degree, stored as a sparse
/// map from partition to exact coefficient in one of the classical bases
/// (monomial m, elementary e, power-sum p).
///
/// Coefficients are exact rationals.  The m- and e-basis pipelines in this
/// library only ever produce integers; is_integral()/require_integral()
/// make that a checked property rather than a separate coefficient type.
/// Zero coefficients are never stored.  Term iteration follows the
/// partition listing order, which makes serialization deterministic.
class SymExpr {
 public:
  SymExpr(Basis basis, int degree);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Coefficient of the given partition (zero if absent).  Throws
  /// std::invalid_argument if the partition's degree does not match.
  Rational coeff(const Partition& lambda) const;

  /// Adds c to the coefficient of lambda, erasing the entry if it becomes
  /// zero.  Throws std::invalid_argument on degree mismatch.
  void add_term(const Partition& lambda, const Rational& c);

  const std::map<Partition, Rational>& terms() const { return terms_; }

  /// True when every coefficient is an integer.
  bool is_integral() const;
  /// Checked narrowing: throws std::logic_error if any coefficient has a
  /// nontrivial denominator.  The m- and e-basis results of the chromatic
  /// pipeline pass through this gate.
  const SymExpr& require_integral() const;

  /// Every partition with a strictly negative coefficient, in listing order.
  std::vector<std::pair<Partition, Rational>> negative_terms() const;

  bool operator==(const SymExpr& o) const;
  bool operator!=(const SymExpr& o) const { return !(*this == o); }

  /// Human-readable rendering such as "e(4) + 5*e(3,1) - 2*e(2,2)".
  std::string to_string() const;

 private:
  Basis basis_;
  int degree_;
  std::map<Partition, Rational> terms_;
};

/// Sum and product.  Operands must share a basis (and, for addition, a
/// degree).  Products are supported in the multiplicative bases e and p,
/// where e_lambda * e_mu = e_{lambda union mu}; degrees add.
SymExpr sym_add(const SymExpr& a, const SymExpr& b);
SymExpr sym_mul(const SymExpr& a, const SymExpr& b);

/// Expansion of e_mu in the monomial basis.  The coefficient of m_lambda
/// is the number of 0/1 matrices with row sums mu and column sums lambda.
/// Rows are cached per degree (degree <= 12).
SymExpr e_in_m(const Partition& mu);

/// Change of basis m -> e by triangular elimination: walking partitions in
/// listing order, emit e_{lambda'} with the current residual coefficient of
/// m_lambda and subtract that multiple of e_in_m(lambda').  e_in_m(mu) has
/// leading term m_{mu'} with coefficient 1 and all other support strictly
/// below mu' in dominance order, which refines the listing order, so one
/// forward sweep eliminates everything.  Input must be in the m basis;
/// degree <= 12.
SymExpr m_to_e(const SymExpr& m_expr);

/// Change of basis e -> p via Newton's identity
///   e_k = (1/k) * sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i,
/// extended multiplicatively.  Input must be in the e basis; degree <= 12.
/// Coefficients are genuinely rational in general.
SymExpr e_to_p(const SymExpr& e_expr);

/// Principal specialization x_1 = ... = x_k = 1, x_{k+1} = ... = 0:
///   e_j -> C(k, j),   p_j -> k,
///   m_lambda -> number of distinct rearrangements of lambda into k slots.
/// For the chromatic symmetric function this evaluates the chromatic
/// polynomial at k.  Requires k >= 0.
Rational eval_at_ones(const SymExpr& expr, int k);

/// Binomial coefficient C(n, k) as an exact integer (0 when k < 0 or k > n).
Int binomial(long n, long k);

}  // namespace csfkit
