#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <csfkit/partition.hpp>
#include <csfkit/symfunc.hpp>

#include <algorithm>
#include <map>
#include <vector>

using namespace csfkit;

namespace {

Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

// Multiply two monomials given as exponent vectors (one slot per variable).
std::vector<int> merge_exponents(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Expand e_mu as a polynomial in `vars` variables and collect coefficients
// per exponent-multiset.  Independent oracle for e_in_m.
std::map<std::vector<int>, long> expand_elementary(const Partition& mu, int vars) {
  std::map<std::vector<int>, long> poly;
  poly[std::vector<int>(vars, 0)] = 1;
  for (int part : mu.parts()) {
    // e_part = sum over `part`-subsets of variables.
    std::vector<std::vector<int>> monomials;
    std::vector<int> idx(part);
    for (int i = 0; i < part; ++i) idx[i] = i;
    if (part > vars) return {};
    while (true) {
      std::vector<int> mono(vars, 0);
      for (int i : idx) mono[i] = 1;
      monomials.push_back(mono);
      int i = part - 1;
      while (i >= 0 && idx[i] == vars - part + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < part; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::map<std::vector<int>, long> next;
    for (const auto& [expo, coeff] : poly)
      for (const auto& mono : monomials) next[merge_exponents(expo, mono)] += coeff;
    poly = std::move(next);
  }
  return poly;
}

Partition exponent_shape(const std::vector<int>& expo) {
  std::vector<int> parts;
  for (int e : expo)
    if (e > 0) parts.push_back(e);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

}  // namespace

TEST_CASE("partition listing order matches degree-then-reverse-lex") {
  auto order4 = partitions(4);
  std::vector<std::string> expected = {"(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"};
  REQUIRE(order4.size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) CHECK(order4[i].to_string() == expected[i]);
  for (size_t i = 0; i + 1 < order4.size(); ++i) CHECK(order4[i] < order4[i + 1]);

  auto order0 = partitions(0);
  REQUIRE(order0.size() == 1);
  CHECK(order0[0].to_string() == "()");
  CHECK(order0[0].degree() == 0);
}

TEST_CASE("partition counts match the classical sequence") {
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) {
    CHECK(partition_count(n) == expected[n]);
    CHECK(static_cast<long>(partitions(n).size()) == expected[n]);
  }
  CHECK_THROWS_AS(partitions(-1), std::invalid_argument);
}

TEST_CASE("partition constructor validates weakly decreasing positive parts") {
  CHECK_THROWS_AS(p({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(p({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(p({-3}), std::invalid_argument);
  CHECK(p({3, 1, 1}).degree() == 5);
  CHECK(p({3, 1, 1}).length() == 3);
  CHECK(p({3, 1, 1}).part(0) == 3);
  CHECK(p({3, 1, 1}).multiplicity(1) == 2);
  CHECK(p({3, 1, 1}).multiplicity(2) == 0);
}

TEST_CASE("conjugation is an involution and matches hand values") {
  CHECK(p({3, 1}).conjugate() == p({2, 1, 1}));
  CHECK(p({2, 2}).conjugate() == p({2, 2}));
  CHECK(p({5}).conjugate() == p({1, 1, 1, 1, 1}));
  for (int n = 0; n <= 8; ++n)
    for (const auto& mu : partitions(n)) {
      CHECK(mu.conjugate().conjugate() == mu);
      CHECK(mu.conjugate().degree() == n);
    }
}

TEST_CASE("multiplicity factorial") {
  CHECK(p({2, 2, 1}).multiplicity_factorial() == 2);
  CHECK(p({1, 1, 1, 1}).multiplicity_factorial() == 24);
  CHECK(p({3, 2, 1}).multiplicity_factorial() == 1);
  CHECK(p({2, 2, 2, 1, 1}).multiplicity_factorial() == 12);
  CHECK(Partition().multiplicity_factorial() == 1);
}

TEST_CASE("dominance order is consistent with the listing order") {
  CHECK(dominance_leq(p({2, 2}), p({3, 1})));
  CHECK_FALSE(dominance_leq(p({3, 1}), p({2, 2})));
  CHECK(dominance_leq(p({2, 1, 1}), p({4})));
  CHECK_THROWS_AS(dominance_leq(p({2}), p({1, 1, 1})), std::invalid_argument);

  // Dominance-greater partitions appear earlier in the listing.
  for (int n = 1; n <= 9; ++n) {
    auto list = partitions(n);
    for (const auto& mu : list)
      for (const auto& lam : list)
        if (dominance_leq(mu, lam) && !(mu == lam)) CHECK(lam < mu);
  }
}

TEST_CASE("partition table indexing round-trips") {
  for (int n = 0; n <= 12; ++n) {
    const PartitionTable& table = partition_table(n);
    REQUIRE(table.size() == partitions(n).size());
    for (size_t i = 0; i < table.size(); ++i)
      CHECK(table.index_of(table.at(i)) == i);
  }
  CHECK_THROWS_AS(partition_table(4).index_of(p({3, 2})), std::invalid_argument);
}

TEST_CASE("symexpr term bookkeeping") {
  SymExpr expr(Basis::e, 4);
  CHECK(expr.is_zero());
  expr.add_term(p({3, 1}), 5);
  expr.add_term(p({4}), 4);
  expr.add_term(p({2, 2}), -2);
  expr.add_term(p({2, 1, 1}), 1);
  CHECK(expr.term_count() == 4);
  CHECK(expr.coeff(p({3, 1})) == 5);
  CHECK(expr.coeff(p({1, 1, 1, 1})) == 0);
  CHECK(expr.to_string() == "4*e(4) + 5*e(3,1) - 2*e(2,2) + e(2,1,1)");

  expr.add_term(p({3, 1}), -5);  // cancels to zero and is erased
  CHECK(expr.term_count() == 3);
  CHECK(expr.coeff(p({3, 1})) == 0);

  auto negatives = expr.negative_terms();
  REQUIRE(negatives.size() == 1);
  CHECK(negatives[0].first == p({2, 2}));
  CHECK(negatives[0].second == -2);

  CHECK_THROWS_AS(expr.add_term(p({3}), 1), std::invalid_argument);
  CHECK_THROWS_AS(expr.coeff(p({3})), std::invalid_argument);
  CHECK_THROWS_AS(SymExpr(Basis::m, -1), std::invalid_argument);
}

TEST_CASE("integrality checks") {
  SymExpr expr(Basis::p, 2);
  expr.add_term(p({1, 1}), Rational(1, 2));
  CHECK_FALSE(expr.is_integral());
  CHECK_THROWS_AS(expr.require_integral(), std::logic_error);
  expr.add_term(p({1, 1}), Rational(1, 2));
  CHECK(expr.is_integral());
  CHECK_NOTHROW(expr.require_integral());
}

TEST_CASE("basis names round-trip") {
  for (Basis b : {Basis::m, Basis::e, Basis::p})
    CHECK(basis_from_name(basis_name(b)) == b);
  CHECK_THROWS_AS(basis_from_name("q"), std::invalid_argument);
}

TEST_CASE("addition and multiplication") {
  SymExpr a(Basis::e, 2);
  a.add_term(p({2}), 1);
  a.add_term(p({1, 1}), 1);
  SymExpr b(Basis::e, 1);
  b.add_term(p({1}), 1);
  SymExpr ab = sym_mul(a, b);
  CHECK(ab.degree() == 3);
  CHECK(ab.coeff(p({2, 1})) == 1);
  CHECK(ab.coeff(p({1, 1, 1})) == 1);
  CHECK(ab.term_count() == 2);

  SymExpr sum = sym_add(a, a);
  CHECK(sum.coeff(p({2})) == 2);
  CHECK_THROWS_AS(sym_add(a, b), std::invalid_argument);

  SymExpr m1(Basis::m, 1);
  m1.add_term(p({1}), 1);
  CHECK_THROWS_AS(sym_mul(m1, m1), std::invalid_argument);

  SymExpr p2(Basis::p, 2);
  p2.add_term(p({2}), 3);
  SymExpr pp = sym_mul(p2, p2);
  CHECK(pp.coeff(p({2, 2})) == 9);
}

TEST_CASE("e_in_m agrees with direct polynomial expansion up to degree 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions(n)) {
      SymExpr expansion = e_in_m(mu);
      auto poly = expand_elementary(mu, n);
      std::map<Partition, long> oracle;
      for (const auto& [expo, coeff] : poly) {
        Partition shape = exponent_shape(expo);
        if (shape.length() == 0) continue;
        // Record the coefficient once per monomial shape; every monomial of
        // the same shape has the same coefficient in a symmetric function.
        auto it = oracle.find(shape);
        if (it == oracle.end())
          oracle[shape] = coeff;
        else
          CHECK(it->second == coeff);
      }
      for (const auto& lam : partitions(n))
        CHECK(expansion.coeff(lam) == (oracle.count(lam) ? oracle[lam] : 0));
    }
}

TEST_CASE("e_in_m hand values") {
  SymExpr e21 = e_in_m(p({2, 1}));
  CHECK(e21.coeff(p({2, 1})) == 1);
  CHECK(e21.coeff(p({1, 1, 1})) == 3);
  CHECK(e21.coeff(p({3})) == 0);

  // Leading term: m_{mu'} has coefficient 1.
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions(n)) CHECK(e_in_m(mu).coeff(mu.conjugate()) == 1);
}

TEST_CASE("m_to_e inverts e_in_m") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions(n)) {
      SymExpr in_m = e_in_m(mu);
      SymExpr back = m_to_e(in_m);
      CHECK(back.term_count() == 1);
      CHECK(back.coeff(mu) == 1);
    }
}

TEST_CASE("m_to_e round-trips arbitrary integer expressions") {
  for (int n = 1; n <= 6; ++n) {
    // A deterministic pseudo-random m-expression.
    SymExpr expr(Basis::m, n);
    long seed = 12345;
    for (const auto& lam : partitions(n)) {
      seed = (seed * 1103515245 + 12345) % 2147483648;
      expr.add_term(lam, (seed % 19) - 9);
    }
    SymExpr in_e = m_to_e(expr);
    SymExpr reexpanded(Basis::m, n);
    for (const auto& [lam, coeff] : in_e.terms()) {
      SymExpr block = e_in_m(lam);
      for (const auto& [shape, c] : block.terms()) reexpanded.add_term(shape, c * coeff);
    }
    CHECK(reexpanded == expr);
  }
  SymExpr wrong(Basis::e, 2);
  wrong.add_term(p({2}), 1);
  CHECK_THROWS_AS(m_to_e(wrong), std::invalid_argument);
}

TEST_CASE("e_to_p matches Newton identities at small degree") {
  SymExpr e2(Basis::e, 2);
  e2.add_term(p({2}), 1);
  SymExpr in_p = e_to_p(e2);
  CHECK(in_p.coeff(p({1, 1})) == Rational(1, 2));
  CHECK(in_p.coeff(p({2})) == Rational(-1, 2));

  SymExpr e3(Basis::e, 3);
  e3.add_term(p({3}), 1);
  SymExpr e3p = e_to_p(e3);
  CHECK(e3p.coeff(p({1, 1, 1})) == Rational(1, 6));
  CHECK(e3p.coeff(p({2, 1})) == Rational(-1, 2));
  CHECK(e3p.coeff(p({3})) == Rational(1, 3));

  SymExpr wrong(Basis::m, 2);
  wrong.add_term(p({2}), 1);
  CHECK_THROWS_AS(e_to_p(wrong), std::invalid_argument);
}

TEST_CASE("eval_at_ones agrees across bases") {
  // e_j(1^k) = C(k, j).
  for (int j = 0; j <= 5; ++j) {
    SymExpr ej(Basis::e, j);
    ej.add_term(j == 0 ? Partition() : p({j}), 1);
    for (int k = 0; k <= 8; ++k) CHECK(eval_at_ones(ej, k) == Rational(binomial(k, j)));
  }
  // p_lambda(1^k) = k^(length).
  SymExpr p22(Basis::p, 4);
  p22.add_term(p({2, 2}), 1);
  CHECK(eval_at_ones(p22, 3) == 9);
  // m_{2,1}(1^2) = 2 (monomials x1^2 x2 and x2^2 x1).
  SymExpr m21(Basis::m, 3);
  m21.add_term(p({2, 1}), 1);
  CHECK(eval_at_ones(m21, 2) == 2);
  CHECK_THROWS_AS(eval_at_ones(m21, -1), std::invalid_argument);

  // Basis change preserves principal evaluations.
  for (int n = 1; n <= 6; ++n) {
    SymExpr expr(Basis::e, n);
    long seed = 99;
    for (const auto& lam : partitions(n)) {
      seed = (seed * 48271) % 2147483647;
      expr.add_term(lam, (seed % 11) - 5);
    }
    SymExpr in_p = e_to_p(expr);
    for (int k = 0; k <= 6; ++k) CHECK(eval_at_ones(expr, k) == eval_at_ones(in_p, k));
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(52, 5) == 2598960);
}
