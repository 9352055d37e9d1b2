#include "csfkit/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace csfkit {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::p: return "p";
  }
  throw std::logic_error("basis_name: unknown basis");
}

Basis basis_from_name(const std::string& name) {
  if (name == "m") return Basis::m;
  if (name == "e") return Basis::e;
  if (name == "p") return Basis::p;
  throw std::invalid_argument("unknown basis '" + name + "' (expected m, e, or p)");
}

SymExpr::SymExpr(Basis basis, int degree) : basis_(basis), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("SymExpr: degree must be nonnegative");
}

Rational SymExpr::coeff(const Partition& lambda) const {
  if (lambda.degree() != degree_)
    throw std::invalid_argument("SymExpr::coeff: partition degree mismatch");
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymExpr::add_term(const Partition& lambda, const Rational& c) {
  if (lambda.degree() != degree_)
    throw std::invalid_argument("SymExpr::add_term: partition degree mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SymExpr::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return denominator(t.second) == 1; });
}

const SymExpr& SymExpr::require_integral() const {
  if (!is_integral())
    throw std::logic_error("SymExpr: expected integral coefficients in basis " + basis_name(basis_));
  return *this;
}

std::vector<std::pair<Partition, Rational>> SymExpr::negative_terms() const {
  std::vector<std::pair<Partition, Rational>> out;
  for (const auto& [lambda, c] : terms_)
    if (c < 0) out.emplace_back(lambda, c);
  return out;
}

bool SymExpr::operator==(const SymExpr& o) const {
  return basis_ == o.basis_ && degree_ == o.degree_ && terms_ == o.terms_;
}

std::string SymExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) out << a << "*";
    out << basis_name(basis_) << lambda.to_string();
    first = false;
  }
  return out.str();
}

SymExpr sym_add(const SymExpr& a, const SymExpr& b) {
  if (a.basis() != b.basis() || a.degree() != b.degree())
    throw std::invalid_argument("sym_add: operands must share basis and degree");
  SymExpr out = a;
  for (const auto& [lambda, c] : b.terms()) out.add_term(lambda, c);
  return out;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace

SymExpr sym_mul(const SymExpr& a, const SymExpr& b) {
  if (a.basis() != b.basis())
    throw std::invalid_argument("sym_mul: operands must share a basis");
  if (a.basis() == Basis::m)
    throw std::invalid_argument("sym_mul: products are supported in the e and p bases only");
  SymExpr out(a.basis(), a.degree() + b.degree());
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms())
      out.add_term(merge_parts(la, lb), ca * cb);
  return out;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

// ---------------------------------------------------------------------------
// e_in_m: counting 0/1 matrices with prescribed row and column sums.
// ---------------------------------------------------------------------------

namespace {

// Column demands are tracked as a sorted multiset packed 4 bits per entry
// (degree <= 12 keeps both part values and column counts within 12).
uint64_t pack_demands(const std::vector<int>& demands) {
  uint64_t key = 0;
  for (int d : demands) key = (key << 4) | static_cast<uint64_t>(d);
  return key;
}

struct MatrixCounter {
  const std::vector<int>& rows;  // row sums, weakly decreasing
  std::unordered_map<uint64_t, Int> memo;  // keyed on (row index, demands)

  // Enumerates, per group of equal-demand columns, how many of the group
  // this row occupies; multiplies the binomial choices.
  void choose(const std::vector<std::pair<int, int>>& groups, size_t gi, int left,
              std::vector<int>& taken, size_t row, Int& total) {
    if (left == 0) {
      std::vector<int> next;
      for (size_t g = 0; g < groups.size(); ++g) {
        auto [value, count] = groups[g];
        int t = g < taken.size() ? taken[g] : 0;
        for (int i = 0; i < count - t; ++i) next.push_back(value);
        for (int i = 0; i < t; ++i)
          if (value - 1 > 0) next.push_back(value - 1);
      }
      std::sort(next.begin(), next.end(), std::greater<int>());
      Int ways = 1;
      for (size_t g = 0; g < taken.size(); ++g)
        ways *= binomial(groups[g].second, taken[g]);
      total += ways * count_from(row + 1, next);
      return;
    }
    if (gi >= groups.size()) return;
    int cap = std::min(groups[gi].second, left);
    for (int t = 0; t <= cap; ++t) {
      taken.push_back(t);
      choose(groups, gi + 1, left - t, taken, row, total);
      taken.pop_back();
    }
  }

  Int count_from(size_t row, const std::vector<int>& demands) {
    if (row == rows.size())
      return demands.empty() ? Int(1) : Int(0);
    uint64_t key = (static_cast<uint64_t>(row) << 48) | pack_demands(demands);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<std::pair<int, int>> groups;  // (demand value, column count)
    for (size_t i = 0; i < demands.size();) {
      size_t j = i;
      while (j < demands.size() && demands[j] == demands[i]) ++j;
      groups.emplace_back(demands[i], static_cast<int>(j - i));
      i = j;
    }
    Int total = 0;
    std::vector<int> taken;
    choose(groups, 0, rows[row], taken, row, total);
    memo.emplace(key, total);
    return total;
  }
};

/// Number of 0/1 matrices with row sums mu and column sums lambda.
Int matrix_count(const Partition& mu, const Partition& lambda) {
  MatrixCounter counter{mu.parts(), {}};
  return counter.count_from(0, lambda.parts());
}

struct DegreeCache {
  // e_in_m_rows[i][j] = coefficient of m_{lambda_j} in e_{mu_i}.
  std::vector<std::vector<Int>> e_in_m_rows;
};

const DegreeCache& degree_cache(int degree) {
  static std::once_flag once[kMaxTableDegree + 1];
  static DegreeCache caches[kMaxTableDegree + 1];
  if (degree < 0 || degree > kMaxTableDegree)
    throw std::invalid_argument("symfunc: degree out of supported range 0..12");
  std::call_once(once[degree], [degree] {
    const PartitionTable& table = partition_table(degree);
    auto& rows = caches[degree].e_in_m_rows;
    rows.assign(static_cast<size_t>(table.size()), {});
    for (int i = 0; i < table.size(); ++i) {
      rows[static_cast<size_t>(i)].resize(static_cast<size_t>(table.size()));
      for (int j = 0; j < table.size(); ++j)
        rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            matrix_count(table.at(i), table.at(j));
    }
  });
  return caches[degree];
}

}  // namespace

SymExpr e_in_m(const Partition& mu) {
  int degree = mu.degree();
  const PartitionTable& table = partition_table(degree);
  const auto& row = degree_cache(degree).e_in_m_rows[static_cast<size_t>(table.index_of(mu))];
  SymExpr out(Basis::m, degree);
  for (int j = 0; j < table.size(); ++j)
    if (row[static_cast<size_t>(j)] != 0) out.add_term(table.at(j), Rational(row[static_cast<size_t>(j)]));
  return out;
}

SymExpr m_to_e(const SymExpr& m_expr) {
  if (m_expr.basis() != Basis::m)
    throw std::invalid_argument("m_to_e: input must be in the m basis");
  int degree = m_expr.degree();
  const PartitionTable& table = partition_table(degree);
  const auto& rows = degree_cache(degree).e_in_m_rows;

  std::vector<Rational> residue(static_cast<size_t>(table.size()), Rational(0));
  for (const auto& [lambda, c] : m_expr.terms())
    residue[static_cast<size_t>(table.index_of(lambda))] = c;

  // e_in_m(mu) is unitriangular: leading term m_{mu'} with coefficient 1,
  // all other support strictly below mu' in dominance order, hence strictly
  // later in the listing order.  A single forward sweep eliminates residue.
  SymExpr out(Basis::e, degree);
  for (int i = 0; i < table.size(); ++i) {
    Rational c = residue[static_cast<size_t>(i)];
    if (c == 0) continue;
    Partition mu = table.at(i).conjugate();
    out.add_term(mu, c);
    const auto& row = rows[static_cast<size_t>(table.index_of(mu))];
    for (int j = i; j < table.size(); ++j)
      if (row[static_cast<size_t>(j)] != 0)
        residue[static_cast<size_t>(j)] -= c * Rational(row[static_cast<size_t>(j)]);
  }
  for (const auto& r : residue)
    if (r != 0) throw std::logic_error("m_to_e: elimination failed to terminate cleanly");
  return out;
}

namespace {

// Expansion of e_k in the power-sum basis, by Newton's identity
//   e_k = (1/k) * sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
const SymExpr& elementary_in_p(int k) {
  static std::once_flag once[kMaxTableDegree + 1];
  static std::unique_ptr<SymExpr> cache[kMaxTableDegree + 1];
  if (k < 0 || k > kMaxTableDegree)
    throw std::invalid_argument("e_to_p: part size out of supported range 0..12");
  std::call_once(once[k], [k] {
    if (k == 0) {
      auto unit = std::make_unique<SymExpr>(Basis::p, 0);
      unit->add_term(Partition{}, 1);
      cache[0] = std::move(unit);
      return;
    }
    auto out = std::make_unique<SymExpr>(Basis::p, k);
    for (int i = 1; i <= k; ++i) {
      SymExpr p_i(Basis::p, i);
      p_i.add_term(Partition({i}), 1);
      SymExpr product = sym_mul(elementary_in_p(k - i), p_i);
      Rational scale = Rational(i % 2 == 1 ? 1 : -1) / k;
      for (const auto& [lambda, c] : product.terms()) out->add_term(lambda, scale * c);
    }
    cache[k] = std::move(out);
  });
  return *cache[k];
}

}  // namespace

SymExpr e_to_p(const SymExpr& e_expr) {
  if (e_expr.basis() != Basis::e)
    throw std::invalid_argument("e_to_p: input must be in the e basis");
  if (e_expr.degree() > kMaxTableDegree)
    throw std::invalid_argument("e_to_p: degree out of supported range 0..12");
  SymExpr out(Basis::p, e_expr.degree());
  for (const auto& [lambda, c] : e_expr.terms()) {
    SymExpr product(Basis::p, 0);
    product.add_term(Partition{}, 1);
    for (int part : lambda.parts()) product = sym_mul(product, elementary_in_p(part));
    for (const auto& [mu, pc] : product.terms()) out.add_term(mu, c * pc);
  }
  return out;
}

Rational eval_at_ones(const SymExpr& expr, int k) {
  if (k < 0) throw std::invalid_argument("eval_at_ones: k must be nonnegative");
  Rational total = 0;
  for (const auto& [lambda, c] : expr.terms()) {
    switch (expr.basis()) {
      case Basis::e: {
        Int value = 1;
        for (int part : lambda.parts()) value *= binomial(k, part);
        total += c * Rational(value);
        break;
      }
      case Basis::p: {
        Int value = 1;
        for (int i = 0; i < lambda.length(); ++i) value *= k;
        total += c * Rational(value);
        break;
      }
      case Basis::m: {
        // Number of distinct rearrangements of lambda's parts into k
        // ordered slots: k falling ell, divided by the part multiplicities.
        if (lambda.length() > k) break;
        Int value = 1;
        for (int i = 0; i < lambda.length(); ++i) value *= k - i;
        total += c * Rational(value) / Rational(lambda.multiplicity_factorial());
        break;
      }
    }
  }
  return total;
}

}  // namespace csfkit
