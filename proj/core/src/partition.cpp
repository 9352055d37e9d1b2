#include "csfkit/partition.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace csfkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    degree_ += parts_[i];
  }
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Int Partition::multiplicity_factorial() const {
  Int result = 1;
  size_t i = 0;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    for (size_t run = 2; run <= j - i; ++run) result *= static_cast<unsigned>(run);
    i = j;
  }
  return result;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
  for (int part : parts_)
    for (int j = 0; j < part; ++j) ++conj[static_cast<size_t>(j)];
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

bool Partition::operator<(const Partition& o) const {
  if (degree_ != o.degree_) return degree_ < o.degree_;
  // Reverse lexicographic within a degree: larger leading parts first.
  return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                      parts_.begin(), parts_.end());
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

long partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: n must be nonnegative");
  // Euler's pentagonal-number recurrence.
  std::vector<long> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) total += sign * p[static_cast<size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<size_t>(m - g2)];
    }
    p[static_cast<size_t>(m)] = total;
  }
  return p[static_cast<size_t>(n)];
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.degree() != lambda.degree())
    throw std::invalid_argument("dominance_leq: partitions must have equal degree");
  long mu_sum = 0, la_sum = 0;
  int len = std::max(mu.length(), lambda.length());
  for (int i = 0; i < len; ++i) {
    mu_sum += i < mu.length() ? mu.part(i) : 0;
    la_sum += i < lambda.length() ? lambda.part(i) : 0;
    if (mu_sum > la_sum) return false;
  }
  return true;
}

uint64_t PartitionTable::pack(const Partition& p) {
  // Parts and length are both <= 12 in the supported range, so 4 bits per
  // part always fits.
  uint64_t key = 0;
  for (int part : p.parts()) key = (key << 4) | static_cast<uint64_t>(part);
  return key;
}

PartitionTable::PartitionTable(int degree) : degree_(degree), list_(partitions(degree)) {
  if (degree < 0 || degree > kMaxTableDegree)
    throw std::invalid_argument("partition_table: degree out of supported range 0..12");
  index_.reserve(list_.size() * 2);
  for (size_t i = 0; i < list_.size(); ++i)
    index_.emplace(pack(list_[i]), static_cast<int>(i));
}

int PartitionTable::index_of(const Partition& lambda) const {
  if (lambda.degree() != degree_)
    throw std::invalid_argument("PartitionTable::index_of: degree mismatch");
  return index_.at(pack(lambda));
}

const PartitionTable& partition_table(int degree) {
  if (degree < 0 || degree > kMaxTableDegree)
    throw std::invalid_argument("partition_table: degree out of supported range 0..12");
  static std::once_flag once[kMaxTableDegree + 1];
  static std::unique_ptr<PartitionTable> tables[kMaxTableDegree + 1];
  std::call_once(once[degree], [degree] { tables[degree] = std::make_unique<PartitionTable>(degree); });
  return *tables[degree];
}

}  // namespace csfkit
