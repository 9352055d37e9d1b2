#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace csfkit {

// All coefficient arithmetic in the library is exact.  Integers are
// arbitrary-precision; rationals appear only where a basis genuinely
// requires them (the power-sum basis).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (degree 0) is allowed.  Partitions of the same
/// degree are ordered by the listing order used throughout: reverse
/// lexicographic, so for degree 4 the order is
///   (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
/// Across degrees, lower degree sorts first.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int degree() const { return degree_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }

  /// Multiplicity of the part value v.
  int multiplicity(int v) const;

  /// Product of mult_i! over all distinct part values i.
  Int multiplicity_factorial() const;

  /// Conjugate (transpose) partition.
  Partition conjugate() const;

  /// Compact display form, e.g. "(3,1,1)"; "()" for the empty partition.
  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  /// Listing order: degree first, then reverse lexicographic.
  bool operator<(const Partition& o) const;

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// All partitions of n in listing order; partitions(0) = { () }.
/// Throws std::invalid_argument for n < 0.
std::vector<Partition> partitions(int n);

/// Number of partitions of n (p(0) = 1).
long partition_count(int n);

/// Dominance (majorization) order on partitions of equal degree:
/// mu <= lambda iff every prefix sum of mu is <= the matching prefix sum
/// of lambda (padding with zeros).  Throws std::invalid_argument when the
/// degrees differ; partitions of different degree are incomparable.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Index lookup for all partitions of one degree, in listing order.
/// Instances are built once per degree and shared; see partition_table().
class PartitionTable {
 public:
  explicit PartitionTable(int degree);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(list_.size()); }
  const Partition& at(int index) const { return list_[static_cast<size_t>(index)]; }
  const std::vector<Partition>& list() const { return list_; }

  /// Position of lambda in the listing order.  Throws std::invalid_argument
  /// if lambda does not have this table's degree.
  int index_of(const Partition& lambda) const;

 private:
  int degree_;
  std::vector<Partition> list_;
  std::unordered_map<uint64_t, int> index_;  // packed parts -> position

  static uint64_t pack(const Partition& p);
};

/// Shared per-degree table, built lazily under a once-only guard.
/// Supported for 0 <= degree <= 12 (the verification range).
const PartitionTable& partition_table(int degree);

/// Largest degree for which cached symmetric-function tables are built.
inline constexpr int kMaxTableDegree = 12;

}  // namespace csfkit
