#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cspleth/rational.hpp"

namespace cspleth {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is the multiplicative identity for index concatenation.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws CapacityError-free std::invalid_argument on
  // non-positive input since callers construct these from trusted loops.
  explicit Partition(std::vector<int> parts);
  static Partition single(int n);

  int size() const;                 // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int part) const;
  const std::vector<int>& parts() const { return parts_; }

  // Concatenation (multiset union), the index rule for multiplying p/e/h.
  Partition merged(const Partition& o) const;

  // Product over part values i of multiplicity(i)!.
  BigInt multiplicity_factorial() const;

  // Ascending lexicographic on the parts vector, so () < (1) < (1,1) < (2).
  auto operator<=>(const Partition& o) const = default;

  std::string to_string() const;  // "[3,1,1]", "[]" for empty

  // All partitions of n, in the order given by operator<=>.
  static std::vector<Partition> all_of(int n);

 private:
  std::vector<int> parts_;
};

}  // namespace cspleth
