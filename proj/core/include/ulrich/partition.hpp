// Copyright 2026 The ulrich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULRICH_PARTITION_HPP
#define ULRICH_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace ulrich {

/// Integer partition with weakly decreasing positive parts. The empty
/// partition stands for the constant 1.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<unsigned> parts);
  explicit Partition(std::vector<unsigned> parts);

  /// Sorts and drops zeros, e.g. an exponent vector (0,2,1) gives {2,1}.
  static Partition from_exponents(const std::vector<unsigned>& exponents);
  /// The partition {1,...,1} with `k` parts.
  static Partition ones(unsigned k);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  unsigned weight() const noexcept { return weight_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// "m_{31}" style label; "1" for the empty partition.
  std::string label() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<unsigned> parts_;
  unsigned weight_ = 0;
};

/// Canonical serialization order: heavier partitions first, then reverse lex
/// ({4} < {3,1} < {2,2} < ... in this order).
struct BasisOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() > b.weight();
    return a.parts() > b.parts();
  }
};

/// Partitions of every weight 0..max_weight, by increasing weight and
/// reverse-lex within a weight.
std::vector<Partition> partitions_up_to(unsigned max_weight);

/// Partitions of exactly `weight`, reverse-lex.
std::vector<Partition> partitions_of(unsigned weight);

}  // namespace ulrich

#endif  // ULRICH_PARTITION_HPP
