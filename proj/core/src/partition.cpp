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

#include "ulrich/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ulrich/errors.hpp"

namespace ulrich {

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::from_exponents(const std::vector<unsigned>& exponents) {
  std::vector<unsigned> parts;
  for (unsigned e : exponents) {
    if (e != 0) parts.push_back(e);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(unsigned k) { return Partition(std::vector<unsigned>(k, 1)); }

std::string Partition::label() const {
  if (parts_.empty()) return "1";
  std::string out = "m_{";
  const bool wide = std::any_of(parts_.begin(), parts_.end(), [](unsigned p) { return p > 9; });
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (wide && i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "}";
}

std::vector<Partition> partitions_of(unsigned weight) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  // Largest part first gives reverse-lex order directly.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(weight, weight);
  return out;
}

std::vector<Partition> partitions_up_to(unsigned max_weight) {
  std::vector<Partition> out;
  for (unsigned w = 0; w <= max_weight; ++w) {
    auto level = partitions_of(w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace ulrich
