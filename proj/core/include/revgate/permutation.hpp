// Copyright 2026 The revgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace revgate {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator^(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

const char* to_string(Parity p);

/// A permutation of {0..degree-1} stored as its image table.
///
/// Products are written left to right: compose_lr(a, b) applies a first and
/// then b, so compose_lr(a, b)[i] == b[a[i]].
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;

  /// Validates that `images` is a bijection; throws Error otherwise.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles; each cycle maps c[i] -> c[i+1].
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  /// Skips the bijection check. For hot loops that construct images by composition.
  static Permutation from_images_unchecked(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;

  /// Sign via cycle decomposition, O(degree).
  Parity parity() const;

  /// Non-trivial cycles, each starting at its smallest point, sorted by start.
  std::vector<std::vector<Point>> cycles() const;

  /// Smallest moved point, or degree() when the permutation is the identity.
  Point first_moved_point() const;

  std::uint64_t hash() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

Permutation compose_lr(const Permutation& first, const Permutation& then);

}  // namespace revgate

template <>
struct std::hash<revgate::Permutation> {
  std::size_t operator()(const revgate::Permutation& p) const noexcept {
    return static_cast<std::size_t>(p.hash());
  }
};
