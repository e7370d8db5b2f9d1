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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace revgate {

enum class Suite { Quick, Full };

/// Parses quick|full; throws Error otherwise.
Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);

struct ClaimOptions {
  Suite suite = Suite::Full;
  std::uint64_t seed = 20240601;
  unsigned workers = 1;
  std::size_t memory_budget = std::size_t{4} << 30;
};

struct ClaimResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// One line per checked case or summary; deterministic given the options.
  std::vector<std::string> details;
  double seconds = 0;
  double time_limit = 0;
};

inline constexpr int kClaimCount = 10;

ClaimResult run_claim(int id, const ClaimOptions& options);

/// Runs claims 1..kClaimCount in order, calling `on_result` after each one.
std::vector<ClaimResult> run_claims(const ClaimOptions& options,
                                    const std::function<void(const ClaimResult&)>& on_result = {});

}  // namespace revgate
