// Copyright 2026 The leafc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "leafc/hash.hpp"
#include "leafc/image/rng.hpp"

namespace leafc {

inline constexpr const char* kSeedRule = "fnv1a64-splitmix64/v1";

/// Forward-slash form of a dataset-relative path.
inline std::string normalize_relative_path(std::string_view path) {
  std::string out(path);
  std::replace(out.begin(), out.end(), '\\', '/');
  return out;
}

/// Per-(image, corruption, severity) seed: FNV-1a-64 over
/// "<global_seed>\x1f<relative_path>\x1f<kind>\x1f<severity>" (decimal integers, UTF-8 path with
/// forward slashes), passed through the splitmix64 finalizer.
inline std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view relative_path, std::string_view kind,
                                 int severity) {
  constexpr std::string_view sep = "\x1f";
  std::uint64_t h = fnv1a64(std::to_string(global_seed));
  h = fnv1a64(sep, h);
  h = fnv1a64(normalize_relative_path(relative_path), h);
  h = fnv1a64(sep, h);
  h = fnv1a64(kind, h);
  h = fnv1a64(sep, h);
  h = fnv1a64(std::to_string(severity), h);
  return splitmix64(h);
}

}  // namespace leafc
