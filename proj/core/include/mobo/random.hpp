// Copyright 2026 The mobo Authors
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
#include <random>
#include <string_view>

namespace mobo {

/// Generator behind every seeded stream in the engine.
using Rng = std::mt19937_64;

/// Logged with every run so outputs can be tied to the generator recipe.
inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; stream seed = std::seed_seq{lo32(master), hi32(master), "
    "lo32(fnv1a64(tag)), hi32(fnv1a64(tag)), lo32(index), hi32(index)}";

/// Stream tags. Each consumer draws from its own stream, so turning one
/// consumer on or off never shifts another's numbers.
namespace stream {
inline constexpr std::string_view kInit = "init";
inline constexpr std::string_view kEhvi = "ehvi";
inline constexpr std::string_view kRandom = "random";
inline constexpr std::string_view kSynthetic = "synthetic";
}  // namespace stream

std::uint64_t fnv1a64(std::string_view text) noexcept;

/// Independent stream for (master seed, tag, index).
Rng make_stream(std::uint64_t master_seed, std::string_view tag,
                std::uint64_t index = 0);

/// Uniform double in [0, 1) from the top 53 bits of one generator output.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace mobo
