// Copyright 2026 The distgraph Authors
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

// Bitset inner loops over adjacency rows.
//
// Every kernel has a portable scalar reference in kernels::scalar and, on
// x86-64, an AVX2 variant in kernels::avx2 compiled with a function-level
// target attribute. The free functions in kernels:: forward to whichever
// backend was selected at startup (AVX2 when the CPU reports avx2 and popcnt,
// unless DISTGRAPH_SIMD=scalar is set in the environment).

#ifndef DISTGRAPH_KERNELS_HPP_
#define DISTGRAPH_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <string_view>

namespace distgraph::kernels {

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();

/// Switches the process-wide backend. Throws std::invalid_argument when the
/// backend is not available on this CPU. Not synchronized; call before
/// starting worker threads.
void set_backend(Backend b);

/// out[i] = popcount(rows[i] & mask). `out` must be at least rows.size().
void masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask,
                     std::span<std::uint8_t> out);

/// Bitwise OR of rows[i] over every i set in `select`. Bits of `select` at or
/// beyond rows.size() are ignored.
std::uint64_t select_or(std::span<const std::uint64_t> rows,
                        std::uint64_t select);

/// out[i] = select_or(rows, rows[i]): everything reachable in two steps.
void two_step(std::span<const std::uint64_t> rows,
              std::span<std::uint64_t> out);

namespace scalar {
void masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask,
                     std::span<std::uint8_t> out);
std::uint64_t select_or(std::span<const std::uint64_t> rows,
                        std::uint64_t select);
void two_step(std::span<const std::uint64_t> rows,
              std::span<std::uint64_t> out);
}  // namespace scalar

namespace avx2 {
// Callable only when backend_available(Backend::kAvx2).
void masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask,
                     std::span<std::uint8_t> out);
std::uint64_t select_or(std::span<const std::uint64_t> rows,
                        std::uint64_t select);
void two_step(std::span<const std::uint64_t> rows,
              std::span<std::uint64_t> out);
}  // namespace avx2

}  // namespace distgraph::kernels

#endif  // DISTGRAPH_KERNELS_HPP_
