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

#include <bit>

#include "distgraph/kernels.hpp"

namespace distgraph::kernels::scalar {

void masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask,
                     std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(std::popcount(rows[i] & mask));
  }
}

std::uint64_t select_or(std::span<const std::uint64_t> rows,
                        std::uint64_t select) {
  if (rows.size() < 64) select &= (std::uint64_t{1} << rows.size()) - 1;
  std::uint64_t acc = 0;
  for (; select != 0; select &= select - 1) {
    acc |= rows[static_cast<std::size_t>(std::countr_zero(select))];
  }
  return acc;
}

void two_step(std::span<const std::uint64_t> rows,
              std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i] = select_or(rows, rows[i]);
  }
}

}  // namespace distgraph::kernels::scalar
