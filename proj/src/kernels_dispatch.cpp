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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "distgraph/kernels.hpp"

namespace distgraph::kernels {

namespace {

struct Table {
  Backend backend;
  void (*masked_popcount)(std::span<const std::uint64_t>, std::uint64_t,
                          std::span<std::uint8_t>);
  std::uint64_t (*select_or)(std::span<const std::uint64_t>, std::uint64_t);
  void (*two_step)(std::span<const std::uint64_t>, std::span<std::uint64_t>);
};

constexpr Table kScalarTable{Backend::kScalar, &scalar::masked_popcount,
                             &scalar::select_or, &scalar::two_step};
constexpr Table kAvx2Table{Backend::kAvx2, &avx2::masked_popcount,
                           &avx2::select_or, &avx2::two_step};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const Table* initial_table() {
  const char* env = std::getenv("DISTGRAPH_SIMD");
  if (env != nullptr && std::string(env) == "scalar") return &kScalarTable;
  return cpu_has_avx2() ? &kAvx2Table : &kScalarTable;
}

const Table*& current() {
  static const Table* table = initial_table();
  return table;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  return b == Backend::kScalar || cpu_has_avx2();
}

Backend active_backend() { return current()->backend; }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw std::invalid_argument(std::string(backend_name(b)) +
                                " kernels are not available on this CPU");
  }
  current() = b == Backend::kAvx2 ? &kAvx2Table : &kScalarTable;
}

void masked_popcount(std::span<const std::uint64_t> rows, std::uint64_t mask,
                     std::span<std::uint8_t> out) {
  current()->masked_popcount(rows, mask, out);
}

std::uint64_t select_or(std::span<const std::uint64_t> rows,
                        std::uint64_t select) {
  return current()->select_or(rows, select);
}

void two_step(std::span<const std::uint64_t> rows,
              std::span<std::uint64_t> out) {
  current()->two_step(rows, out);
}

}  // namespace distgraph::kernels
