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

#include <stdexcept>

#include "distgraph/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define DISTGRAPH_HAVE_X86 1
#include <immintrin.h>
#else
#define DISTGRAPH_HAVE_X86 0
#endif

namespace distgraph::kernels::avx2 {

#if DISTGRAPH_HAVE_X86

#define DISTGRAPH_AVX2 __attribute__((target("avx2,popcnt")))

namespace {

// Per-lane 64-bit popcount: nibble lookup, then horizontal byte sums.
DISTGRAPH_AVX2 inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2,
                                       3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3, 1, 2,
                                       2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                        _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

// Lane i is all-ones when bit i of `nibble` is set.
DISTGRAPH_AVX2 inline __m256i expand_nibble(unsigned nibble) {
  const __m256i bits = _mm256_setr_epi64x(1, 2, 4, 8);
  const __m256i spread = _mm256_set1_epi64x(static_cast<long long>(nibble));
  return _mm256_cmpeq_epi64(_mm256_and_si256(spread, bits), bits);
}

}  // namespace

DISTGRAPH_AVX2 void masked_popcount(std::span<const std::uint64_t> rows,
                                    std::uint64_t mask,
                                    std::span<std::uint8_t> out) {
  const std::size_t n = rows.size();
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(rows.data() + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes),
                       popcount_epi64(_mm256_and_si256(v, m)));
    out[i] = static_cast<std::uint8_t>(lanes[0]);
    out[i + 1] = static_cast<std::uint8_t>(lanes[1]);
    out[i + 2] = static_cast<std::uint8_t>(lanes[2]);
    out[i + 3] = static_cast<std::uint8_t>(lanes[3]);
  }
  for (; i < n; ++i) {
    out[i] = static_cast<std::uint8_t>(_mm_popcnt_u64(rows[i] & mask));
  }
}

DISTGRAPH_AVX2 std::uint64_t select_or(std::span<const std::uint64_t> rows,
                                       std::uint64_t select) {
  const std::size_t n = rows.size();
  if (n < 64) select &= (std::uint64_t{1} << n) - 1;
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const unsigned nibble = static_cast<unsigned>((select >> i) & 0xF);
    if (nibble == 0) continue;
    const __m256i v = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(rows.data() + i));
    acc = _mm256_or_si256(acc, _mm256_and_si256(v, expand_nibble(nibble)));
  }
  const __m128i folded = _mm_or_si128(_mm256_castsi256_si128(acc),
                                      _mm256_extracti128_si256(acc, 1));
  std::uint64_t result = static_cast<std::uint64_t>(_mm_cvtsi128_si64(folded)) |
                         static_cast<std::uint64_t>(_mm_extract_epi64(folded, 1));
  for (; i < n; ++i) {
    if ((select >> i) & 1U) result |= rows[i];
  }
  return result;
}

DISTGRAPH_AVX2 void two_step(std::span<const std::uint64_t> rows,
                             std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i] = select_or(rows, rows[i]);
  }
}

#else  // !DISTGRAPH_HAVE_X86

void masked_popcount(std::span<const std::uint64_t>, std::uint64_t,
                     std::span<std::uint8_t>) {
  throw std::logic_error("AVX2 kernels are not built on this architecture");
}
std::uint64_t select_or(std::span<const std::uint64_t>, std::uint64_t) {
  throw std::logic_error("AVX2 kernels are not built on this architecture");
}
void two_step(std::span<const std::uint64_t>, std::span<std::uint64_t>) {
  throw std::logic_error("AVX2 kernels are not built on this architecture");
}

#endif

}  // namespace distgraph::kernels::avx2
