// Compiled with -mavx2 only on x86-64; reached through the dispatch table
// after a CPUID check.
#include "artemis/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace artemis::kernels {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble-table popcount; returns four 64-bit partial sums.
inline __m256i popcnt_epi64(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t hsum(__m256i acc) {
  alignas(32) std::uint64_t lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t count(std::span<const Word> a) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLanes <= a.size(); i += kLanes) acc = _mm256_add_epi64(acc, popcnt_epi64(load(&a[i])));
  std::size_t c = hsum(acc);
  for (; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_count(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + kLanes <= a.size(); i += kLanes)
    acc = _mm256_add_epi64(acc, popcnt_epi64(_mm256_and_si256(load(&a[i]), load(&b[i]))));
  std::size_t c = hsum(acc);
  for (; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t andnot_count(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  // _mm256_andnot_si256(x, y) computes ~x & y
  for (; i + kLanes <= a.size(); i += kLanes)
    acc = _mm256_add_epi64(acc, popcnt_epi64(_mm256_andnot_si256(load(&b[i]), load(&a[i]))));
  std::size_t c = hsum(acc);
  for (; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return c;
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes)
    store(&dst[i], _mm256_and_si256(load(&dst[i]), load(&src[i])));
  for (; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes)
    store(&dst[i], _mm256_andnot_si256(load(&src[i]), load(&dst[i])));
  for (; i < dst.size(); ++i) dst[i] &= ~src[i];
}

void or_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes)
    store(&dst[i], _mm256_or_si256(load(&dst[i]), load(&src[i])));
  for (; i < dst.size(); ++i) dst[i] |= src[i];
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes) {
    __m256i diff = _mm256_andnot_si256(load(&b[i]), load(&a[i]));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes)
    if (!_mm256_testz_si256(load(&a[i]), load(&b[i]))) return true;
  for (; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

constexpr KernelTable kAvx2{Isa::Avx2,  count,   and_count, andnot_count, and_into,
                            andnot_into, or_into, is_subset, intersects};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace artemis::kernels
