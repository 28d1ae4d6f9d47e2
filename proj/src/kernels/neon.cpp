// AArch64 only. Two words per 128-bit register.
#include "artemis/kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace artemis::kernels {
namespace {

constexpr std::size_t kLanes = 2;

inline std::size_t popcnt(uint64x2_t v) {
  return static_cast<std::size_t>(vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

std::size_t count(std::span<const Word> a) {
  std::size_t i = 0, c = 0;
  for (; i + kLanes <= a.size(); i += kLanes) c += popcnt(vld1q_u64(&a[i]));
  for (; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i]));
  return c;
}

std::size_t and_count(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0, c = 0;
  for (; i + kLanes <= a.size(); i += kLanes) c += popcnt(vandq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i])));
  for (; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t andnot_count(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0, c = 0;
  for (; i + kLanes <= a.size(); i += kLanes) c += popcnt(vbicq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i])));
  for (; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return c;
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes) vst1q_u64(&dst[i], vandq_u64(vld1q_u64(&dst[i]), vld1q_u64(&src[i])));
  for (; i < dst.size(); ++i) dst[i] &= src[i];
}

void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes) vst1q_u64(&dst[i], vbicq_u64(vld1q_u64(&dst[i]), vld1q_u64(&src[i])));
  for (; i < dst.size(); ++i) dst[i] &= ~src[i];
}

void or_into(std::span<Word> dst, std::span<const Word> src) {
  std::size_t i = 0;
  for (; i + kLanes <= dst.size(); i += kLanes) vst1q_u64(&dst[i], vorrq_u64(vld1q_u64(&dst[i]), vld1q_u64(&src[i])));
  for (; i < dst.size(); ++i) dst[i] |= src[i];
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes)
    if (vmaxvq_u32(vreinterpretq_u32_u64(vbicq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i]))))) return false;
  for (; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(std::span<const Word> a, std::span<const Word> b) {
  std::size_t i = 0;
  for (; i + kLanes <= a.size(); i += kLanes)
    if (vmaxvq_u32(vreinterpretq_u32_u64(vandq_u64(vld1q_u64(&a[i]), vld1q_u64(&b[i]))))) return true;
  for (; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

constexpr KernelTable kNeon{Isa::Neon,   count,   and_count, andnot_count, and_into,
                            andnot_into, or_into, is_subset, intersects};

}  // namespace

const KernelTable* neon_table() { return &kNeon; }

}  // namespace artemis::kernels
