#pragma once

// Word-level bitset kernels behind VertexSet and the adjacency matrix.
//
// Every kernel has a portable scalar reference implementation. SIMD variants
// (AVX2 on x86-64, NEON on AArch64) are compiled in separate translation
// units and selected once at runtime from the host CPU features. The
// ARTEMIS_KERNELS environment variable ("scalar", "avx2", "neon") overrides
// the choice; an unsupported override falls back to scalar.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace artemis::kernels {

using Word = std::uint64_t;

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Kernel table. All spans passed to one call must have equal length.
struct KernelTable {
  Isa isa;
  // popcount(a)
  std::size_t (*count)(std::span<const Word> a);
  // popcount(a & b)
  std::size_t (*and_count)(std::span<const Word> a, std::span<const Word> b);
  // popcount(a & ~b)
  std::size_t (*andnot_count)(std::span<const Word> a, std::span<const Word> b);
  // dst &= src
  void (*and_into)(std::span<Word> dst, std::span<const Word> src);
  // dst &= ~src
  void (*andnot_into)(std::span<Word> dst, std::span<const Word> src);
  // dst |= src
  void (*or_into)(std::span<Word> dst, std::span<const Word> src);
  // (a & ~b) == 0
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
  // (a & b) != 0
  bool (*intersects)(std::span<const Word> a, std::span<const Word> b);
};

const KernelTable& scalar_table();

/// Returns nullptr when the variant was not compiled for this target.
const KernelTable* avx2_table();
const KernelTable* neon_table();

bool cpu_supports(Isa isa);

/// The table in use. Resolved on first call.
const KernelTable& active();

/// Forces a variant (tests, benchmarks). Returns false and leaves the active
/// table unchanged when the variant is unavailable on this host.
bool select(Isa isa);

}  // namespace artemis::kernels
