#include "artemis/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace artemis::kernels {

#if !defined(ARTEMIS_HAVE_AVX2)
const KernelTable* avx2_table() { return nullptr; }
#endif
#if !defined(ARTEMIS_HAVE_NEON)
const KernelTable* neon_table() { return nullptr; }
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(ARTEMIS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
      // NEON is mandatory on AArch64.
      return neon_table() != nullptr;
  }
  return false;
}

namespace {

const KernelTable* table_for(Isa isa) {
  if (!cpu_supports(isa)) return nullptr;
  switch (isa) {
    case Isa::Scalar: return &scalar_table();
    case Isa::Avx2: return avx2_table();
    case Isa::Neon: return neon_table();
  }
  return nullptr;
}

const KernelTable* detect() {
  if (const char* env = std::getenv("ARTEMIS_KERNELS")) {
    std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (want == isa_name(isa)) {
        if (const KernelTable* t = table_for(isa)) return t;
        return &scalar_table();
      }
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (const KernelTable* t = table_for(isa)) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = detect();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

bool select(Isa isa) {
  const KernelTable* t = table_for(isa);
  if (!t) return false;
  g_active.store(t, std::memory_order_release);
  return true;
}

}  // namespace artemis::kernels
