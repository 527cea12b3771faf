#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "czseg/kernels.hpp"

namespace czseg::kern {

const Ops& scalar_table();
const Ops& avx2_table();

namespace {

std::atomic<int> g_active{-1};  // -1 = not selected yet

Isa detect() {
#if (defined(__x86_64__) || defined(_M_X64) || defined(__i386__)) && defined(CZSEG_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa select() {
  if (const char* env = std::getenv("CZSEG_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0) {
      if (detect() != Isa::avx2) throw std::runtime_error("CZSEG_KERNELS=avx2 but AVX2 is unavailable");
      return Isa::avx2;
    }
  }
  return detect();
}

}  // namespace

bool avx2_supported() { return detect() == Isa::avx2; }

const Ops& table_for(Isa isa) { return isa == Isa::avx2 ? avx2_table() : scalar_table(); }

Isa active_isa() {
  int a = g_active.load(std::memory_order_relaxed);
  if (a < 0) {
    a = static_cast<int>(select());
    g_active.store(a, std::memory_order_relaxed);
  }
  return static_cast<Isa>(a);
}

void force_isa(Isa isa) { g_active.store(static_cast<int>(isa), std::memory_order_relaxed); }

const Ops& ops() { return table_for(active_isa()); }

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

}  // namespace czseg::kern
