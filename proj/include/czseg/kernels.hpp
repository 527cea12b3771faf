#pragma once

#include <cstddef>

namespace czseg::kern {

// Inner-loop kernels over contiguous f64 buffers. Each entry exists as a
// scalar reference and, on x86 with AVX2+FMA, a vector variant; one table is
// selected when the process first touches ops() (override with the
// CZSEG_KERNELS env var or force_isa()).
//
// Equivalence contract, enforced by tests/test_kernels.cpp:
//   - elementwise kernels and matmul_nn/matmul_tn are bit-identical across
//     variants (same per-element fma sequence),
//   - sum/dot/matmul_nt reassociate across lanes and match to tight
//     relative tolerance.
struct Ops {
  void (*add)(const double* a, const double* b, double* y, std::size_t n);
  void (*sub)(const double* a, const double* b, double* y, std::size_t n);
  void (*mul)(const double* a, const double* b, double* y, std::size_t n);
  void (*div)(const double* a, const double* b, double* y, std::size_t n);
  // y = c * x
  void (*scale)(const double* x, double c, double* y, std::size_t n);
  // y += c * x
  void (*axpy)(double c, const double* x, double* y, std::size_t n);
  // y += a * b (elementwise)
  void (*fma_vv)(const double* a, const double* b, double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*max)(const double* x, std::size_t n);  // requires n >= 1
  bool (*all_finite)(const double* x, std::size_t n);
  // C[m,n] (+)= A[m,k] * B[k,n]
  void (*matmul_nn)(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n, bool accumulate);
  // C[m,n] (+)= A^T * B, A stored [k,m], B stored [k,n]
  void (*matmul_tn)(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n, bool accumulate);
  // C[m,n] (+)= A * B^T, A stored [m,k], B stored [n,k]
  void (*matmul_nt)(const double* a, const double* b, double* c, std::size_t m,
                    std::size_t k, std::size_t n, bool accumulate);
};

enum class Isa { scalar, avx2 };

const Ops& ops();
Isa active_isa();
void force_isa(Isa isa);  // test hook; wins over env/auto detection
bool avx2_supported();
const Ops& table_for(Isa isa);
const char* isa_name(Isa isa);

}  // namespace czseg::kern
