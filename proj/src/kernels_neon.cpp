#include "hb/lattice.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace hb::kernels {

namespace {

int64_t dot_neon(const int32_t* a, const int32_t* b) {
  int64x2_t acc = vdupq_n_s64(0);
  for (int k = 0; k < kMaxRank; k += 4) {
    int32x4_t va = vld1q_s32(a + k), vb = vld1q_s32(b + k);
    acc = vmlal_s32(acc, vget_low_s32(va), vget_low_s32(vb));
    acc = vmlal_high_s32(acc, va, vb);
  }
  return vaddvq_s64(acc);
}

void axpy_neon(int32_t* y, const int32_t* x, int32_t a) {
  for (int k = 0; k < kMaxRank; k += 4)
    vst1q_s32(y + k, vmlaq_n_s32(vld1q_s32(y + k), vld1q_s32(x + k), a));
}

void pair_many_neon(const IVec* ws, size_t n, const IVec& v, int64_t* out) {
  for (size_t k = 0; k < n; ++k) out[k] = dot_neon(ws[k].c.data(), v.c.data());
}

const Table kNeon{"neon", dot_neon, axpy_neon, pair_many_neon};

}  // namespace

const Table* neon() { return &kNeon; }

}  // namespace hb::kernels

#else

namespace hb::kernels {
const Table* neon() { return nullptr; }
}  // namespace hb::kernels

#endif
