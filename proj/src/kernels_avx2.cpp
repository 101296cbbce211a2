#include "hb/lattice.hpp"

#if defined(__x86_64__) && defined(HB_HAVE_AVX2)
#include <immintrin.h>

namespace hb::kernels {

namespace {

// Signed 32x32->64 products of the even lanes, then the odd lanes shifted down.
inline __m256i madd64(__m256i a, __m256i b) {
  __m256i even = _mm256_mul_epi32(a, b);
  __m256i odd = _mm256_mul_epi32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_add_epi64(even, odd);
}

inline int64_t hsum64(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return _mm_cvtsi128_si64(s) + _mm_extract_epi64(s, 1);
}

int64_t dot_avx2(const int32_t* a, const int32_t* b) {
  __m256i a0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(a));
  __m256i a1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(a + 8));
  __m256i b0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(b));
  __m256i b1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(b + 8));
  return hsum64(_mm256_add_epi64(madd64(a0, b0), madd64(a1, b1)));
}

void axpy_avx2(int32_t* y, const int32_t* x, int32_t a) {
  __m256i s = _mm256_set1_epi32(a);
  for (int k = 0; k < kMaxRank; k += 8) {
    __m256i* py = reinterpret_cast<__m256i*>(y + k);
    __m256i vx = _mm256_load_si256(reinterpret_cast<const __m256i*>(x + k));
    _mm256_store_si256(py, _mm256_add_epi32(_mm256_load_si256(py), _mm256_mullo_epi32(vx, s)));
  }
}

void pair_many_avx2(const IVec* ws, size_t n, const IVec& v, int64_t* out) {
  __m256i v0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(v.c.data()));
  __m256i v1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(v.c.data() + 8));
  for (size_t k = 0; k < n; ++k) {
    const int32_t* w = ws[k].c.data();
    __m256i w0 = _mm256_load_si256(reinterpret_cast<const __m256i*>(w));
    __m256i w1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(w + 8));
    out[k] = hsum64(_mm256_add_epi64(madd64(w0, v0), madd64(w1, v1)));
  }
}

const Table kAvx2{"avx2", dot_avx2, axpy_avx2, pair_many_avx2};

}  // namespace

const Table* avx2() {
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &kAvx2 : nullptr;
}

}  // namespace hb::kernels

#else

namespace hb::kernels {
const Table* avx2() { return nullptr; }
}  // namespace hb::kernels

#endif
