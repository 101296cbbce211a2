#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace hb {

constexpr int kMaxRank = 16;

// Integer numerator vector; unused trailing lanes stay zero so that the
// fixed-width kernels below can ignore the true rank.
struct alignas(32) IVec {
  std::array<int32_t, kMaxRank> c{};
  int32_t& operator[](int i) { return c[i]; }
  int32_t operator[](int i) const { return c[i]; }
  bool operator==(const IVec& o) const { return c == o.c; }
  bool operator!=(const IVec& o) const { return c != o.c; }
  bool operator<(const IVec& o) const { return c < o.c; }
};

struct IVecHash {
  size_t operator()(const IVec& v) const noexcept;
};

namespace kernels {

using DotFn = int64_t (*)(const int32_t* a, const int32_t* b);
using AxpyFn = void (*)(int32_t* y, const int32_t* x, int32_t a);
using PairManyFn = void (*)(const IVec* ws, size_t n, const IVec& v, int64_t* out);

struct Table {
  const char* name;
  DotFn dot;
  AxpyFn axpy;
  PairManyFn pair_many;
};

const Table& scalar();
// nullptr when the variant is not compiled in or the CPU lacks it.
const Table* avx2();
const Table* neon();
// Picks the widest supported variant unless HB_KERNELS=scalar|avx2|neon.
const Table& active();
// Returns false if the requested variant is unavailable.
bool select(const char* name);

}  // namespace kernels

inline int64_t dot(const IVec& a, const IVec& b) {
  return kernels::active().dot(a.c.data(), b.c.data());
}

// y += a * x
inline void axpy(IVec& y, const IVec& x, int32_t a) {
  kernels::active().axpy(y.c.data(), x.c.data(), a);
}

}  // namespace hb
