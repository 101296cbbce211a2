#include "hb/lattice.hpp"

#include <cstdlib>
#include <cstring>

namespace hb {

size_t IVecHash::operator()(const IVec& v) const noexcept {
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < kMaxRank; ++i) {
    h ^= static_cast<uint32_t>(v.c[i]);
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h ^ (h >> 29));
}

namespace kernels {

namespace {

int64_t dot_scalar(const int32_t* a, const int32_t* b) {
  int64_t s = 0;
  for (int i = 0; i < kMaxRank; ++i) s += int64_t(a[i]) * b[i];
  return s;
}

void axpy_scalar(int32_t* y, const int32_t* x, int32_t a) {
  for (int i = 0; i < kMaxRank; ++i) y[i] += a * x[i];
}

void pair_many_scalar(const IVec* ws, size_t n, const IVec& v, int64_t* out) {
  for (size_t k = 0; k < n; ++k) out[k] = dot_scalar(ws[k].c.data(), v.c.data());
}

const Table kScalar{"scalar", dot_scalar, axpy_scalar, pair_many_scalar};

const Table* g_active = nullptr;

const Table* pick(const char* name) {
  if (!std::strcmp(name, "scalar")) return &kScalar;
  if (!std::strcmp(name, "avx2")) return avx2();
  if (!std::strcmp(name, "neon")) return neon();
  return nullptr;
}

}  // namespace

const Table& scalar() { return kScalar; }

const Table& active() {
  if (!g_active) {
    const char* env = std::getenv("HB_KERNELS");
    if (env && *env && std::strcmp(env, "auto")) g_active = pick(env);
    if (!g_active) g_active = avx2();
    if (!g_active) g_active = neon();
    if (!g_active) g_active = &kScalar;
  }
  return *g_active;
}

bool select(const char* name) {
  if (!std::strcmp(name, "auto")) {
    g_active = nullptr;
    active();
    return true;
  }
  const Table* t = pick(name);
  if (!t) return false;
  g_active = t;
  return true;
}

}  // namespace kernels
}  // namespace hb
