#include "gt/kernels.hpp"

namespace gt::kernels {

namespace scalar {

void compose_u32(const u32* x, const u32* y, u32* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = x[y[k]];
}

bool compose_equals_u32(const u32* x, const u32* y, const u32* expect, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (expect[k] != x[y[k]]) return false;
  return true;
}

void gather_scale_u32(const u32* base, const u32* idx, std::size_t scale,
                      std::size_t offset, u32* out, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) out[k] = base[idx[k] * scale + offset];
}

std::uint64_t inversion_count_u32(const u32* p, std::size_t n) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

std::size_t index_of_u32(const u32* a, std::size_t n, u32 v) {
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] == v) return k;
  return n;
}

void conjugate_all_u32(const u32* table, const u32* inv, std::size_t n, u32 s, u32* out) {
  for (std::size_t a = 0; a < n; ++a) {
    u32 as = table[a * n + s];
    out[a] = table[static_cast<std::size_t>(as) * n + inv[a]];
  }
}

}  // namespace scalar

#if GT_HAVE_AVX2
namespace avx2 {
void compose_u32(const u32* x, const u32* y, u32* out, std::size_t n);
bool compose_equals_u32(const u32* x, const u32* y, const u32* expect, std::size_t n);
void gather_scale_u32(const u32* base, const u32* idx, std::size_t scale,
                      std::size_t offset, u32* out, std::size_t n);
std::uint64_t inversion_count_u32(const u32* p, std::size_t n);
std::size_t index_of_u32(const u32* a, std::size_t n, u32 v);
void conjugate_all_u32(const u32* table, const u32* inv, std::size_t n, u32 s, u32* out);
bool cpu_supported();
}  // namespace avx2
#endif

namespace {

struct Vtable {
  void (*compose)(const u32*, const u32*, u32*, std::size_t);
  bool (*compose_equals)(const u32*, const u32*, const u32*, std::size_t);
  void (*gather_scale)(const u32*, const u32*, std::size_t, std::size_t, u32*, std::size_t);
  std::uint64_t (*inversion_count)(const u32*, std::size_t);
  std::size_t (*index_of)(const u32*, std::size_t, u32);
  void (*conjugate_all)(const u32*, const u32*, std::size_t, u32, u32*);
};

constexpr Vtable kScalar = {
    scalar::compose_u32,    scalar::compose_equals_u32, scalar::gather_scale_u32,
    scalar::inversion_count_u32, scalar::index_of_u32,  scalar::conjugate_all_u32,
};

#if GT_HAVE_AVX2
constexpr Vtable kAvx2 = {
    avx2::compose_u32,    avx2::compose_equals_u32, avx2::gather_scale_u32,
    avx2::inversion_count_u32, avx2::index_of_u32,  avx2::conjugate_all_u32,
};
#endif

bool avx2_available() {
#if GT_HAVE_AVX2
  return avx2::cpu_supported();
#else
  return false;
#endif
}

struct Dispatch {
  const Vtable* vt;
  Backend backend;
  Dispatch() {
#if GT_HAVE_AVX2
    if (avx2_available()) {
      vt = &kAvx2;
      backend = Backend::avx2;
      return;
    }
#endif
    vt = &kScalar;
    backend = Backend::scalar;
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

Backend active_backend() { return dispatch().backend; }

bool set_backend(Backend b) {
  if (b == Backend::scalar) {
    dispatch().vt = &kScalar;
    dispatch().backend = Backend::scalar;
    return true;
  }
#if GT_HAVE_AVX2
  if (b == Backend::avx2 && avx2_available()) {
    dispatch().vt = &kAvx2;
    dispatch().backend = Backend::avx2;
    return true;
  }
#endif
  return false;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

void compose_u32(const u32* x, const u32* y, u32* out, std::size_t n) {
  dispatch().vt->compose(x, y, out, n);
}

bool compose_equals_u32(const u32* x, const u32* y, const u32* expect, std::size_t n) {
  return dispatch().vt->compose_equals(x, y, expect, n);
}

void gather_scale_u32(const u32* base, const u32* idx, std::size_t scale,
                      std::size_t offset, u32* out, std::size_t n) {
  dispatch().vt->gather_scale(base, idx, scale, offset, out, n);
}

std::uint64_t inversion_count_u32(const u32* p, std::size_t n) {
  return dispatch().vt->inversion_count(p, n);
}

std::size_t index_of_u32(const u32* a, std::size_t n, u32 v) {
  return dispatch().vt->index_of(a, n, v);
}

void conjugate_all_u32(const u32* table, const u32* inv, std::size_t n, u32 s, u32* out) {
  dispatch().vt->conjugate_all(table, inv, n, s, out);
}

}  // namespace gt::kernels
