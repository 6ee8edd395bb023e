#include <immintrin.h>

#include "gt/kernels.hpp"

// AVX2 variants. Gather indices go through i32 lanes, so anything whose
// computed index could reach 2^31 falls back to the scalar reference; with
// square tables (stride == row count) that means dimension <= 46340, far
// above the engine's order cap.

namespace gt::kernels::avx2 {

namespace {
constexpr std::size_t kMaxGatherDim = 46340;
}

bool cpu_supported() { return __builtin_cpu_supports("avx2") != 0; }

void compose_u32(const u32* x, const u32* y, u32* out, std::size_t n) {
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + k));
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(x), idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), v);
  }
  for (; k < n; ++k) out[k] = x[y[k]];
}

bool compose_equals_u32(const u32* x, const u32* y, const u32* expect, std::size_t n) {
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + k));
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(x), idx, 4);
    __m256i e = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(expect + k));
    __m256i eq = _mm256_cmpeq_epi32(v, e);
    if (_mm256_movemask_ps(_mm256_castsi256_ps(eq)) != 0xFF) return false;
  }
  for (; k < n; ++k)
    if (expect[k] != x[y[k]]) return false;
  return true;
}

void gather_scale_u32(const u32* base, const u32* idx, std::size_t scale,
                      std::size_t offset, u32* out, std::size_t n) {
  if (scale == 0 || scale > kMaxGatherDim || offset > kMaxGatherDim) {
    scalar::gather_scale_u32(base, idx, scale, offset, out, n);
    return;
  }
  __m256i vscale = _mm256_set1_epi32(static_cast<int>(scale));
  __m256i voff = _mm256_set1_epi32(static_cast<int>(offset));
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + k));
    __m256i addr = _mm256_add_epi32(_mm256_mullo_epi32(vi, vscale), voff);
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(base), addr, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), v);
  }
  for (; k < n; ++k) out[k] = base[idx[k] * scale + offset];
}

std::uint64_t inversion_count_u32(const u32* p, std::size_t n) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    __m256i pi = _mm256_set1_epi32(static_cast<int>(p[i]));
    std::size_t j = i + 1;
    for (; j + 8 <= n; j += 8) {
      __m256i pj = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j));
      __m256i gt = _mm256_cmpgt_epi32(pi, pj);
      count += static_cast<unsigned>(
          __builtin_popcount(_mm256_movemask_ps(_mm256_castsi256_ps(gt))));
    }
    for (; j < n; ++j)
      if (p[i] > p[j]) ++count;
  }
  return count;
}

std::size_t index_of_u32(const u32* a, std::size_t n, u32 v) {
  __m256i vv = _mm256_set1_epi32(static_cast<int>(v));
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(av, vv)));
    if (mask != 0) return k + static_cast<unsigned>(__builtin_ctz(mask));
  }
  for (; k < n; ++k)
    if (a[k] == v) return k;
  return n;
}

void conjugate_all_u32(const u32* table, const u32* inv, std::size_t n, u32 s, u32* out) {
  if (n > kMaxGatherDim) {
    scalar::conjugate_all_u32(table, inv, n, s, out);
    return;
  }
  __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
  // a*n + s for a = 0..7, advanced by 8n per iteration
  __m256i addr1 = _mm256_add_epi32(
      _mm256_mullo_epi32(_mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7), vn),
      _mm256_set1_epi32(static_cast<int>(s)));
  __m256i step = _mm256_set1_epi32(static_cast<int>(8 * n));
  std::size_t a = 0;
  for (; a + 8 <= n; a += 8) {
    __m256i as = _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), addr1, 4);
    __m256i vinv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inv + a));
    __m256i addr2 = _mm256_add_epi32(_mm256_mullo_epi32(as, vn), vinv);
    __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), addr2, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + a), v);
    addr1 = _mm256_add_epi32(addr1, step);
  }
  for (; a < n; ++a) {
    u32 as = table[a * n + s];
    out[a] = table[static_cast<std::size_t>(as) * n + inv[a]];
  }
}

}  // namespace gt::kernels::avx2
