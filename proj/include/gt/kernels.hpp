#pragma once

#include <cstddef>
#include <cstdint>

// Flat integer kernels shared by the group engine. Everything hot in the
// engine (composing table rows, conjugating whole groups, counting inversions
// for parity, validating associativity) reduces to gathers over row-major
// u32 tables, so these have a scalar reference implementation plus an AVX2
// variant picked at runtime. Tests force each backend and compare outputs.

namespace gt::kernels {

using u32 = std::uint32_t;

enum class Backend { scalar, avx2 };

// Backend currently used by the dispatching entry points.
Backend active_backend();

// Force a backend (tests, benchmarks). Returns false and leaves the current
// choice alone if the requested backend is not available on this machine.
// Not thread-safe against concurrent kernel calls.
bool set_backend(Backend b);

const char* backend_name(Backend b);

// out[k] = x[y[k]]. Composition of one-line permutations when x and y are
// rows of length n, but x only needs to be readable at the values y takes.
void compose_u32(const u32* x, const u32* y, u32* out, std::size_t n);

// true iff expect[k] == x[y[k]] for all k. Fused form of compose_u32 used by
// the associativity and action-compatibility validators.
bool compose_equals_u32(const u32* x, const u32* y, const u32* expect, std::size_t n);

// out[k] = base[idx[k] * scale + offset]. Strided gather, e.g. reading one
// column of a row-major table (scale = row length, offset = column).
void gather_scale_u32(const u32* base, const u32* idx, std::size_t scale,
                      std::size_t offset, u32* out, std::size_t n);

// Number of pairs i < j with p[i] > p[j].
std::uint64_t inversion_count_u32(const u32* p, std::size_t n);

// Least k with a[k] == v, or n if absent.
std::size_t index_of_u32(const u32* a, std::size_t n, u32 v);

// out[a] = table[table[a*n + s] * n + inv[a]] for a in [0, n): the conjugate
// of element s by every group element at once. inv holds each element's
// inverse, table is the n x n Cayley table.
void conjugate_all_u32(const u32* table, const u32* inv, std::size_t n, u32 s, u32* out);

// Reference implementations, callable directly by equivalence tests.
namespace scalar {
void compose_u32(const u32* x, const u32* y, u32* out, std::size_t n);
bool compose_equals_u32(const u32* x, const u32* y, const u32* expect, std::size_t n);
void gather_scale_u32(const u32* base, const u32* idx, std::size_t scale,
                      std::size_t offset, u32* out, std::size_t n);
std::uint64_t inversion_count_u32(const u32* p, std::size_t n);
std::size_t index_of_u32(const u32* a, std::size_t n, u32 v);
void conjugate_all_u32(const u32* table, const u32* inv, std::size_t n, u32 s, u32* out);
}  // namespace scalar

}  // namespace gt::kernels
