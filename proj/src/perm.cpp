#include "gt/perm.hpp"

#include <algorithm>
#include <numeric>

#include "gt/kernels.hpp"

namespace gt {

bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (u32 v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose_perm(const Perm& x, const Perm& y) {
  if (x.size() != y.size())
    throw Error("cannot compose permutations of lengths " + std::to_string(x.size()) +
                " and " + std::to_string(y.size()));
  Perm out(x.size());
  kernels::compose_u32(x.data(), y.data(), out.data(), x.size());
  return out;
}

Perm compose_perm_list(const std::vector<Perm>& list, std::size_t n) {
  Perm acc = identity_perm(n);
  for (const Perm& p : list) acc = compose_perm(acc, p);
  return acc;
}

Perm inverse_perm(const Perm& x) {
  if (!is_perm(x)) throw Error("inverse of a non-permutation");
  Perm out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[x[k]] = static_cast<u32>(k);
  return out;
}

Perm transposition(std::size_t i, std::size_t j, std::size_t n) {
  if (!(i < j && j < n))
    throw Error("transposition needs i < j < n, got i=" + std::to_string(i) +
                " j=" + std::to_string(j) + " n=" + std::to_string(n));
  Perm p = identity_perm(n);
  std::swap(p[i], p[j]);
  return p;
}

std::size_t least_moved_point(const Perm& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != k) return k;
  return p.size();
}

bool is_transposition(const Perm& p) {
  if (!is_perm(p)) return false;
  std::size_t m = least_moved_point(p);
  if (m == p.size()) return false;
  return p == transposition(m, p[m], p.size());
}

std::vector<Perm> transposition_factors(const Perm& p) {
  if (!is_perm(p)) throw Error("cannot factor a non-permutation");
  const std::size_t n = p.size();
  std::vector<Perm> out;
  Perm rest = p;
  std::size_t prev = 0;
  while (true) {
    std::size_t m = least_moved_point(rest);
    if (m == n) break;
    if (!out.empty() && m <= prev)
      throw TheoremViolation("least moved point failed to increase while factoring");
    prev = m;
    Perm t = transposition(m, rest[m], n);
    out.push_back(t);
    // t fixes everything below m and cancels the move at m, so the least
    // moved point strictly increases
    rest = compose_perm(t, rest);
  }
  return out;
}

std::uint64_t inversion_count(const Perm& p) {
  return kernels::inversion_count_u32(p.data(), p.size());
}

int parity(const Perm& p) {
  if (!is_perm(p)) throw Error("parity of a non-permutation");
  return static_cast<int>(inversion_count(p) & 1u);
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t perm_lex_rank(const Perm& p) {
  const std::size_t n = p.size();
  std::size_t rank = 0;
  std::size_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= k;
  for (std::size_t k = 0; k < n; ++k) {
    fact /= (n - k);
    std::size_t smaller = 0;
    for (std::size_t j = k + 1; j < n; ++j)
      if (p[j] < p[k]) ++smaller;
    rank += smaller * fact;
  }
  return rank;
}

std::string perm_token(const Perm& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(p[k]);
  }
  s += ']';
  return s;
}

std::string perm_display(const Perm& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(p[k]);
  }
  s += ']';
  return s;
}

GroupPtr sym_group(std::size_t n, bool force) {
  if (n == 0) throw Error("symmetric group needs n >= 1");
  if (n > 7) throw Error("sym(" + std::to_string(n) + ") is refused outright; 8! rows do not fit the cap");
  if (n == 7 && !force)
    throw Error("sym(7) has order 5040; pass force to build it");
  std::vector<Perm> perms = all_perms(n);
  const std::size_t m = perms.size();
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = perm_token(perms[i]);
  std::vector<u32> table(m * m);
  Perm buf(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      kernels::compose_u32(perms[i].data(), perms[j].data(), buf.data(), n);
      table[i * m + j] = static_cast<u32>(perm_lex_rank(buf));
    }
  return Group::make(std::move(labels), std::move(table), /*force=*/true);
}

Subgroup alt_group(std::size_t n, bool force) {
  GroupPtr sym = sym_group(n, force);
  std::vector<Perm> perms = all_perms(n);
  std::vector<u32> evens;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (parity(perms[i]) == 0) evens.push_back(static_cast<u32>(i));
  return subgroup_from_elements(std::move(evens), std::move(sym));
}

}  // namespace gt
