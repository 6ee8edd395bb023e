#include "gt/action.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <unordered_set>

#include "gt/kernels.hpp"

namespace gt {

namespace {

void check_domain_labels(const std::vector<std::string>& domain) {
  if (domain.empty()) throw Error("action domain must be non-empty");
  std::unordered_set<std::string> seen;
  for (const std::string& d : domain) {
    if (d.empty()) throw Error("action domain value is empty");
    for (char c : d)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw Error("action domain value '" + d + "' contains whitespace");
    if (!seen.insert(d).second)
      throw Error("action domain value '" + d + "' appears more than once");
  }
}

std::string brace_label(const std::vector<u32>& indices) {
  std::string s = "{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(indices[k]);
  }
  s += '}';
  return s;
}

// Raw conjugate index set, sorted; the Subgroup wrapper is built on demand.
std::vector<u32> conjugate_indices(const Subgroup& h, u32 a) {
  const Group& g = h.parent();
  const std::size_t n = g.order();
  std::vector<u32> tmp(h.order()), out(h.order());
  // a*x for x in h, then (a*x)*a^-1
  kernels::compose_u32(g.row(a).data(), h.indices().data(), tmp.data(), h.order());
  kernels::gather_scale_u32(g.table().data(), tmp.data(), n, g.inverse(a),
                            out.data(), h.order());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GroupAction GroupAction::make(GroupPtr g, std::vector<std::string> domain,
                              std::vector<u32> table) {
  check_domain_labels(domain);
  const std::size_t n = g->order();
  const std::size_t m = domain.size();
  if (table.size() != n * m)
    throw Error("action table has " + std::to_string(table.size()) +
                " entries, expected " + std::to_string(n * m));
  for (u32 v : table)
    if (v >= m) throw Error("action table entry " + std::to_string(v) + " is out of range");

  for (std::size_t s = 0; s < m; ++s)
    if (table[s] != s)
      throw Error("identity moves domain point " + std::to_string(s));

  std::vector<u32> mark(m, static_cast<u32>(-1));
  for (std::size_t x = 0; x < n; ++x) {
    const u32* row = table.data() + x * m;
    for (std::size_t s = 0; s < m; ++s) {
      if (mark[row[s]] == static_cast<u32>(x))
        throw Error("element " + std::to_string(x) +
                    " does not act as a permutation: value " +
                    std::to_string(row[s]) + " repeats");
      mark[row[s]] = static_cast<u32>(x);
    }
  }

  // compatibility with the group operation
  auto check_pair = [&](u32 i, u32 j) {
    const u32* row_i = table.data() + static_cast<std::size_t>(i) * m;
    const u32* row_j = table.data() + static_cast<std::size_t>(j) * m;
    const u32* row_ij = table.data() + static_cast<std::size_t>(g->op(i, j)) * m;
    if (!kernels::compose_equals_u32(row_i, row_j, row_ij, m)) {
      for (std::size_t s = 0; s < m; ++s)
        if (row_ij[s] != row_i[row_j[s]])
          throw Error("action is incompatible with the group at (" + std::to_string(i) +
                      ", " + std::to_string(j) + ", " + std::to_string(s) + ")");
    }
  };
  if (n <= kFullCheckLimit) {
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) check_pair(i, j);
  } else {
    std::mt19937 rng(0x5EEDu);
    std::uniform_int_distribution<u32> pick(0, static_cast<u32>(n - 1));
    for (int t = 0; t < 4096; ++t) {
      u32 i = pick(rng);
      u32 j = pick(rng);
      check_pair(i, j);
    }
  }

  return GroupAction(std::move(g), std::move(domain), std::move(table));
}

GroupAction GroupAction::make(GroupPtr g, std::vector<std::string> domain,
                              const std::function<u32(u32, u32)>& rule) {
  const std::size_t n = g->order();
  const std::size_t m = domain.size();
  std::vector<u32> table(n * m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t s = 0; s < m; ++s)
      table[x * m + s] = rule(static_cast<u32>(x), static_cast<u32>(s));
  return make(std::move(g), std::move(domain), std::move(table));
}

GroupAction conjugacy_action(GroupPtr g) {
  const std::size_t n = g->order();
  std::vector<u32> table(n * n), iota(n);
  std::iota(iota.begin(), iota.end(), 0u);
  for (std::size_t x = 0; x < n; ++x) {
    // row x: s -> x s x^-1 = table[(x*s)][x^-1]
    kernels::gather_scale_u32(g->table().data(), g->row(static_cast<u32>(x)).data(), n,
                              g->inverse(static_cast<u32>(x)),
                              table.data() + x * n, n);
  }
  std::vector<std::string> domain = g->labels();
  return GroupAction::make(std::move(g), std::move(domain), std::move(table));
}

GroupAction self_action(GroupPtr g) {
  std::vector<u32> table = g->table();
  std::vector<std::string> domain = g->labels();
  return GroupAction::make(std::move(g), std::move(domain), std::move(table));
}

GroupAction lcoset_action(const Subgroup& h) {
  const Group& g = h.parent();
  const std::size_t n = g.order();
  CosetDecomposition dec = coset_decomposition(h);
  const std::size_t m = dec.cosets.size();
  std::vector<std::string> domain(m);
  std::vector<u32> reps(m);
  for (std::size_t c = 0; c < m; ++c) {
    domain[c] = brace_label(dec.cosets[c].members);
    reps[c] = dec.cosets[c].representative();
  }
  std::vector<u32> table(n * m), tmp(m);
  for (std::size_t x = 0; x < n; ++x) {
    // x * rep_c, then which coset that landed in
    kernels::compose_u32(g.row(static_cast<u32>(x)).data(), reps.data(), tmp.data(), m);
    kernels::compose_u32(dec.coset_of.data(), tmp.data(), table.data() + x * m, m);
  }
  return GroupAction::make(h.parent_ptr(), std::move(domain), std::move(table));
}

GroupAction subaction(const GroupAction& a, const Subgroup& h) {
  if (h.parent_ptr() != a.group_ptr())
    throw Error("subaction requires a subgroup of the acting group");
  const std::size_t m = a.domain_size();
  std::vector<u32> table(h.order() * m);
  for (std::size_t k = 0; k < h.order(); ++k) {
    auto row = a.row(h.indices()[k]);
    std::copy(row.begin(), row.end(), table.begin() + k * m);
  }
  std::vector<std::string> domain = a.domain();
  return GroupAction::make(h.group_ptr(), std::move(domain), std::move(table));
}

std::vector<u32> orbit(u32 s, const GroupAction& a) {
  const std::size_t n = a.group().order();
  const std::size_t m = a.domain_size();
  if (s >= m) throw Error("domain index out of range");
  std::vector<u32> iota(n), col(n);
  std::iota(iota.begin(), iota.end(), 0u);
  kernels::gather_scale_u32(a.table().data(), iota.data(), m, s, col.data(), n);
  std::sort(col.begin(), col.end());
  col.erase(std::unique(col.begin(), col.end()), col.end());
  return col;
}

std::vector<std::vector<u32>> orbits(const GroupAction& a) {
  const std::size_t m = a.domain_size();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<u32>> out;
  for (u32 s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<u32> orb = orbit(s, a);
    for (u32 v : orb) seen[v] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

Subgroup stabilizer(u32 s, const GroupAction& a) {
  const std::size_t n = a.group().order();
  if (s >= a.domain_size()) throw Error("domain index out of range");
  std::vector<u32> members;
  for (u32 x = 0; x < n; ++x)
    if (a.act(x, s) == s) members.push_back(x);
  return subgroup_from_elements(std::move(members), a.group_ptr());
}

u32 find_actor(u32 r, u32 s, const GroupAction& a) {
  const std::size_t n = a.group().order();
  const std::size_t m = a.domain_size();
  if (r >= m || s >= m) throw Error("domain index out of range");
  std::vector<u32> iota(n), col(n);
  std::iota(iota.begin(), iota.end(), 0u);
  kernels::gather_scale_u32(a.table().data(), iota.data(), m, s, col.data(), n);
  std::size_t x = kernels::index_of_u32(col.data(), n, r);
  if (x == n)
    throw Error("no group element sends " + a.domain()[s] + " to " + a.domain()[r]);
  return static_cast<u32>(x);
}

Subgroup conjugate_subgroup(const Subgroup& h, u32 a) {
  if (a >= h.parent().order()) throw Error("element index out of range");
  return subgroup_from_elements(conjugate_indices(h, a), h.parent_ptr());
}

std::vector<Subgroup> subgroup_conjugates(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<Subgroup> out;
  std::map<std::vector<u32>, u32> seen;
  for (u32 a = 0; a < g.order(); ++a) {
    std::vector<u32> c = conjugate_indices(h, a);
    if (seen.emplace(c, static_cast<u32>(out.size())).second)
      out.push_back(subgroup_from_elements(std::move(c), h.parent_ptr()));
  }
  return out;
}

GroupAction conj_sub_action(const Subgroup& h) {
  const Group& g = h.parent();
  const std::size_t n = g.order();
  std::map<std::vector<u32>, u32> index_of;
  std::vector<std::vector<u32>> conjs;
  for (u32 a = 0; a < n; ++a) {
    std::vector<u32> c = conjugate_indices(h, a);
    if (index_of.emplace(c, static_cast<u32>(conjs.size())).second)
      conjs.push_back(std::move(c));
  }
  const std::size_t m = conjs.size();
  std::vector<std::string> domain(m);
  for (std::size_t c = 0; c < m; ++c) domain[c] = brace_label(conjs[c]);

  std::vector<u32> table(n * m);
  std::vector<u32> tmp, res;
  for (u32 x = 0; x < n; ++x)
    for (std::size_t c = 0; c < m; ++c) {
      const std::vector<u32>& src = conjs[c];
      tmp.resize(src.size());
      res.resize(src.size());
      kernels::compose_u32(g.row(x).data(), src.data(), tmp.data(), src.size());
      kernels::gather_scale_u32(g.table().data(), tmp.data(), n, g.inverse(x),
                                res.data(), src.size());
      std::sort(res.begin(), res.end());
      auto it = index_of.find(res);
      if (it == index_of.end())
        throw TheoremViolation("conjugate escaped the conjugate set");
      table[static_cast<std::size_t>(x) * m + c] = it->second;
    }
  return GroupAction::make(h.parent_ptr(), std::move(domain), std::move(table));
}

u32 conjugating_element(const Subgroup& c, const Subgroup& h) {
  if (c.parent_ptr() != h.parent_ptr())
    throw Error("conjugating element requires subgroups of the same parent");
  for (u32 a = 0; a < h.parent().order(); ++a)
    if (conjugate_indices(h, a) == c.indices()) return a;
  throw Error("the given subgroup is not a conjugate of h");
}

Subgroup normalizer(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<u32> members;
  for (u32 a = 0; a < g.order(); ++a)
    if (conjugate_indices(h, a) == h.indices()) members.push_back(a);
  return subgroup_from_elements(std::move(members), h.parent_ptr());
}

Perm induced_perm(u32 x, const GroupAction& a) {
  if (x >= a.group().order()) throw Error("element index out of range");
  auto row = a.row(x);
  return Perm(row.begin(), row.end());
}

GroupMap sym_homomorphism(const GroupAction& a, bool force) {
  GroupPtr sym = sym_group(a.domain_size(), force);
  const std::size_t n = a.group().order();
  std::vector<u32> image(n);
  for (u32 x = 0; x < n; ++x) {
    Perm p = induced_perm(x, a);
    image[x] = static_cast<u32>(perm_lex_rank(p));
  }
  GroupMap m(a.group_ptr(), std::move(sym), std::move(image));
  if (!is_homomorphism(m))
    throw TheoremViolation("a validated action failed to induce a homomorphism");
  return m;
}

bool left_translation_embeds(const Group& g) {
  const std::size_t n = g.order();
  const std::vector<u32>& t = g.table();
  // identity row
  for (std::size_t s = 0; s < n; ++s)
    if (t[s] != s) return false;
  // homomorphism: row of x*y is row_x o row_y
  for (u32 x = 0; x < n; ++x)
    for (u32 y = 0; y < n; ++y) {
      const u32* row_xy = t.data() + static_cast<std::size_t>(g.op(x, y)) * n;
      if (!kernels::compose_equals_u32(g.row(x).data(), g.row(y).data(), row_xy, n))
        return false;
    }
  // injectivity: row_x[0] = x*e = x, so rows are pairwise distinct once that holds
  for (u32 x = 0; x < n; ++x)
    if (g.op(x, 0) != x) return false;
  return true;
}

bool index_least_prime_normal_check(const Subgroup& h) {
  bool normal = is_normal(h);
  const std::size_t n = h.parent().order();
  if (n > 1 && h.index_in_parent() == least_prime_divisor(n) && !normal)
    throw TheoremViolation("subgroup of least-prime index is not normal");
  return normal;
}

}  // namespace gt
