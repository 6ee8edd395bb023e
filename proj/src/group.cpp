#include "gt/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <unordered_set>

#include "gt/kernels.hpp"

namespace gt {

namespace {

std::string describe_elem(const Group& g, u32 i) {
  return g.label(i) + " (index " + std::to_string(i) + ")";
}

void check_labels(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string& l = labels[i];
    if (l.empty()) throw Error("element label " + std::to_string(i) + " is empty");
    for (char c : l)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw Error("element label '" + l + "' contains whitespace");
    if (!seen.insert(l).second)
      throw Error("element label '" + l + "' appears more than once");
  }
}

// Duplicate-value scan used for both Latin-square directions.
// Returns the first repeated value, or n if the line is a permutation.
u32 first_duplicate(const u32* line, std::size_t n, std::vector<u32>& mark, u32 stamp) {
  for (std::size_t k = 0; k < n; ++k) {
    if (mark[line[k]] == stamp) return line[k];
    mark[line[k]] = stamp;
  }
  return static_cast<u32>(n);
}

}  // namespace

GroupPtr Group::make_checked(std::vector<std::string> labels,
                             std::vector<u32> table, bool cap) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error("a group needs at least one element");
  if (cap && n > kOrderCap)
    throw Error("order " + std::to_string(n) + " exceeds the cap of " +
                std::to_string(kOrderCap) + "; pass force to override");
  check_labels(labels);
  if (table.size() != n * n)
    throw Error("table has " + std::to_string(table.size()) + " entries, expected " +
                std::to_string(n * n));
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k] >= n)
      throw Error("table entry " + std::to_string(table[k]) + " at position " +
                  std::to_string(k) + " is out of range");

  // identity row
  for (std::size_t j = 0; j < n; ++j)
    if (table[j] != j)
      throw Error("row 0 is not the identity row: entry " + std::to_string(j) +
                  " is " + std::to_string(table[j]));

  // Latin rows and columns
  std::vector<u32> mark(n, static_cast<u32>(-1));
  std::vector<u32> iota(n);
  std::iota(iota.begin(), iota.end(), 0u);
  std::vector<u32> colbuf(n);
  for (std::size_t r = 0; r < n; ++r) {
    u32 dup = first_duplicate(table.data() + r * n, n, mark, static_cast<u32>(r));
    if (dup < n)
      throw Error("not a Latin square: row " + std::to_string(r) +
                  " repeats value " + std::to_string(dup));
  }
  std::fill(mark.begin(), mark.end(), static_cast<u32>(-1));
  for (std::size_t c = 0; c < n; ++c) {
    kernels::gather_scale_u32(table.data(), iota.data(), n, c, colbuf.data(), n);
    u32 dup = first_duplicate(colbuf.data(), n, mark, static_cast<u32>(c));
    if (dup < n)
      throw Error("not a Latin square: column " + std::to_string(c) +
                  " repeats value " + std::to_string(dup));
  }

  // associativity: (i*j)*k == i*(j*k). Full scan for small orders, fixed-seed
  // sampling above kFullCheckLimit (every k is still checked per sampled pair).
  auto check_pair = [&](u32 i, u32 j) {
    const u32* row_i = table.data() + static_cast<std::size_t>(i) * n;
    const u32* row_j = table.data() + static_cast<std::size_t>(j) * n;
    const u32* row_ij = table.data() + static_cast<std::size_t>(row_i[j]) * n;
    if (!kernels::compose_equals_u32(row_i, row_j, row_ij, n)) {
      for (std::size_t k = 0; k < n; ++k)
        if (row_ij[k] != row_i[row_j[k]])
          throw Error("associativity fails at (" + std::to_string(i) + ", " +
                      std::to_string(j) + ", " + std::to_string(k) + ")");
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

  // two-sided inverses; also pins down column 0 as the identity column, which
  // matters when associativity was only sampled
  std::vector<u32> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i * n] != i)
      throw Error("column 0 is not the identity column at row " + std::to_string(i));
    kernels::gather_scale_u32(table.data(), iota.data(), n, i, colbuf.data(), n);
    std::size_t j = kernels::index_of_u32(colbuf.data(), n, 0u);
    if (j == n || table[j * n + i] != 0 || table[i * n + j] != 0)
      throw Error("element " + std::to_string(i) + " has no two-sided inverse");
    inv[i] = static_cast<u32>(j);
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->order_ = n;
  g->labels_ = std::move(labels);
  g->table_ = std::move(table);
  g->inverse_ = std::move(inv);
  return g;
}

GroupPtr Group::make(std::vector<std::string> labels, std::vector<u32> table, bool force) {
  return make_checked(std::move(labels), std::move(table), !force);
}

GroupPtr Group::make(std::vector<std::string> labels,
                     const std::vector<std::vector<u32>>& rows, bool force) {
  std::vector<u32> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw Error("table is not square: row of length " + std::to_string(r.size()) +
                  " in a table of " + std::to_string(rows.size()) + " rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return make(std::move(labels), std::move(flat), force);
}

GroupPtr make_group_trusted(std::vector<std::string> labels, std::vector<u32> table) {
  return Group::make_checked(std::move(labels), std::move(table), false);
}

bool Group::is_abelian() const {
  for (u32 i = 0; i < order_; ++i)
    for (u32 j = i + 1; j < order_; ++j)
      if (op(i, j) != op(j, i)) return false;
  return true;
}

u32 Group::element_order(u32 x) const {
  u32 t = x;
  u32 k = 1;
  while (t != 0) {
    t = op(t, x);
    ++k;
    if (k > order_) throw TheoremViolation("element order exceeds group order");
  }
  return k;
}

GroupPtr cyclic_group(std::size_t n, bool force) {
  if (n == 0) throw Error("cyclic group order must be positive");
  std::vector<std::string> labels(n);
  std::vector<u32> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (std::size_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<u32>((i + j) % n);
  }
  return Group::make(std::move(labels), std::move(table), force);
}

GroupPtr dihedral_group(std::size_t n, bool force) {
  if (n < 3) throw Error("dihedral group needs n >= 3");
  const std::size_t m = 2 * n;
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "r" + std::to_string(i);
    labels[n + i] = "s" + std::to_string(i);
  }
  // index i < n is the rotation r^i, index n+i is the reflection s*r^i,
  // with s*r^i*s = r^-i
  std::vector<u32> table(m * m);
  auto at = [&](std::size_t i, std::size_t j) -> u32& { return table[i * m + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      at(i, j) = static_cast<u32>((i + j) % n);
      at(i, n + j) = static_cast<u32>(n + (j + n - i) % n);
      at(n + i, j) = static_cast<u32>(n + (i + j) % n);
      at(n + i, n + j) = static_cast<u32>((j + n - i) % n);
    }
  return Group::make(std::move(labels), std::move(table), force);
}

GroupPtr direct_product(const Group& g, const Group& h, bool force) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  if (!force && n > kOrderCap)
    throw Error("product order " + std::to_string(n) + " exceeds the cap of " +
                std::to_string(kOrderCap) + "; pass force to override");
  std::vector<std::string> labels(n);
  std::vector<u32> table(n * n);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      labels[a * nh + b] = "(" + g.label(static_cast<u32>(a)) + "," +
                           h.label(static_cast<u32>(b)) + ")";
  for (std::size_t i = 0; i < n; ++i) {
    const u32 a = static_cast<u32>(i / nh), b = static_cast<u32>(i % nh);
    for (std::size_t j = 0; j < n; ++j) {
      const u32 c = static_cast<u32>(j / nh), d = static_cast<u32>(j % nh);
      table[i * n + j] = g.op(a, c) * static_cast<u32>(nh) + h.op(b, d);
    }
  }
  return Group::make(std::move(labels), std::move(table), force);
}

bool Subgroup::contains(u32 parent_index) const {
  return std::binary_search(indices_.begin(), indices_.end(), parent_index);
}

Subgroup subgroup_from_elements(std::vector<u32> indices, GroupPtr parent) {
  const std::size_t n = parent->order();
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty() || indices[0] != 0)
    throw Error("subgroup must contain the identity (index 0)");
  for (u32 i : indices)
    if (i >= n) throw Error("subgroup index " + std::to_string(i) + " is out of range");

  const std::size_t m = indices.size();
  std::vector<u32> pos(n, static_cast<u32>(-1));
  for (std::size_t k = 0; k < m; ++k) pos[indices[k]] = static_cast<u32>(k);

  std::vector<std::string> labels(m);
  std::vector<u32> table(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = parent->label(indices[a]);
    for (std::size_t b = 0; b < m; ++b) {
      u32 t = parent->op(indices[a], indices[b]);
      if (pos[t] == static_cast<u32>(-1))
        throw Error("set is not closed: " + describe_elem(*parent, indices[a]) + " * " +
                    describe_elem(*parent, indices[b]) + " = " +
                    describe_elem(*parent, t) + " is outside it");
      table[a * m + b] = pos[t];
    }
  }
  GroupPtr induced = make_group_trusted(std::move(labels), std::move(table));
  return Subgroup(std::move(parent), std::move(indices), std::move(induced));
}

Subgroup trivial_subgroup(GroupPtr g) { return subgroup_from_elements({0}, std::move(g)); }

Subgroup whole_subgroup(GroupPtr g) {
  std::vector<u32> all(g->order());
  std::iota(all.begin(), all.end(), 0u);
  return subgroup_from_elements(std::move(all), std::move(g));
}

std::optional<u32> element_of_order(std::size_t n, const Group& g) {
  if (n == 0) throw Error("element order must be positive");
  for (u32 x = 0; x < g.order(); ++x)
    if (g.element_order(x) == n) return x;
  return std::nullopt;
}

Subgroup cyclic_subgroup(u32 x, GroupPtr g) {
  if (x >= g->order()) throw Error("element index out of range");
  std::vector<u32> elems{0};
  u32 t = x;
  while (t != 0) {
    elems.push_back(t);
    t = g->op(t, x);
  }
  return subgroup_from_elements(std::move(elems), std::move(g));
}

CosetDecomposition coset_decomposition(const Subgroup& h) {
  const Group& g = h.parent();
  const std::size_t n = g.order();
  CosetDecomposition dec;
  dec.coset_of.assign(n, static_cast<u32>(-1));
  for (u32 i = 0; i < n; ++i) {
    if (dec.coset_of[i] != static_cast<u32>(-1)) continue;
    Coset c;
    c.members.reserve(h.order());
    for (u32 x : h.indices()) {
      u32 m = g.op(i, x);
      if (dec.coset_of[m] != static_cast<u32>(-1))
        throw TheoremViolation("left cosets failed to partition the group");
      dec.coset_of[m] = static_cast<u32>(dec.cosets.size());
      c.members.push_back(m);
    }
    std::sort(c.members.begin(), c.members.end());
    dec.cosets.push_back(std::move(c));
  }
  if (dec.cosets.size() * h.order() != n)
    throw TheoremViolation("coset sizes violate Lagrange");
  return dec;
}

std::vector<Coset> left_cosets(const Subgroup& h) {
  return coset_decomposition(h).cosets;
}

bool is_normal(const Subgroup& h) {
  const Group& g = h.parent();
  for (u32 a = 0; a < g.order(); ++a)
    for (u32 x : h.indices())
      if (!h.contains(g.conj(x, a))) return false;
  return true;
}

GroupPtr quotient_group(const Subgroup& h) {
  if (!is_normal(h)) throw Error("quotient requires a normal subgroup");
  const Group& g = h.parent();
  CosetDecomposition dec = coset_decomposition(h);
  const std::size_t m = dec.cosets.size();
  std::vector<std::string> labels(m);
  std::vector<u32> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = g.label(dec.cosets[i].representative());
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] =
          dec.coset_of[g.op(dec.cosets[i].representative(), dec.cosets[j].representative())];
  }
  return make_group_trusted(std::move(labels), std::move(table));
}

Subgroup lift_subgroup(const Subgroup& q, const Subgroup& h) {
  CosetDecomposition dec = coset_decomposition(h);
  const Group& qg = q.parent();
  if (qg.order() != dec.cosets.size())
    throw Error("lift: subgroup does not live in the quotient by h");
  for (std::size_t c = 0; c < dec.cosets.size(); ++c)
    if (qg.label(static_cast<u32>(c)) != h.parent().label(dec.cosets[c].representative()))
      throw Error("lift: subgroup does not live in the quotient by h");
  std::vector<u32> elems;
  elems.reserve(q.order() * h.order());
  for (u32 c : q.indices())
    elems.insert(elems.end(), dec.cosets[c].members.begin(), dec.cosets[c].members.end());
  return subgroup_from_elements(std::move(elems), h.parent_ptr());
}

Subgroup center(GroupPtr g) {
  const std::size_t n = g->order();
  std::vector<u32> iota(n), col(n), members;
  std::iota(iota.begin(), iota.end(), 0u);
  for (u32 z = 0; z < n; ++z) {
    kernels::gather_scale_u32(g->table().data(), iota.data(), n, z, col.data(), n);
    auto row = g->row(z);
    if (std::equal(row.begin(), row.end(), col.begin())) members.push_back(z);
  }
  return subgroup_from_elements(std::move(members), std::move(g));
}

std::vector<u32> conjugacy_class_of(u32 s, const Group& g) {
  const std::size_t n = g.order();
  if (s >= n) throw Error("element index out of range");
  std::vector<u32> buf(n);
  kernels::conjugate_all_u32(g.table().data(), g.inverses().data(), n, s, buf.data());
  std::sort(buf.begin(), buf.end());
  buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
  return buf;
}

std::vector<std::vector<u32>> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<u32>> classes;
  for (u32 s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<u32> cls = conjugacy_class_of(s, g);
    for (u32 x : cls) seen[x] = 1;
    if (cls.size() > 1) classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup group_intersection(const Subgroup& h1, const Subgroup& h2) {
  if (h1.parent_ptr() != h2.parent_ptr())
    throw Error("intersection requires subgroups of the same parent");
  std::vector<u32> common;
  std::set_intersection(h1.indices().begin(), h1.indices().end(),
                        h2.indices().begin(), h2.indices().end(),
                        std::back_inserter(common));
  return subgroup_from_elements(std::move(common), h1.parent_ptr());
}

std::vector<u32> product_set(const Subgroup& h1, const Subgroup& h2) {
  if (h1.parent_ptr() != h2.parent_ptr())
    throw Error("product set requires subgroups of the same parent");
  const Group& g = h1.parent();
  std::vector<u32> out;
  out.reserve(h1.order() * h2.order());
  for (u32 a : h1.indices())
    for (u32 b : h2.indices()) out.push_back(g.op(a, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup rebase_subgroup(const Subgroup& h, const Subgroup& k) {
  if (h.parent_ptr() != k.parent_ptr())
    throw Error("rebase requires subgroups of the same parent");
  std::vector<u32> pos(k.parent().order(), static_cast<u32>(-1));
  for (std::size_t i = 0; i < k.indices().size(); ++i) pos[k.indices()[i]] = static_cast<u32>(i);
  std::vector<u32> mapped;
  mapped.reserve(h.order());
  for (u32 x : h.indices()) {
    if (pos[x] == static_cast<u32>(-1))
      throw Error("rebase: subgroup is not contained in the target subgroup");
    mapped.push_back(pos[x]);
  }
  return subgroup_from_elements(std::move(mapped), k.group_ptr());
}

Subgroup embed_subgroup(const Subgroup& inner, const Subgroup& k) {
  if (inner.parent_ptr() != k.group_ptr())
    throw Error("embed: subgroup does not live in the given subgroup's group");
  std::vector<u32> mapped;
  mapped.reserve(inner.order());
  for (u32 x : inner.indices()) mapped.push_back(k.indices()[x]);
  return subgroup_from_elements(std::move(mapped), k.parent_ptr());
}

GroupMap::GroupMap(GroupPtr source, GroupPtr target, std::vector<u32> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_->order())
    throw Error("map image size does not match the source order");
  for (u32 v : image_)
    if (v >= target_->order()) throw Error("map image value out of range");
}

bool is_homomorphism(const GroupMap& m) {
  const Group& s = m.source();
  const Group& t = m.target();
  const std::size_t n = s.order();
  std::vector<u32> lhs(n), rhs(n);
  for (u32 i = 0; i < n; ++i) {
    // f(i*j) for all j
    kernels::compose_u32(m.image().data(), s.row(i).data(), lhs.data(), n);
    // f(i)*f(j) for all j
    kernels::compose_u32(t.row(m.apply(i)).data(), m.image().data(), rhs.data(), n);
    if (lhs != rhs) return false;
  }
  return true;
}

Subgroup map_kernel(const GroupMap& m) {
  if (!is_homomorphism(m)) throw Error("kernel requires a homomorphism");
  std::vector<u32> elems;
  for (u32 i = 0; i < m.source().order(); ++i)
    if (m.apply(i) == 0) elems.push_back(i);
  return subgroup_from_elements(std::move(elems), m.source_ptr());
}

bool is_endomorphism(const GroupMap& m) {
  if (!is_homomorphism(m)) return false;
  std::vector<u32> img = m.image();
  std::sort(img.begin(), img.end());
  return std::adjacent_find(img.begin(), img.end()) == img.end();
}

GroupMap quotient_map(const GroupMap& m) {
  Subgroup k = map_kernel(m);  // also rejects non-homomorphisms
  CosetDecomposition dec = coset_decomposition(k);
  GroupPtr q = quotient_group(k);
  std::vector<u32> image(q->order());
  for (std::size_t c = 0; c < dec.cosets.size(); ++c)
    image[c] = m.apply(dec.cosets[c].representative());
  GroupMap out(q, m.target_ptr(), std::move(image));
  if (!is_endomorphism(out))
    throw TheoremViolation("quotient by the kernel is not an embedding");
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t least_prime_divisor(std::size_t n) {
  if (n < 2) throw Error("no prime divisor of " + std::to_string(n));
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

}  // namespace gt
