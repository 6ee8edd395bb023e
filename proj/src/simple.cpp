#include "gt/simple.hpp"

#include <algorithm>

#include "gt/action.hpp"
#include "gt/perm.hpp"
#include "gt/sylow.hpp"

namespace gt {

bool is_proper_normal(const Subgroup& h) {
  return h.order() > 1 && h.order() < h.parent().order() && is_normal(h);
}

std::vector<std::size_t> normal_order_candidates(const Group& g) {
  const std::size_t n = g.order();
  // the argument counts whole conjugacy classes, so {e} must be the only
  // singleton class
  for (u32 z = 1; z < n; ++z) {
    bool central = true;
    for (u32 j = 0; central && j < n; ++j)
      if (g.op(z, j) != g.op(j, z)) central = false;
    if (central) throw Error("order candidates require a trivial center");
  }
  std::vector<std::vector<u32>> classes = conjugacy_classes(g);
  if (classes.size() > 20)
    throw Error("too many conjugacy classes for the subset-sum enumeration");
  std::vector<std::size_t> out;
  const std::size_t masks = std::size_t{1} << classes.size();
  for (std::size_t mask = 1; mask < masks; ++mask) {
    std::size_t sum = 1;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (mask & (std::size_t{1} << c)) sum += classes[c].size();
    if (sum < n && n % sum == 0) out.push_back(sum);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

NormalWitness verified(Subgroup w, const char* method) {
  if (!is_proper_normal(w))
    throw TheoremViolation(std::string("witness from the ") + method +
                           " branch is not a proper normal subgroup");
  return {std::move(w), method};
}

// Union of {e} and the classes selected by mask, if it forms a subgroup.
std::optional<Subgroup> class_union_subgroup(const GroupPtr& g,
                                             const std::vector<std::vector<u32>>& classes,
                                             std::size_t mask) {
  const std::size_t n = g->order();
  std::vector<char> in_set(n, 0);
  std::vector<u32> members{0};
  in_set[0] = 1;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (mask & (std::size_t{1} << c))
      for (u32 x : classes[c]) {
        in_set[x] = 1;
        members.push_back(x);
      }
  for (u32 a : members)
    for (u32 b : members)
      if (!in_set[g->op(a, b)]) return std::nullopt;
  return subgroup_from_elements(std::move(members), g);
}

// Complete search for a proper normal subgroup in a trivial-center group.
std::optional<Subgroup> class_sum_witness(const GroupPtr& g) {
  const std::size_t n = g->order();
  std::vector<std::vector<u32>> classes = conjugacy_classes(*g);
  if (classes.size() > 20)
    throw Error("too many conjugacy classes for the subset-sum enumeration");
  const std::size_t masks = std::size_t{1} << classes.size();
  for (std::size_t mask = 1; mask + 1 < masks; ++mask) {
    std::size_t sum = 1;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (mask & (std::size_t{1} << c)) sum += classes[c].size();
    if (sum >= n || n % sum != 0) continue;
    std::optional<Subgroup> w = class_union_subgroup(g, classes, mask);
    if (w) {
      if (!is_proper_normal(*w))
        throw TheoremViolation("a closed union of classes is not a proper normal subgroup");
      return w;
    }
  }
  return std::nullopt;
}

// First central element of order p, as an index into g.
u32 central_element_of_order(const Group& g, std::size_t p, const Subgroup& z) {
  for (u32 k = 0; k < z.order(); ++k) {
    u32 parent_index = z.indices()[k];
    if (g.element_order(parent_index) == p) return parent_index;
  }
  throw TheoremViolation("no central element of order p where one must exist");
}

}  // namespace

NormalWitness normal_subgroup_prime_power(std::size_t p, unsigned k, GroupPtr g) {
  std::size_t expect = 1;
  for (unsigned i = 0; i < k; ++i) expect *= p;
  if (!is_prime(p) || k < 2 || g->order() != expect)
    throw Error("prime-power branch needs |g| = p^k with k >= 2");
  // the center of a p-group is nontrivial, and a central cyclic subgroup of
  // order p is normal
  Subgroup z = center(g);
  if (z.order() == 1) throw TheoremViolation("p-group has a trivial center");
  u32 x = central_element_of_order(*g, p, z);
  return verified(cyclic_subgroup(x, g), "prime-power");
}

NormalWitness normal_subgroup_pq(std::size_t p, std::size_t q, GroupPtr g) {
  if (!is_prime(p) || !is_prime(q) || p >= q || g->order() != p * q)
    throw Error("pq branch needs |g| = p*q with primes p < q");
  // n_q divides p and is 1 mod q, so the Sylow-q subgroup is unique
  return verified(sylow_subgroup(std::move(g), q), "pq");
}

NormalWitness normal_subgroup_ppq(std::size_t p, std::size_t q, GroupPtr g) {
  if (!is_prime(p) || !is_prime(q) || p == q || g->order() != p * p * q)
    throw Error("ppq branch needs |g| = p^2*q with distinct primes");
  Subgroup hp = sylow_subgroup(g, p);
  if (is_proper_normal(hp)) return {std::move(hp), "ppq"};
  return verified(sylow_subgroup(std::move(g), q), "ppq");
}

NormalWitness normal_subgroup_24(GroupPtr g) {
  if (g->order() != 24) throw Error("case-24 branch needs |g| = 24");
  Subgroup h2 = sylow_subgroup(g, 2);
  std::vector<Subgroup> conjs = subgroup_conjugates(h2);
  if (conjs.size() == 1) return verified(std::move(h2), "case-24");
  // three Sylow-2 subgroups; any two intersect in the order-4 kernel of the
  // action on the Sylow set
  if (conjs.size() != 3)
    throw TheoremViolation("Sylow-2 count in a group of order 24 must be 1 or 3");
  Subgroup d = group_intersection(conjs[0], conjs[1]);
  if (d.order() != 4)
    throw TheoremViolation("two Sylow-2 subgroups of order 8 must meet in order 4");
  return verified(std::move(d), "case-24");
}

namespace {

NormalWitness normal_subgroup_30(GroupPtr g) {
  Subgroup h3 = sylow_subgroup(g, 3);
  if (is_proper_normal(h3)) return {std::move(h3), "case-30"};
  return verified(sylow_subgroup(std::move(g), 5), "case-30");
}

NormalWitness normal_subgroup_36(GroupPtr g) {
  Subgroup h3 = sylow_subgroup(g, 3);
  if (is_proper_normal(h3)) return {std::move(h3), "case-36"};
  // four Sylow-3 subgroups; the conjugation action maps into sym(4) with a
  // kernel strictly between 1 and g
  GroupMap to_sym = sym_homomorphism(conj_sub_action(h3));
  Subgroup k = map_kernel(to_sym);
  if (k.order() <= 1 || k.order() >= 36)
    throw TheoremViolation("kernel of the Sylow-3 action must be proper and nontrivial");
  return verified(std::move(k), "case-36");
}

NormalWitness normal_subgroup_40(GroupPtr g) {
  // n_5 divides 8 and is 1 mod 5
  return verified(sylow_subgroup(std::move(g), 5), "case-40");
}

NormalWitness normal_subgroup_42(GroupPtr g) {
  // n_7 divides 6 and is 1 mod 7
  return verified(sylow_subgroup(std::move(g), 7), "case-42");
}

NormalWitness normal_subgroup_48(GroupPtr g) {
  Subgroup h2 = sylow_subgroup(g, 2);
  std::vector<Subgroup> conjs = subgroup_conjugates(h2);
  if (conjs.size() == 1) return verified(std::move(h2), "case-48");
  if (conjs.size() != 3)
    throw TheoremViolation("Sylow-2 count in a group of order 48 must be 1 or 3");
  Subgroup d = group_intersection(conjs[0], conjs[1]);
  if (d.order() != 8)
    throw TheoremViolation("two Sylow-2 subgroups of order 16 must meet in order 8");
  return verified(std::move(d), "case-48");
}

NormalWitness normal_subgroup_54(GroupPtr g) {
  // the Sylow-3 subgroup has index 2
  return verified(sylow_subgroup(std::move(g), 3), "case-54");
}

NormalWitness normal_subgroup_56(GroupPtr g) {
  Subgroup h7 = sylow_subgroup(g, 7);
  if (is_proper_normal(h7)) return {std::move(h7), "case-56"};
  // eight Sylow-7 subgroups use up 48 elements of order 7, leaving exactly
  // one Sylow-2 subgroup
  return verified(sylow_subgroup(std::move(g), 2), "case-56");
}

}  // namespace

NormalWitness normal_subgroup_witness(GroupPtr g) {
  const std::size_t n = g->order();
  if (n < 4 || n >= 60)
    throw Error("normal_subgroup handles orders 4 through 59");
  if (is_prime(n)) throw Error("prime order has no proper normal subgroup");
  switch (n) {
    case 24: return normal_subgroup_24(std::move(g));
    case 30: return normal_subgroup_30(std::move(g));
    case 36: return normal_subgroup_36(std::move(g));
    case 40: return normal_subgroup_40(std::move(g));
    case 42: return normal_subgroup_42(std::move(g));
    case 48: return normal_subgroup_48(std::move(g));
    case 54: return normal_subgroup_54(std::move(g));
    case 56: return normal_subgroup_56(std::move(g));
    default: break;
  }
  auto factors = factorize(n);
  if (factors.size() == 1)
    return normal_subgroup_prime_power(factors[0].first, factors[0].second, std::move(g));
  if (factors.size() == 2 && factors[0].second == 1 && factors[1].second == 1)
    return normal_subgroup_pq(factors[0].first, factors[1].first, std::move(g));
  if (factors.size() == 2) {
    // exactly one exponent is 2 for the remaining shapes below 60
    if (factors[0].second == 2 && factors[1].second == 1)
      return normal_subgroup_ppq(factors[0].first, factors[1].first, std::move(g));
    if (factors[0].second == 1 && factors[1].second == 2)
      return normal_subgroup_ppq(factors[1].first, factors[0].first, std::move(g));
  }
  throw TheoremViolation("order shape dispatch missed a composite order below 60");
}

Subgroup normal_subgroup(GroupPtr g) { return normal_subgroup_witness(std::move(g)).subgroup; }

SimplicityVerdict check_simple(GroupPtr g) {
  const std::size_t n = g->order();
  if (n == 1) return {false, std::nullopt, "trivial"};
  if (is_prime(n)) return {true, std::nullopt, "prime-order"};
  if (n < 60) {
    NormalWitness w = normal_subgroup_witness(std::move(g));
    return {false, std::move(w.subgroup), std::move(w.method)};
  }
  if (g->is_abelian()) {
    std::size_t p = least_prime_divisor(n);
    std::optional<u32> x = element_of_order(p, *g);
    if (!x) throw TheoremViolation("no element of least prime order in an abelian group");
    Subgroup w = cyclic_subgroup(*x, std::move(g));
    if (!is_proper_normal(w))
      throw TheoremViolation("cyclic subgroup of an abelian group is not normal");
    return {false, std::move(w), "abelian"};
  }
  Subgroup z = center(g);
  if (z.order() > 1) {
    if (!is_proper_normal(z))
      throw TheoremViolation("nontrivial center of a non-abelian group is not proper normal");
    return {false, std::move(z), "center"};
  }
  std::optional<Subgroup> w = class_sum_witness(g);
  if (w) return {false, std::move(*w), "class-sums"};
  return {true, std::nullopt, "class-sums"};
}

SimplicityVerdict check_alt5_simple() {
  Subgroup a5 = alt_group(5);
  GroupPtr g = a5.group_ptr();
  if (g->order() != 60) throw TheoremViolation("alt(5) does not have order 60");
  Subgroup z = center(g);
  if (z.order() != 1) throw TheoremViolation("alt(5) has a nontrivial center");
  std::vector<std::vector<u32>> classes = conjugacy_classes(*g);
  std::vector<std::size_t> lens;
  for (const auto& c : classes) lens.push_back(c.size());
  std::vector<std::size_t> sorted = lens;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<std::size_t>{12, 12, 15, 20})
    throw TheoremViolation("alt(5) class sizes are not {12, 12, 15, 20}");
  if (!normal_order_candidates(*g).empty())
    throw TheoremViolation("alt(5) admits a feasible normal-subgroup order");
  return {true, std::nullopt, "class-sums"};
}

namespace {

void add(std::vector<CorpusEntry>& out, std::string name, GroupPtr g) {
  out.push_back({std::move(name), std::move(g)});
}

GroupPtr named_product(const GroupPtr& a, const GroupPtr& b) {
  return direct_product(*a, *b);
}

}  // namespace

std::vector<CorpusEntry> under60_corpus() {
  std::vector<CorpusEntry> out;
  GroupPtr z2 = cyclic_group(2), z3 = cyclic_group(3), z5 = cyclic_group(5);
  GroupPtr z7 = cyclic_group(7);
  GroupPtr s3 = sym_group(3), s4 = sym_group(4);
  GroupPtr a4 = alt_group(4).group_ptr();
  GroupPtr d4 = dihedral_group(4), d5 = dihedral_group(5), d9 = dihedral_group(9);

  for (std::size_t n = 4; n < 60; ++n) {
    if (is_prime(n)) continue;
    add(out, "cyclic(" + std::to_string(n) + ")", cyclic_group(n));
    if (n % 2 == 0 && n >= 6)
      add(out, "dihedral(" + std::to_string(n / 2) + ")", dihedral_group(n / 2));
    switch (n) {
      case 4: add(out, "cyclic(2)xcyclic(2)", named_product(z2, z2)); break;
      case 6: add(out, "sym(3)", s3); break;
      case 8:
        add(out, "cyclic(2)xcyclic(4)", named_product(z2, cyclic_group(4)));
        add(out, "cyclic(2)xcyclic(2)xcyclic(2)",
            direct_product(*named_product(z2, z2), *z2));
        break;
      case 9: add(out, "cyclic(3)xcyclic(3)", named_product(z3, z3)); break;
      case 12:
        add(out, "alt(4)", a4);
        add(out, "cyclic(2)xcyclic(6)", named_product(z2, cyclic_group(6)));
        break;
      case 16:
        add(out, "cyclic(4)xcyclic(4)", named_product(cyclic_group(4), cyclic_group(4)));
        add(out, "cyclic(2)xcyclic(8)", named_product(z2, cyclic_group(8)));
        break;
      case 18: add(out, "cyclic(3)xsym(3)", named_product(z3, s3)); break;
      case 24:
        add(out, "sym(4)", s4);
        add(out, "cyclic(2)xalt(4)", named_product(z2, a4));
        break;
      case 25: add(out, "cyclic(5)xcyclic(5)", named_product(z5, z5)); break;
      case 27: add(out, "cyclic(3)xcyclic(9)", named_product(z3, cyclic_group(9))); break;
      case 32:
        add(out, "cyclic(2)xcyclic(16)", named_product(z2, cyclic_group(16)));
        add(out, "cyclic(4)xcyclic(8)", named_product(cyclic_group(4), cyclic_group(8)));
        break;
      case 36:
        add(out, "sym(3)xsym(3)", named_product(s3, s3));
        add(out, "cyclic(6)xcyclic(6)", named_product(cyclic_group(6), cyclic_group(6)));
        break;
      case 40: add(out, "cyclic(5)xdihedral(4)", named_product(z5, d4)); break;
      case 42: add(out, "cyclic(7)xsym(3)", named_product(z7, s3)); break;
      case 48: add(out, "cyclic(2)xsym(4)", named_product(z2, s4)); break;
      case 50: add(out, "cyclic(5)xdihedral(5)", named_product(z5, d5)); break;
      case 54: add(out, "cyclic(3)xdihedral(9)", named_product(z3, d9)); break;
      case 56: add(out, "cyclic(7)xdihedral(4)", named_product(z7, d4)); break;
      default: break;
    }
  }
  return out;
}

std::vector<SweepLine> classify_under_60() {
  std::vector<SweepLine> out;
  for (const CorpusEntry& e : under60_corpus()) {
    NormalWitness w = normal_subgroup_witness(e.group);
    out.push_back({e.group->order(), e.name, w.subgroup.order(), w.method});
  }
  return out;
}

}  // namespace gt
