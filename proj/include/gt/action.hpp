#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gt/group.hpp"
#include "gt/perm.hpp"

namespace gt {

// Group action tabulated in full: a |G| x |domain| matrix with
// act(x, s) = table[x*m + s]. Construction validates that the identity fixes
// the domain, every element acts as a permutation, and the table respects the
// group operation (fully up to order 120, deterministically sampled above).
class GroupAction {
public:
  static GroupAction make(GroupPtr g, std::vector<std::string> domain,
                          std::vector<u32> table);
  static GroupAction make(GroupPtr g, std::vector<std::string> domain,
                          const std::function<u32(u32, u32)>& rule);

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<std::string>& domain() const { return domain_; }
  std::size_t domain_size() const { return domain_.size(); }
  u32 act(u32 x, u32 s) const {
    return table_[static_cast<std::size_t>(x) * domain_.size() + s];
  }
  std::span<const u32> row(u32 x) const {
    return {table_.data() + static_cast<std::size_t>(x) * domain_.size(), domain_.size()};
  }
  const std::vector<u32>& table() const { return table_; }

private:
  GroupAction(GroupPtr g, std::vector<std::string> domain, std::vector<u32> table)
      : group_(std::move(g)), domain_(std::move(domain)), table_(std::move(table)) {}

  GroupPtr group_;
  std::vector<std::string> domain_;
  std::vector<u32> table_;
};

// G acting on itself by conjugation; domain point s is element s.
GroupAction conjugacy_action(GroupPtr g);
// G acting on itself by left translation; domain point s is element s.
GroupAction self_action(GroupPtr g);
// G acting on the left cosets of h (domain indices follow left_cosets order).
GroupAction lcoset_action(const Subgroup& h);
// Same domain, action restricted to the subgroup's elements; the acting group
// is h.group().
GroupAction subaction(const GroupAction& a, const Subgroup& h);

// Orbit of domain point s: sorted domain indices.
std::vector<u32> orbit(u32 s, const GroupAction& a);
// All orbits, ordered by least member; they partition the domain.
std::vector<std::vector<u32>> orbits(const GroupAction& a);
// Elements fixing s, as a subgroup of the acting group.
Subgroup stabilizer(u32 s, const GroupAction& a);
// Least x with act(x, s) == r; throws Error if r is not in s's orbit.
u32 find_actor(u32 r, u32 s, const GroupAction& a);

// The subgroup {a x a^-1 : x in h}.
Subgroup conjugate_subgroup(const Subgroup& h, u32 a);
// All distinct conjugates of h in first-discovery order (conjugating by
// element 0 first, so entry 0 is h itself).
std::vector<Subgroup> subgroup_conjugates(const Subgroup& h);
// G acting on the conjugates of h; domain index c is subgroup_conjugates(h)[c].
GroupAction conj_sub_action(const Subgroup& h);
// Least a with conjugate_subgroup(h, a) == c; throws Error if c is not a
// conjugate of h.
u32 conjugating_element(const Subgroup& c, const Subgroup& h);
// Elements a with conjugate_subgroup(h, a) == h. Equals the stabilizer of
// domain point 0 under conj_sub_action(h); computed directly.
Subgroup normalizer(const Subgroup& h);

// The permutation of the domain induced by element x.
Perm induced_perm(u32 x, const GroupAction& a);
// The homomorphism G -> sym(domain) collecting those permutations. Materializes
// the full symmetric group, so the domain obeys the sym_group size gates.
GroupMap sym_homomorphism(const GroupAction& a, bool force = false);

// Checks that left translation embeds g into the permutations of its own
// element set: identity row, act(op(x,y)) = act(x) o act(y) for all pairs,
// and injectivity. Works at any admitted order since the symmetric group is
// never materialized.
bool left_translation_embeds(const Group& g);

// is_normal(h), but when h's index equals the least prime divisor of the
// parent's order the result is rechecked as a theorem: such subgroups must be
// normal, so a false answer throws TheoremViolation.
bool index_least_prime_normal_check(const Subgroup& h);

}  // namespace gt
