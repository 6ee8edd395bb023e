#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gt/error.hpp"

namespace gt {

using u32 = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Finite group as a validated Cayley table over element indices 0..n-1.
// Index 0 is always the identity. Tables are row-major: op(i,j) = table[i*n+j].
class Group {
public:
  // Validates labels and table; throws Error naming the violated invariant.
  // Orders above 5040 are refused unless force is set. Associativity is
  // checked in full up to order 120 and spot-checked deterministically above.
  static GroupPtr make(std::vector<std::string> labels,
                       std::vector<u32> table, bool force = false);
  static GroupPtr make(std::vector<std::string> labels,
                       const std::vector<std::vector<u32>>& rows, bool force = false);

  std::size_t order() const { return order_; }
  u32 op(u32 i, u32 j) const { return table_[static_cast<std::size_t>(i) * order_ + j]; }
  u32 inverse(u32 i) const { return inverse_[i]; }
  // a * s * a^-1
  u32 conj(u32 s, u32 a) const { return op(op(a, s), inverse(a)); }
  std::span<const u32> row(u32 i) const {
    return {table_.data() + static_cast<std::size_t>(i) * order_, order_};
  }
  const std::vector<u32>& table() const { return table_; }
  const std::vector<u32>& inverses() const { return inverse_; }
  const std::string& label(u32 i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_abelian() const;
  // Least k >= 1 with x^k = identity.
  u32 element_order(u32 x) const;

private:
  Group() = default;
  static GroupPtr make_checked(std::vector<std::string> labels,
                               std::vector<u32> table, bool cap);

  std::size_t order_ = 0;
  std::vector<std::string> labels_;
  std::vector<u32> table_;
  std::vector<u32> inverse_;

  friend GroupPtr make_group_trusted(std::vector<std::string>, std::vector<u32>);
};

// Construction that skips the order cap (not the validation); for tables
// derived from an already-admitted group, e.g. subgroups and quotients.
GroupPtr make_group_trusted(std::vector<std::string> labels, std::vector<u32> table);

constexpr std::size_t kOrderCap = 5040;
constexpr std::size_t kFullCheckLimit = 120;

GroupPtr cyclic_group(std::size_t n, bool force = false);
// Dihedral group of the regular n-gon, order 2n; requires n >= 3.
GroupPtr dihedral_group(std::size_t n, bool force = false);
// Pairs (a,b) with (a,b)*(c,d) = (ac,bd); index of (a,b) is a*|h|+b.
GroupPtr direct_product(const Group& g, const Group& h, bool force = false);

// Subgroup of a parent group: strictly increasing parent indices starting at
// the identity, plus the induced group on those elements.
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<u32> indices, GroupPtr induced)
      : parent_(std::move(parent)), indices_(std::move(indices)),
        induced_(std::move(induced)) {}

  const Group& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  // The subgroup as a group in its own right.
  const Group& group() const { return *induced_; }
  const GroupPtr& group_ptr() const { return induced_; }
  const std::vector<u32>& indices() const { return indices_; }
  std::size_t order() const { return indices_.size(); }
  std::size_t index_in_parent() const { return parent_->order() / order(); }
  bool contains(u32 parent_index) const;
  bool same_elements(const Subgroup& other) const { return indices_ == other.indices_; }

private:
  GroupPtr parent_;
  std::vector<u32> indices_;
  GroupPtr induced_;
};

// Builds the subgroup on the given parent indices. Sorts and dedups; throws
// Error if the set misses the identity or is not closed (naming a violating
// pair), then builds and validates the induced table.
Subgroup subgroup_from_elements(std::vector<u32> indices, GroupPtr parent);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup whole_subgroup(GroupPtr g);

// First element of order n in index order, if any.
std::optional<u32> element_of_order(std::size_t n, const Group& g);
// Cyclic subgroup generated by x.
Subgroup cyclic_subgroup(u32 x, GroupPtr g);

// Left coset of h: members sorted ascending; representative is the minimum.
struct Coset {
  std::vector<u32> members;
  u32 representative() const { return members.front(); }
};

// All left cosets of h in its parent, sorted by representative; the identity
// coset (h itself) comes first.
std::vector<Coset> left_cosets(const Subgroup& h);
bool is_normal(const Subgroup& h);
// Quotient group by a normal subgroup; element i is the i-th left coset,
// labeled by its representative's label. Throws Error if h is not normal.
GroupPtr quotient_group(const Subgroup& h);
// Maps parent index -> coset index for the cosets of h, plus the cosets.
struct CosetDecomposition {
  std::vector<Coset> cosets;
  std::vector<u32> coset_of;
};
CosetDecomposition coset_decomposition(const Subgroup& h);

// Pulls a subgroup q of the quotient g/h back to a subgroup of g (the union
// of q's cosets). q must be a subgroup of quotient_group(h).
Subgroup lift_subgroup(const Subgroup& q, const Subgroup& h);

Subgroup center(GroupPtr g);
// Non-central conjugacy classes, each sorted ascending, classes ordered by
// least member.
std::vector<std::vector<u32>> conjugacy_classes(const Group& g);
// Class of a single element (sorted), central elements give a singleton.
std::vector<u32> conjugacy_class_of(u32 s, const Group& g);

// Both arguments must share a parent.
Subgroup group_intersection(const Subgroup& h1, const Subgroup& h2);
// Product set {x*y : x in h1, y in h2}, sorted, duplicates removed. Not
// generally a subgroup.
std::vector<u32> product_set(const Subgroup& h1, const Subgroup& h2);

// Re-express h (a subgroup of g) as a subgroup of k.group(), where k is a
// subgroup of the same g whose element set contains h's.
Subgroup rebase_subgroup(const Subgroup& h, const Subgroup& k);
// Inverse direction: inner is a subgroup of k.group(); returns the same
// elements as a subgroup of k's parent.
Subgroup embed_subgroup(const Subgroup& inner, const Subgroup& k);

// Map between groups given by the image of every source element.
class GroupMap {
public:
  GroupMap(GroupPtr source, GroupPtr target, std::vector<u32> image);
  const Group& source() const { return *source_; }
  const GroupPtr& source_ptr() const { return source_; }
  const Group& target() const { return *target_; }
  const GroupPtr& target_ptr() const { return target_; }
  const std::vector<u32>& image() const { return image_; }
  u32 apply(u32 x) const { return image_[x]; }

private:
  GroupPtr source_, target_;
  std::vector<u32> image_;
};

bool is_homomorphism(const GroupMap& m);
// Kernel as a subgroup of the source; throws Error if m is not a homomorphism.
Subgroup map_kernel(const GroupMap& m);
// Injective homomorphism (the embedding notion used throughout).
bool is_endomorphism(const GroupMap& m);
// Factors m through source/kernel; the result is injective on the quotient.
GroupMap quotient_map(const GroupMap& m);

// Small number-theory helpers used across the engine.
bool is_prime(std::size_t n);
std::size_t least_prime_divisor(std::size_t n);
std::vector<std::pair<std::size_t, unsigned>> factorize(std::size_t n);

}  // namespace gt
