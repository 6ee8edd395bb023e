#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gt/group.hpp"

namespace gt {

// 1 < |h| < |parent| and h is normal.
bool is_proper_normal(const Subgroup& h);

// Orders a proper normal subgroup could have in a group with trivial center:
// sums of non-central class sizes plus one (for the identity) that properly
// divide the group order. Sorted, deduplicated. Throws Error if the center is
// nontrivial, since then the counting argument does not apply.
std::vector<std::size_t> normal_order_candidates(const Group& g);

struct NormalWitness {
  Subgroup subgroup;
  std::string method;
};

// A proper normal subgroup for any composite order 4 <= n < 60, found by the
// order-shape dispatch (prime powers, pq, p^2 q, and the eight remaining
// orders as individual cases). The witness is rechecked before being
// returned; a non-normal result throws TheoremViolation. Prime and
// out-of-range orders throw Error.
NormalWitness normal_subgroup_witness(GroupPtr g);
Subgroup normal_subgroup(GroupPtr g);

// Individual branches, callable directly when the order shape is known.
NormalWitness normal_subgroup_prime_power(std::size_t p, unsigned k, GroupPtr g);
NormalWitness normal_subgroup_pq(std::size_t p, std::size_t q, GroupPtr g);
// |g| = p^2 q; returns the Sylow-p subgroup when normal, else the Sylow-q.
NormalWitness normal_subgroup_ppq(std::size_t p, std::size_t q, GroupPtr g);
NormalWitness normal_subgroup_24(GroupPtr g);

struct SimplicityVerdict {
  bool simple;
  std::optional<Subgroup> witness;  // present exactly when a proper normal subgroup exists
  std::string method;
};

// Total over every admitted group: explicit witnesses below order 60, then
// abelian/center shortcuts, then the complete class-union search (a normal
// subgroup is a union of whole conjugacy classes containing the identity).
SimplicityVerdict check_simple(GroupPtr g);

// Builds alt(5) and proves it simple by the counting argument: trivial
// center, class sizes summing per the known partition, and no class-size
// subset sum forming a proper divisor. Any deviation throws TheoremViolation.
SimplicityVerdict check_alt5_simple();

struct CorpusEntry {
  std::string name;
  GroupPtr group;
};

// Sample groups of every composite order 4 <= n < 60: cyclics, dihedrals,
// and assorted products and permutation groups. Orders ascend.
std::vector<CorpusEntry> under60_corpus();

struct SweepLine {
  std::size_t order;
  std::string name;
  std::size_t witness_order;
  std::string method;
};

// normal_subgroup_witness over the whole corpus.
std::vector<SweepLine> classify_under_60();

}  // namespace gt
