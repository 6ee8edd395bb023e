#pragma once

#include <optional>
#include <vector>

#include "gt/action.hpp"
#include "gt/group.hpp"

namespace gt {

// True if every element's order is a power of p (equivalently here, |h| is).
bool is_p_group(const Subgroup& h, std::size_t p);

// Given a p-subgroup h whose normalizer index is divisible by p, returns a
// p-subgroup of the parent with order p*|h| that contains h: lifts a cyclic
// order-p subgroup of normalizer(h)/h back through the quotient.
Subgroup extend_p_subgroup(const Subgroup& h, std::size_t p);

// Maximal p-subgroup built by repeated extension from the trivial subgroup.
// |result| is the exact power of p dividing |g| (rechecked as a theorem).
Subgroup sylow_subgroup(GroupPtr g, std::size_t p);

struct SylowReport {
  std::size_t prime;
  Subgroup sylow;
  std::size_t conjugate_count;       // np, the number of conjugates
  std::size_t index_in_group;        // [G : sylow]
  std::size_t index_in_normalizer;   // [N(sylow) : sylow]
};

// Runs sylow_subgroup and rechecks the classical facts: the subgroup is a
// p-group, p does not divide either index, np == [G : N], np divides the
// index, and np = 1 mod p. Any failure throws TheoremViolation.
SylowReport sylow_report(GroupPtr g, std::size_t p);

// First subgroup in the list whose element set contains h's.
std::optional<Subgroup> find_supergroup(const Subgroup& h, const std::vector<Subgroup>& list);

struct OrbitLengthEntry {
  std::size_t conjugate;     // index into subgroup_conjugates(m)
  std::size_t orbit_length;  // orbit size under h's subaction
  bool contains_h;
};

// Restricts the conjugation action on m's conjugates to the p-subgroup h and
// classifies each conjugate's orbit: length 1 exactly when the conjugate
// contains h, and a multiple of p otherwise. The dichotomy is rechecked; a
// counterexample throws TheoremViolation.
std::vector<OrbitLengthEntry> orbit_length_classifier(const Subgroup& m,
                                                      const Subgroup& h,
                                                      std::size_t p);

}  // namespace gt
