#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gt/group.hpp"

namespace gt {

// One-line permutation of {0..n-1}: p[k] is where k is sent.
using Perm = std::vector<u32>;

bool is_perm(const Perm& p);
Perm identity_perm(std::size_t n);

// (x o y)[k] = x[y[k]]; sizes must match.
Perm compose_perm(const Perm& x, const Perm& y);
// Left-to-right fold of compose_perm over the list; identity for an empty list.
Perm compose_perm_list(const std::vector<Perm>& list, std::size_t n);
Perm inverse_perm(const Perm& x);

// Swaps i and j, fixes the rest; requires i < j < n.
Perm transposition(std::size_t i, std::size_t j, std::size_t n);
bool is_transposition(const Perm& p);

// Least point not fixed by p, or p.size() for the identity.
std::size_t least_moved_point(const Perm& p);

// Factors p into transpositions whose composition (via compose_perm_list)
// equals p. Each factor moves a strictly later least point than the one
// before, so the identity factors into the empty list.
std::vector<Perm> transposition_factors(const Perm& p);

std::uint64_t inversion_count(const Perm& p);
// 0 for even, 1 for odd (parity of the inversion count).
int parity(const Perm& p);

// All permutations of {0..n-1} in lexicographic order; identity first.
std::vector<Perm> all_perms(std::size_t n);
// Rank of p in that order.
std::size_t perm_lex_rank(const Perm& p);

// Whitespace-free token form "[1,0,2]", used for element labels and files.
std::string perm_token(const Perm& p);
// Display form "[1 0 2]", the expression-language literal syntax.
std::string perm_display(const Perm& p);

// Symmetric group on n points, elements in lexicographic order. n <= 6 by
// default; n == 7 needs force (the table has 25M entries); n >= 8 is refused.
GroupPtr sym_group(std::size_t n, bool force = false);
// Alternating group as the subgroup of even permutations of sym_group(n).
Subgroup alt_group(std::size_t n, bool force = false);

}  // namespace gt
