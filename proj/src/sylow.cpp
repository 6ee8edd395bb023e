#include "gt/sylow.hpp"

#include <algorithm>

namespace gt {

bool is_p_group(const Subgroup& h, std::size_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  std::size_t n = h.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

Subgroup extend_p_subgroup(const Subgroup& h, std::size_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (!is_p_group(h, p)) throw Error("extend requires a p-subgroup");
  Subgroup n = normalizer(h);
  if ((n.order() / h.order()) % p != 0)
    throw Error("cannot extend: p does not divide the normalizer index");
  Subgroup h_in_n = rebase_subgroup(h, n);
  if (!is_normal(h_in_n))
    throw TheoremViolation("subgroup is not normal in its own normalizer");
  GroupPtr quot = quotient_group(h_in_n);
  std::optional<u32> x = element_of_order(p, *quot);
  if (!x)
    throw TheoremViolation("no element of order p in a quotient of order divisible by p");
  Subgroup lifted = lift_subgroup(cyclic_subgroup(*x, quot), h_in_n);
  Subgroup out = embed_subgroup(lifted, n);
  if (out.order() != p * h.order())
    throw TheoremViolation("extension did not multiply the order by p");
  if (!std::includes(out.indices().begin(), out.indices().end(),
                     h.indices().begin(), h.indices().end()))
    throw TheoremViolation("extension does not contain the original subgroup");
  return out;
}

Subgroup sylow_subgroup(GroupPtr g, std::size_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  Subgroup h = trivial_subgroup(std::move(g));
  while (true) {
    Subgroup n = normalizer(h);
    if ((n.order() / h.order()) % p != 0) break;
    h = extend_p_subgroup(h, p);
  }
  std::size_t full = h.parent().order();
  std::size_t expected = 1;
  while (full % p == 0) {
    full /= p;
    expected *= p;
  }
  if (h.order() != expected)
    throw TheoremViolation("maximal p-subgroup order is not the full power of p");
  return h;
}

SylowReport sylow_report(GroupPtr g, std::size_t p) {
  Subgroup m = sylow_subgroup(std::move(g), p);
  Subgroup n = normalizer(m);
  std::size_t np = subgroup_conjugates(m).size();
  std::size_t index_in_group = m.parent().order() / m.order();
  std::size_t index_in_normalizer = n.order() / m.order();
  if (!is_p_group(m, p))
    throw TheoremViolation("Sylow subgroup is not a p-group");
  if (index_in_group % p == 0)
    throw TheoremViolation("p divides the index of the Sylow subgroup");
  if (index_in_normalizer % p == 0)
    throw TheoremViolation("p divides the normalizer index of the Sylow subgroup");
  if (np != m.parent().order() / n.order())
    throw TheoremViolation("conjugate count differs from the normalizer index");
  if (index_in_group % np != 0)
    throw TheoremViolation("conjugate count does not divide the index");
  if (np % p != 1)
    throw TheoremViolation("conjugate count is not 1 mod p");
  return SylowReport{p, std::move(m), np, index_in_group, index_in_normalizer};
}

std::optional<Subgroup> find_supergroup(const Subgroup& h,
                                        const std::vector<Subgroup>& list) {
  for (const Subgroup& c : list)
    if (std::includes(c.indices().begin(), c.indices().end(),
                      h.indices().begin(), h.indices().end()))
      return c;
  return std::nullopt;
}

std::vector<OrbitLengthEntry> orbit_length_classifier(const Subgroup& m,
                                                      const Subgroup& h,
                                                      std::size_t p) {
  if (m.parent_ptr() != h.parent_ptr())
    throw Error("classifier requires subgroups of the same parent");
  if (!is_p_group(h, p)) throw Error("classifier requires a p-subgroup");
  GroupAction full = conj_sub_action(m);
  GroupAction restricted = subaction(full, h);
  std::vector<Subgroup> conjs = subgroup_conjugates(m);
  std::vector<std::size_t> orbit_len(full.domain_size(), 0);
  for (const std::vector<u32>& orb : orbits(restricted))
    for (u32 s : orb) orbit_len[s] = orb.size();

  std::vector<OrbitLengthEntry> out;
  out.reserve(conjs.size());
  for (std::size_t c = 0; c < conjs.size(); ++c) {
    bool contains =
        std::includes(conjs[c].indices().begin(), conjs[c].indices().end(),
                      h.indices().begin(), h.indices().end());
    std::size_t len = orbit_len[c];
    if (contains != (len == 1))
      throw TheoremViolation("fixed conjugates are not exactly those containing h");
    if (len != 1 && len % p != 0)
      throw TheoremViolation("moved conjugate orbit length is not divisible by p");
    out.push_back({c, len, contains});
  }
  return out;
}

}  // namespace gt
