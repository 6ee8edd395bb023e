#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gt/perm.hpp"
#include "gt/sylow.hpp"
#include "helpers.hpp"

using gt::u32;

namespace {

// largest power of p dividing n
std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t out = 1;
  while (n % p == 0) {
    out *= p;
    n /= p;
  }
  return out;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& pk : gt::factorize(n)) out.push_back(pk.first);
  return out;
}

}  // namespace

TEST_CASE("is_p_group") {
  auto s4 = gt::sym_group(4);
  auto v = gt::subgroup_from_elements({0, 7, 16, 23}, s4);
  CHECK(gt::is_p_group(v, 2));
  CHECK_FALSE(gt::is_p_group(v, 3));
  CHECK(gt::is_p_group(gt::trivial_subgroup(s4), 2));
  CHECK(gt::is_p_group(gt::trivial_subgroup(s4), 3));
  CHECK_FALSE(gt::is_p_group(gt::alt_group(4), 2));
}

TEST_CASE("extend_p_subgroup grows by a factor of p") {
  auto s4 = gt::sym_group(4);
  auto t = gt::trivial_subgroup(s4);
  auto h2 = gt::extend_p_subgroup(t, 2);
  CHECK(h2.order() == 2);
  auto h4 = gt::extend_p_subgroup(h2, 2);
  CHECK(h4.order() == 4);
  auto h8 = gt::extend_p_subgroup(h4, 2);
  CHECK(h8.order() == 8);
  CHECK(gt::is_p_group(h8, 2));
  for (u32 i : h4.indices()) CHECK(h8.contains(i));

  // extension stops exactly at the Sylow order
  CHECK_THROWS_AS(gt::extend_p_subgroup(h8, 2), gt::Error);
}

TEST_CASE("sylow_subgroup reaches the full p-part") {
  auto check_orders = [](gt::GroupPtr g) {
    for (std::size_t p : prime_divisors(g->order())) {
      auto syl = gt::sylow_subgroup(g, p);
      CHECK(syl.order() == p_part(g->order(), p));
      CHECK(gt::is_p_group(syl, p));
    }
  };
  check_orders(gt::sym_group(4));
  check_orders(gt::alt_group(4).group_ptr());
  check_orders(gt::dihedral_group(6));
  check_orders(gt::dihedral_group(15));
  check_orders(gt::cyclic_group(36));
  check_orders(gt::direct_product(*gt::sym_group(3), *gt::sym_group(3)));
}

TEST_CASE("sylow_subgroup edge cases") {
  // a prime not dividing the order has the trivial subgroup as its Sylow
  CHECK(gt::sylow_subgroup(gt::sym_group(4), 5).order() == 1);
  CHECK_THROWS_AS(gt::sylow_subgroup(gt::sym_group(4), 6), gt::Error);
  CHECK_THROWS_AS(gt::sylow_subgroup(gt::sym_group(4), 1), gt::Error);
}

TEST_CASE("sylow_report checks the counting theorems") {
  auto s4 = gt::sym_group(4);
  auto r2 = gt::sylow_report(s4, 2);
  CHECK(r2.prime == 2);
  CHECK(r2.sylow.order() == 8);
  CHECK(r2.conjugate_count == 3);
  CHECK(r2.index_in_group == 3);
  CHECK(r2.index_in_normalizer == 1);

  auto r3 = gt::sylow_report(s4, 3);
  CHECK(r3.sylow.order() == 3);
  CHECK(r3.conjugate_count == 4);
  CHECK(r3.index_in_group == 8);
  CHECK(r3.index_in_normalizer == 2);

  // alt(5): six Sylow-5s, ten Sylow-3s, five Sylow-2s
  auto a5 = gt::alt_group(5).group_ptr();
  CHECK(gt::sylow_report(a5, 5).conjugate_count == 6);
  CHECK(gt::sylow_report(a5, 3).conjugate_count == 10);
  CHECK(gt::sylow_report(a5, 2).conjugate_count == 5);

  // abelian: single conjugate
  auto z36 = gt::cyclic_group(36);
  CHECK(gt::sylow_report(z36, 2).conjugate_count == 1);
  CHECK(gt::sylow_report(z36, 3).index_in_group == 4);
}

TEST_CASE("sylow counting invariants over a mixed corpus") {
  for (auto g : {gt::dihedral_group(7), gt::dihedral_group(10), gt::cyclic_group(56),
                 gt::direct_product(*gt::cyclic_group(5), *gt::dihedral_group(4))})
    for (std::size_t p : prime_divisors(g->order())) {
      auto r = gt::sylow_report(g, p);
      CHECK(r.conjugate_count % p == 1);
      CHECK(r.index_in_group % r.conjugate_count == 0);
      CHECK(r.index_in_group % p != 0);
      CHECK(r.index_in_normalizer % p != 0);
    }
}

TEST_CASE("find_supergroup") {
  auto s4 = gt::sym_group(4);
  auto syl = gt::sylow_subgroup(s4, 2);
  auto conjs = gt::subgroup_conjugates(syl);
  auto t = gt::cyclic_subgroup(7, s4);  // a 2-element subgroup
  auto found = gt::find_supergroup(t, conjs);
  REQUIRE(found.has_value());
  for (u32 i : t.indices()) CHECK(found->contains(i));

  auto c3 = gt::cyclic_subgroup(3, s4);  // order 3 fits no 2-group
  CHECK_FALSE(gt::find_supergroup(c3, conjs).has_value());
}

TEST_CASE("orbit_length_classifier dichotomy") {
  auto s4 = gt::sym_group(4);
  auto syl2 = gt::sylow_subgroup(s4, 2);
  auto entries = gt::orbit_length_classifier(syl2, syl2, 2);
  REQUIRE(entries.size() == 3);
  std::size_t fixed = 0;
  for (const auto& e : entries) {
    if (e.contains_h) {
      CHECK(e.orbit_length == 1);
      ++fixed;
    } else {
      CHECK(e.orbit_length % 2 == 0);
    }
  }
  CHECK(fixed == 1);  // only the Sylow itself contains itself

  // a smaller p-subgroup against the Sylow conjugates
  auto t = gt::cyclic_subgroup(7, s4);
  for (const auto& e : gt::orbit_length_classifier(syl2, t, 2))
    CHECK((e.orbit_length == 1) == e.contains_h);

  // Sylow-3s of alt(4) under a Sylow-3: one fixed, the rest in 3-orbits
  auto a4 = gt::alt_group(4).group_ptr();
  auto syl3 = gt::sylow_subgroup(a4, 3);
  auto entries3 = gt::orbit_length_classifier(syl3, syl3, 3);
  REQUIRE(entries3.size() == 4);
  std::size_t ones = 0, threes = 0;
  for (const auto& e : entries3) {
    if (e.orbit_length == 1) ++ones;
    if (e.orbit_length == 3) ++threes;
  }
  CHECK(ones == 1);
  CHECK(threes == 3);  // the other three conjugates share one 3-orbit
}
