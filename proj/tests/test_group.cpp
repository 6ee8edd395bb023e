#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <sstream>

#include "gt/group.hpp"
#include "gt/groupio.hpp"
#include "gt/perm.hpp"
#include "helpers.hpp"

using gt::u32;

namespace {

std::vector<std::string> digit_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const gt::Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("trivial and small cyclic tables") {
  auto z1 = gt::cyclic_group(1);
  CHECK(z1->order() == 1);
  CHECK(z1->op(0, 0) == 0);
  CHECK(z1->is_abelian());

  auto z3 = gt::cyclic_group(3);
  CHECK(z3->table() == std::vector<u32>{0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK(z3->label(2) == "2");
  CHECK(z3->inverse(1) == 2);
  CHECK(z3->inverse(0) == 0);
}

TEST_CASE("make rejects malformed input") {
  // wrong table size
  CHECK(error_of([] {
          gt::Group::make(digit_labels(2), std::vector<u32>{0, 1, 1});
        }).find("expected 4") != std::string::npos);

  // entry out of range
  CHECK(error_of([] {
          gt::Group::make(digit_labels(2), std::vector<u32>{0, 1, 1, 7});
        }).find("out of range") != std::string::npos);

  // duplicate labels
  CHECK(error_of([] {
          gt::Group::make({"e", "e"}, std::vector<u32>{0, 1, 1, 0});
        }).find("more than once") != std::string::npos);

  // whitespace in a label
  CHECK(error_of([] {
          gt::Group::make({"e", "a b"}, std::vector<u32>{0, 1, 1, 0});
        }).find("whitespace") != std::string::npos);

  // empty
  CHECK_THROWS_AS(gt::Group::make(digit_labels(0), std::vector<u32>{}), gt::Error);
}

TEST_CASE("make reports the first violated invariant") {
  // row 0 must be the identity
  CHECK(error_of([] {
          gt::Group::make(digit_labels(2), std::vector<u32>{1, 0, 0, 1});
        }).find("identity") != std::string::npos);

  // Latin row violation: row 1 repeats 0
  CHECK(error_of([] {
          gt::Group::make(digit_labels(3),
                          std::vector<u32>{0, 1, 2, 1, 0, 0, 2, 0, 1});
        }).find("row 1 repeats value 0") != std::string::npos);

  // Latin column violation: rows are all permutations but column 0 repeats 1
  CHECK(error_of([] {
          gt::Group::make(digit_labels(3),
                          std::vector<u32>{0, 1, 2, 1, 2, 0, 1, 0, 2});
        }).find("column") != std::string::npos);

  // Latin square but not associative: fails first at (1,1,2)
  std::string msg = error_of([] {
    gt::Group::make(digit_labels(5), std::vector<std::vector<u32>>{{0, 1, 2, 3, 4},
                                                                   {1, 0, 3, 4, 2},
                                                                   {2, 3, 4, 0, 1},
                                                                   {3, 4, 1, 2, 0},
                                                                   {4, 2, 0, 1, 3}});
  });
  CHECK(msg.find("associativity") != std::string::npos);
  CHECK(msg.find("(1, 1, 2)") != std::string::npos);
}

TEST_CASE("order cap and force") {
  CHECK_THROWS_AS(gt::cyclic_group(gt::kOrderCap + 1), gt::Error);
  auto big = gt::cyclic_group(gt::kOrderCap + 1, true);
  CHECK(big->order() == gt::kOrderCap + 1);
  // sampled associativity path (order > 120) accepts a genuine group
  auto z121 = gt::cyclic_group(121);
  CHECK(z121->op(120, 1) == 0);
}

TEST_CASE("dihedral groups") {
  CHECK_THROWS_AS(gt::dihedral_group(2), gt::Error);
  auto d3 = gt::dihedral_group(3);
  CHECK(d3->order() == 6);
  CHECK_FALSE(d3->is_abelian());
  CHECK(d3->label(0) == "r0");
  CHECK(d3->label(3) == "s0");
  // reflections square to the identity, rotations compose additively
  for (u32 i = 3; i < 6; ++i) CHECK(d3->op(i, i) == 0);
  CHECK(d3->op(1, 2) == 0);
  // same element-order census as sym(3)
  CHECK(gtt::order_census(*d3) == gtt::order_census(*gt::sym_group(3)));
}

TEST_CASE("direct products") {
  auto z2 = gt::cyclic_group(2);
  auto z4 = gt::cyclic_group(4);
  auto k4 = gt::direct_product(*z2, *z2);
  CHECK(k4->order() == 4);
  CHECK(k4->is_abelian());
  CHECK(k4->label(1) == "(0,1)");
  CHECK(k4->label(2) == "(1,0)");
  for (u32 x = 0; x < 4; ++x) CHECK(k4->element_order(x) == (x == 0 ? 1 : 2));

  // Z2 x Z4 is abelian, dihedral(4) is not, same order 8
  auto z2z4 = gt::direct_product(*z2, *z4);
  CHECK(z2z4->is_abelian());
  CHECK_FALSE(gt::dihedral_group(4)->is_abelian());
  CHECK(gtt::order_census(*z2z4) != gtt::order_census(*gt::dihedral_group(4)));
}

TEST_CASE("element orders") {
  auto z6 = gt::cyclic_group(6);
  CHECK(z6->element_order(0) == 1);
  CHECK(z6->element_order(1) == 6);
  CHECK(z6->element_order(2) == 3);
  CHECK(z6->element_order(3) == 2);
  CHECK(gt::element_of_order(2, *z6) == u32{3});
  CHECK(gt::element_of_order(2, *gt::cyclic_group(4)) == u32{2});
  CHECK_FALSE(gt::element_of_order(5, *z6).has_value());
  CHECK(gt::element_of_order(1, *z6) == u32{0});
}

TEST_CASE("subgroup_from_elements validates") {
  auto z3 = gt::cyclic_group(3);
  CHECK(error_of([&] {
          gt::subgroup_from_elements({0, 1}, z3);
        }).find("not closed") != std::string::npos);
  CHECK(error_of([&] {
          gt::subgroup_from_elements({1, 2}, z3);
        }).find("identity") != std::string::npos);

  auto z6 = gt::cyclic_group(6);
  auto h = gt::subgroup_from_elements({0, 4, 2, 2}, z6);  // dedup + sort
  CHECK(h.indices() == std::vector<u32>{0, 2, 4});
  CHECK(h.order() == 3);
  CHECK(h.index_in_parent() == 2);
  CHECK(h.contains(4));
  CHECK_FALSE(h.contains(3));
  CHECK(h.group().order() == 3);
  CHECK(h.group().label(1) == "2");  // induced labels come from the parent
}

TEST_CASE("klein four subgroup of sym(4)") {
  auto s4 = gt::sym_group(4);
  auto v = gt::subgroup_from_elements({0, 7, 16, 23}, s4);
  CHECK(v.group().label(0) == "[0,1,2,3]");
  CHECK(v.group().label(1) == "[1,0,3,2]");
  CHECK(v.group().label(2) == "[2,3,0,1]");
  CHECK(v.group().label(3) == "[3,2,1,0]");
  CHECK(v.group().is_abelian());
  CHECK(gt::is_normal(v));
  auto census = gtt::order_census(v.group());
  CHECK(census[1] == 1);
  CHECK(census[2] == 3);
}

TEST_CASE("cyclic subgroups") {
  auto z6 = gt::cyclic_group(6);
  CHECK(gt::cyclic_subgroup(2, z6).indices() == std::vector<u32>{0, 2, 4});
  CHECK(gt::cyclic_subgroup(0, z6).indices() == std::vector<u32>{0});
  CHECK(gt::cyclic_subgroup(1, z6).order() == 6);
  CHECK(gt::trivial_subgroup(z6).order() == 1);
  CHECK(gt::whole_subgroup(z6).order() == 6);
}

TEST_CASE("left cosets partition and obey Lagrange") {
  auto s3 = gt::sym_group(3);
  auto a3 = gt::alt_group(3);
  auto cosets = gt::left_cosets(a3);
  REQUIRE(cosets.size() == 2);
  CHECK(cosets[0].members == std::vector<u32>{0, 3, 4});
  CHECK(cosets[1].members == std::vector<u32>{1, 2, 5});
  CHECK(cosets[0].representative() == 0);

  for (auto g : {gt::cyclic_group(12), gt::dihedral_group(6), gt::sym_group(4)})
    for (u32 x = 0; x < g->order(); ++x) {
      auto h = gt::cyclic_subgroup(x, g);
      auto dec = gt::coset_decomposition(h);
      CHECK(dec.cosets.size() * h.order() == g->order());
      std::set<u32> covered;
      for (std::size_t c = 0; c < dec.cosets.size(); ++c)
        for (u32 m : dec.cosets[c].members) {
          CHECK(dec.coset_of[m] == c);
          covered.insert(m);
        }
      CHECK(covered.size() == g->order());
    }
}

TEST_CASE("normality") {
  auto s3 = gt::sym_group(3);
  CHECK(gt::is_normal(gt::alt_group(3)));
  CHECK_FALSE(gt::is_normal(gt::subgroup_from_elements({0, 1}, s3)));
  CHECK(gt::is_normal(gt::trivial_subgroup(s3)));
  CHECK(gt::is_normal(gt::whole_subgroup(s3)));
  // everything is normal in an abelian group
  auto z12 = gt::cyclic_group(12);
  for (u32 x = 0; x < 12; ++x) CHECK(gt::is_normal(gt::cyclic_subgroup(x, z12)));
}

TEST_CASE("quotient groups") {
  auto z6 = gt::cyclic_group(6);
  auto q = gt::quotient_group(gt::subgroup_from_elements({0, 3}, z6));
  CHECK(q->order() == 3);
  CHECK(q->table() == gt::cyclic_group(3)->table());

  auto s3 = gt::sym_group(3);
  auto q2 = gt::quotient_group(gt::alt_group(3));
  CHECK(q2->order() == 2);
  CHECK(q2->table() == std::vector<u32>{0, 1, 1, 0});
  CHECK(q2->label(0) == "[0,1,2]");  // representative's label
  CHECK(q2->label(1) == "[0,2,1]");

  CHECK_THROWS_AS(gt::quotient_group(gt::subgroup_from_elements({0, 1}, s3)),
                  gt::Error);
}

TEST_CASE("lift_subgroup inverts the quotient") {
  auto z12 = gt::cyclic_group(12);
  auto h = gt::subgroup_from_elements({0, 6}, z12);
  auto q = gt::quotient_group(h);
  auto qsub = gt::whole_subgroup(q);
  CHECK(gt::lift_subgroup(gt::whole_subgroup(q), h).order() == 12);
  CHECK(gt::lift_subgroup(gt::trivial_subgroup(q), h).indices() ==
        std::vector<u32>{0, 6});
  // every subgroup of the quotient lifts to |q| * |h| elements containing h
  for (u32 x = 0; x < q->order(); ++x) {
    auto qs = gt::cyclic_subgroup(x, q);
    auto lifted = gt::lift_subgroup(qs, h);
    CHECK(lifted.order() == qs.order() * h.order());
    CHECK(lifted.contains(6));
    CHECK(gt::is_normal(lifted));  // subgroups of an abelian quotient lift normal here
  }
}

TEST_CASE("center") {
  CHECK(gt::center(gt::sym_group(3)).indices() == std::vector<u32>{0});
  CHECK(gt::center(gt::dihedral_group(4)).indices() == std::vector<u32>{0, 2});
  CHECK(gt::center(gt::cyclic_group(8)).order() == 8);
  CHECK(gt::center(gt::sym_group(4)).order() == 1);
}

TEST_CASE("conjugacy classes match the brute-force oracle") {
  auto s3 = gt::sym_group(3);
  auto classes = gt::conjugacy_classes(*s3);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<u32>{1, 2, 5});  // transpositions
  CHECK(classes[1] == std::vector<u32>{3, 4});     // 3-cycles

  for (auto g : {gt::sym_group(4), gt::dihedral_group(4), gt::dihedral_group(5),
                 gt::cyclic_group(9), gt::direct_product(*gt::cyclic_group(2),
                                                         *gt::sym_group(3))}) {
    auto got = gt::conjugacy_classes(*g);
    auto want = gtt::naive_classes(*g, false);
    std::sort(want.begin(), want.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    CHECK(got == want);
  }
  CHECK(gt::conjugacy_classes(*gt::cyclic_group(30)).empty());
}

TEST_CASE("conjugacy_class_of") {
  auto s3 = gt::sym_group(3);
  CHECK(gt::conjugacy_class_of(1, *s3) == std::vector<u32>{1, 2, 5});
  CHECK(gt::conjugacy_class_of(0, *s3) == std::vector<u32>{0});
  CHECK(gt::conjugacy_class_of(3, *s3) == std::vector<u32>{3, 4});
}

TEST_CASE("intersection and product sets") {
  auto z12 = gt::cyclic_group(12);
  auto h4 = gt::cyclic_subgroup(3, z12);  // {0,3,6,9}
  auto h6 = gt::cyclic_subgroup(2, z12);  // {0,2,4,6,8,10}
  CHECK(gt::group_intersection(h4, h6).indices() == std::vector<u32>{0, 6});
  CHECK(gt::product_set(h4, h6).size() == 12);  // 4*6/2

  // both subgroups must hang off the same parent instance
  auto a3 = gt::alt_group(3);
  auto t = gt::subgroup_from_elements({0, 1}, a3.parent_ptr());
  CHECK(gt::group_intersection(t, a3).indices() == std::vector<u32>{0});
  CHECK(gt::product_set(t, a3).size() == 6);
  // subgroups of distinct parent instances are rejected even when isomorphic
  CHECK_THROWS_AS(
      gt::group_intersection(t, gt::subgroup_from_elements({0, 1}, gt::sym_group(3))),
      gt::Error);

  // |h1 h2| * |h1 n h2| == |h1| * |h2|
  auto s4 = gt::sym_group(4);
  for (u32 x : {u32{1}, u32{7}, u32{9}})
    for (u32 y : {u32{3}, u32{16}}) {
      auto h1 = gt::cyclic_subgroup(x, s4);
      auto h2 = gt::cyclic_subgroup(y, s4);
      CHECK(gt::product_set(h1, h2).size() *
                gt::group_intersection(h1, h2).order() ==
            h1.order() * h2.order());
    }
}

TEST_CASE("rebase and embed round-trip") {
  auto a4 = gt::alt_group(4);
  auto s4 = a4.parent_ptr();
  auto v = gt::subgroup_from_elements({0, 7, 16, 23}, s4);
  auto v_in_a4 = gt::rebase_subgroup(v, a4);
  CHECK(v_in_a4.order() == 4);
  CHECK(v_in_a4.parent_ptr() == a4.group_ptr());
  auto back = gt::embed_subgroup(v_in_a4, a4);
  CHECK(back.indices() == v.indices());
  CHECK(gt::is_normal(v_in_a4));

  // rebasing into a subgroup that misses an element fails
  auto c3 = gt::cyclic_subgroup(3, s4);  // a 3-cycle's subgroup, disjoint from v
  CHECK_THROWS_AS(gt::rebase_subgroup(v, c3), gt::Error);
}

TEST_CASE("homomorphisms and kernels") {
  auto s3 = gt::sym_group(3);
  auto z2 = gt::cyclic_group(2);

  // sign map: even -> 0, odd -> 1
  std::vector<u32> sign(6);
  auto perms = gt::all_perms(3);
  for (u32 i = 0; i < 6; ++i) sign[i] = static_cast<u32>(gt::parity(perms[i]));
  gt::GroupMap m(s3, z2, sign);
  CHECK(gt::is_homomorphism(m));
  CHECK_FALSE(gt::is_endomorphism(m));  // not injective
  CHECK(gt::map_kernel(m).indices() == std::vector<u32>{0, 3, 4});

  auto qm = gt::quotient_map(m);
  CHECK(qm.source().order() == 2);
  CHECK(gt::is_endomorphism(qm));
  CHECK(qm.apply(0) == 0);
  CHECK(qm.apply(1) == 1);

  // not a homomorphism: f(1+1) != f(1)+f(1) in Z4 -> Z2
  gt::GroupMap bad(gt::cyclic_group(4), z2, {0, 1, 1, 1});
  CHECK_FALSE(gt::is_homomorphism(bad));
  CHECK_THROWS_AS(gt::map_kernel(bad), gt::Error);

  // trivial map is a homomorphism with full kernel
  gt::GroupMap triv(s3, z2, std::vector<u32>(6, 0));
  CHECK(gt::is_homomorphism(triv));
  CHECK(gt::map_kernel(triv).order() == 6);
}

TEST_CASE("number theory helpers") {
  CHECK_FALSE(gt::is_prime(1));
  CHECK(gt::is_prime(2));
  CHECK(gt::is_prime(59));
  CHECK_FALSE(gt::is_prime(57));
  CHECK(gt::least_prime_divisor(12) == 2);
  CHECK(gt::least_prime_divisor(35) == 5);
  CHECK(gt::factorize(1).empty());
  CHECK(gt::factorize(12) ==
        std::vector<std::pair<std::size_t, unsigned>>{{2, 2}, {3, 1}});
  CHECK(gt::factorize(59) ==
        std::vector<std::pair<std::size_t, unsigned>>{{59, 1}});
}

TEST_CASE("group files round-trip byte for byte") {
  for (auto g : {gt::cyclic_group(6), gt::sym_group(3), gt::dihedral_group(5)}) {
    std::string text = gt::group_to_string(*g);
    std::istringstream in(text);
    auto back = gt::read_group(in);
    CHECK(back->order() == g->order());
    CHECK(back->table() == g->table());
    CHECK(back->labels() == g->labels());
    CHECK(gt::group_to_string(*back) == text);
  }
}

TEST_CASE("group file canonical bytes") {
  CHECK(gt::group_to_string(*gt::cyclic_group(3)) ==
        "GROUPFILE 1\n"
        "order 3\n"
        "elems 0 1 2\n"
        "table\n"
        "0 1 2\n"
        "1 2 0\n"
        "2 0 1\n");
}

TEST_CASE("group file reader tolerates whitespace and rejects corruption") {
  std::istringstream messy(
      "GROUPFILE   1\n  order 2\nelems   e\tx\ntable\n 0  1 \n1\n0\n");
  auto g = gt::read_group(messy);
  CHECK(g->order() == 2);
  CHECK(g->label(1) == "x");

  auto fails = [](const std::string& text, const char* needle) {
    std::istringstream in(text);
    std::string msg = error_of([&] { gt::read_group(in); });
    CHECK(msg.find(needle) != std::string::npos);
  };
  fails("NOTAGROUP 1\norder 1\nelems e\ntable\n0\n", "GROUPFILE");
  fails("GROUPFILE 2\norder 1\nelems e\ntable\n0\n", "version");
  fails("GROUPFILE 1\norder 0\nelems\ntable\n", "order");
  fails("GROUPFILE 1\norder 2\nelems e x\ntable\n0 1\n1\n", "table");
  fails("GROUPFILE 1\norder 2\nelems e x\ntable\n0 1\n1 0\nextra\n", "trailing");
  // well-formed file, invalid group
  fails("GROUPFILE 1\norder 2\nelems e x\ntable\n1 0\n0 1\n", "identity");
}
