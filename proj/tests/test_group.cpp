#include <map>
#include <numeric>

#include "doctest.h"
#include "gammapath/classify.hpp"
#include "gammapath/error.hpp"
#include "gammapath/group.hpp"
#include "helpers.hpp"

using namespace gammapath;
using testing_support::c;
using testing_support::c2;

namespace {

// Quaternion group as signed units: index = 2*unit + sign, units 1,i,j,k.
CayleyTable quaternion_table() {
  // unit products: u*v = sign * w
  const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  CayleyTable t(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int s = (a % 2 + b % 2 + sign[a / 2][b / 2]) % 2;
      t[a][b] = static_cast<std::size_t>(2 * prod[a / 2][b / 2] + s);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("cyclic arithmetic") {
  const Group z4 = Group::cyclic(4);
  CHECK(z4.add(c(3), c(3)) == c(2));
  for (const Elem& g : z4.elements()) CHECK(z4.is_zero(z4.add(g, z4.neg(g))));
  CHECK(z4.multiple(-1, c(1)) == c(3));
  CHECK(z4.order() == 4);
  CHECK_THROWS_AS(z4.require(c(4)), InvalidArgument);
  CHECK_THROWS_AS(z4.require(c2(1, 1)), InvalidArgument);
  CHECK_THROWS_AS(Group::cyclic_product({1}), InvalidArgument);
}

TEST_CASE("cayley tables: quaternion products and axiom checking") {
  const Group q8 = Group::cayley(quaternion_table(), 0);
  CHECK_FALSE(q8.is_abelian());
  const Elem i = Elem::from_index(2);
  const Elem j = Elem::from_index(4);
  CHECK(q8.add(i, j) == Elem::from_index(6));  // i*j = k
  CHECK(q8.add(j, i) == Elem::from_index(7));  // j*i = -k
  CHECK(*q8.element_order(i) == 4);
  auto broken = quaternion_table();
  std::swap(broken[2][3], broken[2][4]);
  CHECK_THROWS_AS(Group::cayley(broken, 0), InvalidArgument);
  CHECK_THROWS_AS(classify_zero_path_ep(q8), InvalidArgument);
}

TEST_CASE("symmetric group S3 table") {
  const Group s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  std::map<std::int64_t, int> orders;
  for (const Elem& g : s3.elements()) ++orders[*s3.element_order(g)];
  CHECK(orders == std::map<std::int64_t, int>{{1, 1}, {2, 3}, {3, 2}});
}

TEST_CASE("element orders and Lagrange") {
  CHECK(*Group::cyclic(4).element_order(c(2)) == 2);
  CHECK(*Group::cyclic(9).element_order(c(3)) == 3);
  const Group z = Group::integers();
  CHECK_FALSE(z.element_order(Elem::from_integer(5)).has_value());
  CHECK(*z.element_order(z.zero()) == 1);
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{64}, {2, 4, 8}, {3, 9}, {2, 2, 2, 2, 2, 2}, {6, 10}}) {
    const Group g = Group::cyclic_product(orders);
    for (const Elem& x : g.elements()) CHECK(g.order() % static_cast<std::size_t>(*g.element_order(x)) == 0);
  }
}

TEST_CASE("cyclic subgroups") {
  const Group z4 = Group::cyclic(4);
  CHECK(z4.cyclic_subgroup(c(2)) == std::vector<Elem>{c(0), c(2)});
  CHECK_FALSE(z4.subgroup_contains(c(2), c(1)));
  const Group z9 = Group::cyclic(9);
  CHECK(z9.cyclic_subgroup(c(6)) == std::vector<Elem>{c(0), c(6), c(3)});
  CHECK(z9.subgroup_contains(c(6), c(3)));
  CHECK(z9.cyclic_subgroup(c(0)) == std::vector<Elem>{c(0)});
  CHECK_THROWS(Group::integers().cyclic_subgroup(Elem::from_integer(1)));
}

TEST_CASE("elements of order at most two") {
  CHECK(Group::cyclic(4).elements_of_order_at_most_2() == std::vector<Elem>{c(0), c(2)});
  CHECK(Group::cyclic_product({2, 2}).elements_of_order_at_most_2().size() == 4);
  CHECK(Group::cyclic(5).elements_of_order_at_most_2() == std::vector<Elem>{c(0)});
  const Group z = Group::integers();
  CHECK(z.elements_of_order_at_most_2() == std::vector<Elem>{z.zero()});
}

TEST_CASE("invariant factors") {
  CHECK(Group::cyclic_product({2, 3}).invariant_factors() == std::vector<std::int64_t>{6});
  CHECK(Group::cyclic_product({4, 6}).invariant_factors() == std::vector<std::int64_t>{2, 12});
  CHECK(Group::cyclic_product({2, 2, 4}).invariant_factors() == std::vector<std::int64_t>{2, 2, 4});
  CHECK(Group::cyclic_product({3, 5}).is_cyclic_of_order(15));
}

TEST_CASE("zero-path classification") {
  CHECK(classify_zero_path_ep(Group::cyclic(4)));
  CHECK_FALSE(classify_zero_path_ep(Group::cyclic(6)));
  CHECK(classify_zero_path_ep(Group::cyclic_product({2, 2, 2})));
  CHECK(classify_zero_path_ep(Group::cyclic(7)));
  CHECK_FALSE(classify_zero_path_ep(Group::cyclic(8)));
  CHECK_FALSE(classify_zero_path_ep(Group::cyclic_product({2, 4})));
  CHECK_FALSE(classify_zero_path_ep(Group::integers()));
  // Z/2 x Z/3 presented as a product is still Z/6.
  CHECK_FALSE(classify_zero_path_ep(Group::cyclic_product({2, 3})));
}

TEST_CASE("ell-path classification") {
  CHECK(classify_ell_path_ep(Group::cyclic(4), c(2)));
  CHECK(classify_ell_path_ep(Group::cyclic(4), c(0)));
  CHECK_FALSE(classify_ell_path_ep(Group::cyclic(4), c(1)));
  CHECK_FALSE(classify_ell_path_ep(Group::cyclic(8), c(4)));
  CHECK(classify_ell_path_ep(Group::cyclic(5), c(3)));
  CHECK(classify_ell_path_ep(Group::cyclic(2), c(1)));
  CHECK_FALSE(classify_ell_path_ep(Group::cyclic_product({2, 2}), c2(1, 0)));
  CHECK(classify_ell_path_ep(Group::cyclic_product({2, 2}), c2(0, 0)));
  CHECK_FALSE(classify_ell_path_ep(Group::integers(), Elem::from_integer(3)));
}

TEST_CASE("halving") {
  CHECK(*Group::cyclic(9).find_halving(c(3)) == c(6));
  CHECK_FALSE(Group::cyclic(4).find_halving(c(1)).has_value());
  for (std::int64_t m : {2, 5, 8, 12}) CHECK(Group::cyclic(m).find_halving(c(0)) == c(0));
  // Odd order: doubling is a bijection.
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{3}, {5}, {7}, {9}, {3, 3}, {15}, {27}, {3, 9}, {25}}) {
    const Group g = Group::cyclic_product(orders);
    for (const Elem& x : g.elements()) {
      const auto h = g.find_halving(x);
      REQUIRE(h.has_value());
      CHECK(g.add(*h, *h) == x);
    }
  }
}

TEST_CASE("bad pairs") {
  const Group z8 = Group::cyclic(8);
  const auto bad = find_bad_pair(z8);
  REQUIRE(bad.has_value());
  CHECK(bad->g1 == c(1));
  CHECK(bad->g2 == c(4));
  CHECK(quotient_coset_order(z8, c(1), c(4)) == 4);

  const Group z33 = Group::cyclic_product({3, 3});
  const auto bad33 = find_bad_pair(z33);
  REQUIRE(bad33.has_value());
  CHECK(*z33.element_order(bad33->g1) == 3);
  CHECK_FALSE(z33.subgroup_contains(bad33->g1, bad33->g2));
  CHECK(bad33->reason == BadPairCase::kOddPrimeDivisor);

  CHECK_FALSE(find_bad_pair(Group::cyclic(4)).has_value());
  const auto bad24 = find_bad_pair(Group::cyclic_product({2, 4}));
  REQUIRE(bad24.has_value());
  CHECK(bad24->reason == BadPairCase::kNoncyclicTwoGroup);
  CHECK(is_bad_pair(Group::cyclic_product({2, 4}), bad24->g1, bad24->g2));
}

TEST_CASE("sumsets") {
  const Group z5 = Group::cyclic(5);
  CHECK(z5.sumset({c(0), c(1)}, {c(0), c(1)}) == std::set<Elem>{c(0), c(1), c(2)});
  const Group z3 = Group::cyclic(3);
  CHECK(z3.sumset({c(0), c(1)}, {c(0), c(2)}) == std::set<Elem>{c(0), c(1), c(2)});
  const std::set<Elem> y{c(1), c(3), c(4)};
  CHECK(z5.sumset({c(0)}, y) == y);
}
