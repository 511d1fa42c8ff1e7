#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include "cycgraph/group.hpp"

using namespace cycgraph;

namespace {

std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (Element x = 0; x < g.order(); ++x) ++h[element_order(g, x)];
  return h;
}

GroupErrorKind error_of(const std::vector<std::vector<Element>>& t) {
  try {
    from_cayley_table(t);
  } catch (const GroupError& e) {
    return e.kind();
  }
  FAIL("no error");
  return GroupErrorKind::io_error;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cycgraph_" + name)).string();
}

}  // namespace

TEST_CASE("family orders") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(12).order() == 12);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(dihedral(n).order() == 2 * n);
  for (std::size_t m = 2; m <= 12; ++m) CHECK(dicyclic(m).order() == 4 * m);
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    fact *= n;
    CHECK(symmetric(n).order() == fact);
    if (n >= 2) CHECK(alternating(n).order() == fact / 2);
  }
  CHECK(elementary_abelian(3, 3).order() == 27);
  CHECK(direct_product(cyclic(4), cyclic(2)).order() == 8);
}

TEST_CASE("constructed groups validate") {
  for (const auto& g : {cyclic(9), dihedral(5), dicyclic(3), symmetric(4), alternating(5),
                        elementary_abelian(2, 4), direct_product(cyclic(6), dihedral(3))})
    CHECK_NOTHROW(validate(g));
}

TEST_CASE("element orders") {
  auto z12 = cyclic(12);
  CHECK(element_order(z12, 2) == 6);
  CHECK(element_order(z12, z12.identity()) == 1);

  // Generalized quaternion groups have exactly one involution.
  for (std::size_t m : {2, 4, 8}) CHECK(order_histogram(dicyclic(m))[2] == 1);

  auto a5 = order_histogram(alternating(5));
  CHECK(a5 == std::map<std::size_t, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  auto d4 = order_histogram(dihedral(4));
  CHECK(d4 == std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}});
}

TEST_CASE("relabel preserves the order multiset") {
  auto g = cyclic(6);
  std::vector<Element> perm{3, 5, 0, 1, 4, 2};
  auto h = relabel(g, perm);
  CHECK_NOTHROW(validate(h));
  CHECK(order_histogram(h) == order_histogram(g));
  CHECK(h.identity() == 3);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) CHECK(h.mul(perm[a], perm[b]) == perm[g.mul(a, b)]);
  std::vector<Element> bad{0, 0, 1, 2, 3, 4};
  CHECK_THROWS_AS(relabel(g, bad), GroupError);
}

TEST_CASE("cayley table validation order") {
  CHECK(error_of({{0, 1}, {1, 0, 1}}) == GroupErrorKind::bad_shape);
  CHECK(error_of({{0, 1}, {0, 1}}) == GroupErrorKind::not_latin_square);
  CHECK(error_of({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}) == GroupErrorKind::no_identity);
  CHECK(error_of({{0, 1, 2, 3, 4},
                  {1, 0, 3, 4, 2},
                  {2, 4, 0, 1, 3},
                  {3, 2, 4, 0, 1},
                  {4, 3, 1, 2, 0}}) == GroupErrorKind::not_associative);
  CHECK(error_of({{0, 5}, {1, 0}}) == GroupErrorKind::bad_shape);
}

TEST_CASE("order cap") {
  GroupLimits small;
  small.order_cap = 100;
  CHECK_THROWS_AS(cyclic(101, small), GroupError);
  try {
    symmetric(6, small);
    FAIL("expected cap error");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupErrorKind::order_cap_exceeded);
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(cyclic(0), GroupError);
  CHECK_THROWS_AS(dicyclic(1), GroupError);
  CHECK_THROWS_AS(elementary_abelian(4, 2), GroupError);
}

TEST_CASE("cycle notation") {
  auto p = parse_cycles("(0 1 2)(3 4)", 5);
  CHECK(p == Permutation{1, 2, 0, 4, 3});
  CHECK(parse_cycles("", 3) == Permutation{0, 1, 2});
  CHECK_THROWS_AS(parse_cycles("(0 5)", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("(0 1", 4), GroupError);
  CHECK_THROWS_AS(parse_cycles("(0 1 0)", 4), GroupError);
}

TEST_CASE("permutation closure") {
  auto s3 = from_permutation_generators(3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)});
  CHECK(s3.order() == 6);
  CHECK_NOTHROW(validate(s3));
  auto trivial = from_permutation_generators(4, {});
  CHECK(trivial.order() == 1);
}

TEST_CASE("file round trip") {
  const auto path = temp_path("d5.cayley");
  auto g = dihedral(5);
  write_cayley_file(g, path);
  auto h = read_cayley_file(path);
  REQUIRE(h.order() == g.order());
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) CHECK(h.mul(a, b) == g.mul(a, b));
  std::remove(path.c_str());

  const auto perm = temp_path("s4.perm");
  {
    std::ofstream f(perm);
    f << "4\n(0 1)\n\n(0 1 2 3)\n";
  }
  CHECK(read_perm_file(perm).order() == 24);
  {
    std::ofstream f(perm);
    f << "4\n(0 9)\n";
  }
  CHECK_THROWS_AS(read_perm_file(perm), GroupError);
  std::remove(perm.c_str());

  try {
    read_cayley_file(temp_path("does-not-exist"));
    FAIL("expected io error");
  } catch (const GroupError& e) {
    CHECK(e.kind() == GroupErrorKind::io_error);
  }
}

TEST_CASE("large groups run without a table") {
  GroupLimits limits;
  limits.table_limit = 16;
  auto g = cyclic(100, limits);
  CHECK_FALSE(g.has_table());
  CHECK(g.mul(60, 50) == 10);
  CHECK(g.inverse(30) == 70);
  CHECK(g.power(7, 100) == g.identity());
}
